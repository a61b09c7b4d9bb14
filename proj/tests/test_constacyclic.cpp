#include <gtest/gtest.h>

#include <set>

#include "eaqmds/constacyclic.hpp"
#include "eaqmds/ea.hpp"
#include "eaqmds/numtheory.hpp"
#include "oracles.hpp"

using namespace eaqmds;
using oracle::Gen;
using u64 = std::uint64_t;

namespace {

// Minimum weight over all nonzero codewords, one per projective point.
std::size_t brute_min_weight(const ConstacyclicCode& c) {
  const Field& F = *c.gen_matrix.field();
  const std::size_t k = c.dim, n = c.spec.n;
  std::size_t best = n + 1;
  std::vector<std::uint32_t> msg(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    // msg = (0..0, 1, free...) with the 1 at `lead`.
    const std::size_t free = k - lead - 1;
    u64 total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= F.size();
    for (u64 code = 0; code < total; ++code) {
      std::vector<Elem> word(n, Field::zero());
      auto add_row = [&](std::size_t row, Elem s) {
        for (std::size_t j = 0; j < n; ++j) word[j] = F.add(word[j], F.mul(s, c.gen_matrix(row, j)));
      };
      add_row(lead, Field::one());
      u64 x = code;
      for (std::size_t i = 0; i < free; ++i) {
        const Elem s{static_cast<std::uint32_t>(x % F.size())};
        x /= F.size();
        if (s != Field::zero()) add_row(lead + 1 + i, s);
      }
      const auto w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return e != Field::zero(); }));
      best = std::min(best, w);
    }
  }
  return best;
}

ConstacyclicCode build(u64 q, u64 r, u64 n, const std::vector<u64>& reps) {
  const auto spec = CodeSpec::make(q, r, n);
  return build_code(Tower::make(spec), DefiningSet::from_cosets(spec, reps));
}

// Evaluate the generator, lifted to the top field, at omega^j.
Elem eval_top(const Tower& tw, const Poly& g, u64 j) {
  const Field& T = *tw.top;
  const Elem x = T.pow(tw.omega, j);
  Elem acc = Field::zero();
  for (std::size_t i = g.coeffs().size(); i-- > 0;) acc = T.add(T.mul(acc, x), tw.embedding.apply(g.coeffs()[i]));
  return acc;
}

void check_code_invariants(const Tower& tw, const ConstacyclicCode& c) {
  const Field& B = *tw.base;
  const std::size_t n = c.spec.n;
  ASSERT_EQ(static_cast<std::size_t>(c.gen_poly.degree()), c.t.size());
  ASSERT_EQ(c.dim, n - c.t.size());
  ASSERT_EQ(c.gen_poly.leading(), Field::one());
  // g | x^n - eta.
  std::vector<Elem> xn(n + 1, Field::zero());
  xn[0] = B.neg(tw.eta);
  xn[n] = Field::one();
  ASSERT_TRUE(divmod(Poly(tw.base, xn), c.gen_poly).second.is_zero());
  // Roots are exactly omega^j for j in T.
  for (u64 j = 0; j < c.spec.rn; ++j) {
    if (!c.spec.in_omega(j)) continue;
    ASSERT_EQ(eval_top(tw, c.gen_poly, j) == Field::zero(), c.t.contains(j)) << "j=" << j;
  }
  ASSERT_EQ(c.gen_matrix.rows(), c.dim);
  ASSERT_EQ(c.check_matrix.rows(), n - c.dim);
  ASSERT_EQ(rank(c.gen_matrix), c.dim);
  ASSERT_EQ(rank(c.check_matrix), n - c.dim);
  if (c.dim && c.dim < n) {
    ASSERT_TRUE((c.gen_matrix * c.check_matrix.transpose()).is_zero());
  }
  // Rows of G are shifts of g.
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ASSERT_EQ(c.gen_matrix(i, j), j >= i ? c.gen_poly.coeff(j - i) : Field::zero());
}

}  // namespace

TEST(Tower, OmegaHasOrderRnAndEtaOrderR) {
  for (auto [q, r, n] : {std::tuple<u64, u64, u64>{5, 3, 8}, {5, 2, 26}, {13, 2, 17}, {7, 8, 50}, {3, 4, 10}, {9, 2, 41}}) {
    const auto spec = CodeSpec::make(q, r, n);
    const auto tw = Tower::make(spec);
    EXPECT_EQ(tw.top->size(), *checked_pow(q, static_cast<unsigned>(2 * spec.m)));
    EXPECT_EQ(tw.top->order(tw.omega), spec.rn);
    EXPECT_EQ(tw.base->order(tw.eta), r);
    EXPECT_EQ(tw.embedding.apply(tw.eta), tw.top->pow(tw.omega, n));
    EXPECT_EQ(tw.gamma, tw.top->primitive());
  }
  EXPECT_THROW(Tower::make(CodeSpec::make(43, 2, 1025)), BudgetExceeded);
}

TEST(BuildCode, Example8x5) {
  const auto spec = CodeSpec::make(5, 3, 8);
  const auto tw = Tower::make(spec);
  const auto c = build_code(tw, DefiningSet::from_cosets(spec, {1, 4, 7}));
  EXPECT_EQ(c.dim, 5u);
  EXPECT_EQ(c.gen_poly.degree(), 3);
  EXPECT_EQ(c.bch_delta, 4u);
  check_code_invariants(tw, c);
}

TEST(BuildCode, Example26x19) {
  const auto spec = CodeSpec::make(5, 2, 26);
  const auto tw = Tower::make(spec);
  const auto c = build_code(tw, DefiningSet::from_cosets(spec, {13, 15, 17, 19}));
  EXPECT_EQ(c.t.size(), 7u);
  EXPECT_EQ(c.dim, 19u);
  EXPECT_EQ(c.bch_delta, 8u);
  check_code_invariants(tw, c);
  const auto mds = is_classical_mds(c);
  EXPECT_EQ(mds.verdict, MdsVerdict::Mds);
  EXPECT_TRUE(mds.by_bch);
}

TEST(BuildCode, FullDefiningSetGivesXnMinusEta) {
  const auto spec = CodeSpec::make(5, 3, 8);
  const auto tw = Tower::make(spec);
  const auto c = build_code(tw, DefiningSet::from_cosets(spec, omega_set(spec)));
  EXPECT_EQ(c.dim, 0u);
  std::vector<Elem> xn(9, Field::zero());
  xn[0] = tw.base->neg(tw.eta);
  xn[8] = Field::one();
  EXPECT_EQ(c.gen_poly, Poly(tw.base, xn));
  EXPECT_EQ(c.bch_delta, 9u);
  EXPECT_EQ(exact_distance_small(c).status, DistanceResult::Status::Degenerate);
  EXPECT_EQ(is_classical_mds(c).verdict, MdsVerdict::Degenerate);
}

TEST(BuildCode, Errors) {
  const auto spec = CodeSpec::make(5, 2, 26);
  const auto tw = Tower::make(spec);
  EXPECT_THROW(build_code(tw, DefiningSet::from_elements(spec, {})), InvalidInput);
  const auto other = CodeSpec::make(5, 3, 8);
  EXPECT_THROW(build_code(tw, DefiningSet::from_cosets(other, {1})), InvalidInput);
  // Dropping one element of {11, 15} leaves a set that is not a union of cosets.
  EXPECT_THROW(build_code(tw, DefiningSet::from_elements(spec, {7, 9, 11, 13, 17, 19})), DescentFailure);
  try {
    build_code(tw, DefiningSet::from_elements(spec, {15}));
    FAIL() << "expected DescentFailure";
  } catch (const DescentFailure& e) {
    EXPECT_NE(std::string(e.what()).find("not in F_{q^2}"), std::string::npos);
  }
}

TEST(BuildCode, EverySingleCosetDescends) {
  for (auto [q, r, n] : {std::tuple<u64, u64, u64>{5, 3, 8}, {5, 2, 26}, {13, 2, 17}, {7, 8, 50}, {3, 4, 10},
                         {5, 6, 8},  {11, 3, 40}, {9, 2, 41}, {7, 2, 25}, {5, 2, 13}}) {
    const auto spec = CodeSpec::make(q, r, n);
    const auto tw = Tower::make(spec);
    for (const auto& cs : partition(spec)) {
      const auto c = build_code(tw, DefiningSet::from_cosets(spec, {cs.leader}));
      check_code_invariants(tw, c);
    }
  }
}

TEST(BuildCode, RandomCosetUnionsSatisfyInvariants) {
  Gen gen(51);
  for (auto [q, r, n] : {std::tuple<u64, u64, u64>{5, 2, 26}, {3, 4, 10}, {7, 8, 50}, {11, 4, 30}, {4, 5, 17}}) {
    const auto spec = CodeSpec::make(q, r, n);
    const auto tw = Tower::make(spec);
    const auto parts = partition(spec);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<u64> reps;
      for (const auto& cs : parts)
        if (gen.coin()) reps.push_back(cs.leader);
      if (reps.empty()) reps.push_back(parts.front().leader);
      const auto c = build_code(tw, DefiningSet::from_cosets(spec, reps));
      check_code_invariants(tw, c);
    }
  }
}

TEST(Bch, Examples) {
  const auto s52 = CodeSpec::make(5, 2, 26);
  EXPECT_EQ(bch_delta(DefiningSet::from_elements(s52, {7, 9, 11, 13, 15, 17, 19})), 8u);
  const auto s24 = CodeSpec::make(5, 3, 8);
  EXPECT_EQ(bch_delta(DefiningSet::from_elements(s24, {1, 4, 7})), 4u);
  EXPECT_EQ(bch_delta(DefiningSet::from_elements(s24, {13})), 2u);
  // Indices 0, 2, 3: the longest run is {2, 3}.
  EXPECT_EQ(bch_delta(DefiningSet::from_elements(s24, {1, 7, 10})), 3u);
  // Wrap-around: indices 7, 0.
  EXPECT_EQ(bch_delta(DefiningSet::from_elements(s24, {22, 1})), 3u);
}

TEST(Bch, MatchesBruteRun) {
  Gen gen(52);
  for (auto [q, r, n] : {std::tuple<u64, u64, u64>{5, 2, 26}, {5, 3, 8}, {7, 8, 50}, {13, 2, 17}}) {
    const auto spec = CodeSpec::make(q, r, n);
    const auto omega = omega_set(spec);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<u64> els;
      for (u64 s : omega)
        if (gen.below(4) != 0) els.push_back(s);
      const auto t = DefiningSet::from_elements(spec, els);
      ASSERT_EQ(bch_delta(t), oracle::bch_brute({els.begin(), els.end()}, r, n));
    }
  }
}

TEST(Distance, Example8x5IsMds) {
  const auto c = build(5, 3, 8, {1, 4, 7});
  const auto d = exact_distance_small(c);
  ASSERT_EQ(d.status, DistanceResult::Status::Exact);
  EXPECT_EQ(d.distance, 4u);
  EXPECT_LT(rank(c.check_matrix.columns(d.witness)), 4u);
  EXPECT_EQ(brute_min_weight(c), 4u);
  EXPECT_EQ(exact_distance_small(c, {.cap = 0, .budget = 1'000'000, .serial = true}).distance, 4u);
  const auto mds = is_classical_mds(c);
  EXPECT_EQ(mds.verdict, MdsVerdict::Mds);
  EXPECT_TRUE(mds.by_bch);
}

TEST(Distance, NonRunDefiningSet) {
  const auto c = build(5, 3, 8, {1, 7, 10});
  EXPECT_EQ(c.bch_delta, 3u);
  const auto d = exact_distance_small(c);
  ASSERT_EQ(d.status, DistanceResult::Status::Exact);
  EXPECT_GE(d.distance, c.bch_delta);
  EXPECT_EQ(d.distance, brute_min_weight(c));
  const auto mds = is_classical_mds(c);
  EXPECT_FALSE(mds.by_bch);
  ASSERT_TRUE(mds.exact);
  EXPECT_EQ(*mds.exact, d.distance);
  EXPECT_EQ(mds.verdict, d.distance == 4 ? MdsVerdict::Mds : MdsVerdict::NotMds);
}

TEST(Distance, RepetitionLikeCodeHasFullWeight) {
  const auto spec = CodeSpec::make(5, 3, 8);
  auto els = omega_set(spec);
  els.pop_back();  // drop 22: the rest is a 7-run
  const auto c = build_code(Tower::make(spec), DefiningSet::from_cosets(spec, els));
  EXPECT_EQ(c.dim, 1u);
  EXPECT_EQ(exact_distance_small(c).distance, 8u);
  EXPECT_EQ(brute_min_weight(c), 8u);
}

TEST(Distance, CapAndBudget) {
  const auto c = build(5, 2, 26, {13, 15, 17, 19});
  const auto capped = exact_distance_small(c, {.cap = 3});
  EXPECT_EQ(capped.status, DistanceResult::Status::ExceedsCap);
  EXPECT_THROW(exact_distance_small(c, {.cap = 0, .budget = 1000}), BudgetExceeded);
  const auto full = exact_distance_small(c, {.cap = 0, .budget = 20'000'000});
  EXPECT_EQ(full.distance, 8u);
}

TEST(Distance, AtLeastBchOnRandomSets) {
  Gen gen(53);
  for (auto [q, r, n] : {std::tuple<u64, u64, u64>{5, 3, 8}, {3, 4, 10}, {8, 3, 7}, {4, 5, 17}}) {
    const auto spec = CodeSpec::make(q, r, n);
    const auto tw = Tower::make(spec);
    const auto parts = partition(spec);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<u64> reps;
      for (const auto& cs : parts)
        if (gen.coin()) reps.push_back(cs.leader);
      if (reps.empty()) continue;
      const auto c = build_code(tw, DefiningSet::from_cosets(spec, reps));
      const auto d = exact_distance_small(c);
      if (d.status != DistanceResult::Status::Exact) continue;
      ASSERT_GE(d.distance, c.bch_delta);
      ASSERT_LE(d.distance, n - c.dim + 1);
    }
  }
}

TEST(Distance, InvariantUnderRowTransformOfH) {
  Gen gen(54);
  for (const auto& reps : {std::vector<u64>{1, 7, 10}, std::vector<u64>{1, 4, 7}, std::vector<u64>{4, 13}}) {
    ConstacyclicCode c = build(5, 3, 8, reps);
    const auto d = exact_distance_small(c).distance;
    const auto e = ebits_rank_oracle(c);
    for (int i = 0; i < 5; ++i) {
      ConstacyclicCode t = c;
      t.check_matrix = gen.invertible(c.check_matrix.field(), c.check_matrix.rows()) * c.check_matrix;
      EXPECT_EQ(exact_distance_small(t).distance, d);
      EXPECT_EQ(ebits_rank_oracle(t), e);
    }
  }
}

TEST(Mds, VerdictStrings) {
  EXPECT_STREQ(to_string(MdsVerdict::Mds), "mds");
  EXPECT_STREQ(to_string(MdsVerdict::NotMds), "not-mds");
  EXPECT_STREQ(to_string(MdsVerdict::Degenerate), "degenerate");
  EXPECT_STREQ(to_string(MdsVerdict::Undecided), "undecided");
}
