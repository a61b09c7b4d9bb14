#include <gtest/gtest.h>

#include "eaqmds/field.hpp"
#include "eaqmds/numtheory.hpp"
#include "oracles.hpp"

using namespace eaqmds;
using oracle::Gen;

namespace {

std::vector<std::uint32_t> mod_of(std::uint64_t p, unsigned l) { return Field::make(p, l)->modulus(); }

}  // namespace

TEST(NumTheory, Basics) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65537));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(as_prime_power(27)->first, 3u);
  EXPECT_EQ(as_prime_power(27)->second, 3u);
  EXPECT_FALSE(as_prime_power(12));
  EXPECT_FALSE(as_prime_power(1));
  EXPECT_EQ(multiplicative_order(25, 52), 2u);
  EXPECT_EQ(multiplicative_order(25, 24), 1u);
  EXPECT_EQ(binomial(26, 7), 657800u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
  EXPECT_FALSE(checked_pow(2, 33, std::uint64_t{1} << 32));
  EXPECT_EQ(*checked_pow(2, 32, std::uint64_t{1} << 32), std::uint64_t{1} << 32);
}

TEST(NumTheory, OrderMatchesBruteForce) {
  for (std::uint64_t m = 2; m < 300; ++m) {
    for (std::uint64_t a = 1; a < m; ++a) {
      if (gcd(a, m) != 1) continue;
      std::uint64_t x = a % m, t = 1;
      while (x != 1 % m) {
        x = x * a % m;
        ++t;
      }
      ASSERT_EQ(multiplicative_order(a, m), t) << a << " mod " << m;
    }
  }
}

TEST(MakeField, PrimeFieldUsesModulusX) {
  const auto F = Field::make(5, 1);
  EXPECT_EQ(F->size(), 5u);
  EXPECT_EQ(F->modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(MakeField, F25ModulusIsXSquaredPlus2) {
  // x^2+1 has root 2 mod 5; x^2+2 has none since 3 is a non-residue.
  EXPECT_EQ(mod_of(5, 2), (std::vector<std::uint32_t>{2, 0, 1}));
}

TEST(MakeField, F27Exists) {
  const auto F = Field::make(3, 3);
  EXPECT_EQ(F->size(), 27u);
  const auto H = Field::make_hermitian(27);
  EXPECT_EQ(H->size(), 729u);
  EXPECT_EQ(H->hermitian_q(), 27u);
}

TEST(MakeField, CanonicalModulusMatchesBruteScan) {
  const std::pair<std::uint64_t, unsigned> cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3},
                                                      {3, 4}, {5, 2}, {5, 3}, {5, 4}, {7, 2}, {7, 4}, {11, 2},
                                                      {13, 2}, {13, 4}, {43, 2}, {3, 6}};
  for (auto [p, l] : cases) {
    const auto want = oracle::canonical_modulus_brute(p, l);
    const auto got = mod_of(p, l);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], want[i]) << "p=" << p << " l=" << l;
  }
}

TEST(MakeField, Deterministic) {
  const auto a = Field::make(7, 4), b = Field::make(7, 4);
  EXPECT_EQ(*a, *b);
  EXPECT_EQ(a->primitive(), b->primitive());
}

TEST(MakeField, Errors) {
  EXPECT_THROW(Field::make(6, 1), InvalidInput);
  EXPECT_THROW(Field::make(1, 1), InvalidInput);
  EXPECT_THROW(Field::make(5, 0), InvalidInput);
  EXPECT_THROW(Field::make(2, 33), BudgetExceeded);
  EXPECT_THROW(Field::make(65537, 2), BudgetExceeded);
  EXPECT_THROW(Field::make_hermitian(12), InvalidInput);
}

TEST(Primitive, SmallPrimeFields) {
  EXPECT_EQ(Field::make(5, 1)->primitive(), Elem{2});
  EXPECT_EQ(Field::make(7, 1)->primitive(), Elem{3});
}

TEST(Primitive, SmallestFullOrderElement) {
  for (auto [p, l] : {std::pair<std::uint64_t, unsigned>{5, 2}, {2, 4}, {3, 3}, {7, 2}, {2, 5}}) {
    const auto F = Field::make(p, l);
    std::uint32_t want = 0;
    for (std::uint32_t v = 1; v < F->size(); ++v) {
      if (oracle::order_brute(*F, Elem{v}) == F->size() - 1) {
        want = v;
        break;
      }
    }
    EXPECT_EQ(F->primitive().v, want) << p << "^" << l;
  }
}

TEST(FieldOps, MatchSchoolbookArithmetic) {
  // Table-driven fields and one large enough to use the slow path.
  const std::pair<std::uint64_t, unsigned> cases[] = {{5, 2}, {2, 8}, {3, 4}, {43, 2}, {7, 4}, {13, 4}, {5, 8}};
  Gen gen(11);
  for (auto [p, l] : cases) {
    const auto F = Field::make(p, l);
    const auto N = oracle::naive_of(*F);
    EXPECT_EQ(F->has_tables(), F->size() <= Field::kTableLimit);
    for (int i = 0; i < 300; ++i) {
      const Elem a = gen.elem(*F), b = gen.elem(*F);
      const auto ca = oracle::coords_u64(*F, a), cb = oracle::coords_u64(*F, b);
      ASSERT_EQ(oracle::coords_u64(*F, F->add(a, b)), N.add(ca, cb));
      ASSERT_EQ(oracle::coords_u64(*F, F->mul(a, b)), N.mul(ca, cb));
      ASSERT_EQ(F->add(F->sub(a, b), b), a);
      const std::uint64_t e = gen.below(1000);
      ASSERT_EQ(oracle::coords_u64(*F, F->pow(a, e)), N.pow(ca, e));
    }
  }
}

TEST(FieldOps, Axioms) {
  Gen gen(12);
  for (auto [p, l] : {std::pair<std::uint64_t, unsigned>{5, 2}, {2, 6}, {29, 4}, {23, 2}, {3, 5}}) {
    const auto F = Field::make(p, l);
    for (int i = 0; i < 200; ++i) {
      const Elem a = gen.elem(*F), b = gen.elem(*F), c = gen.elem(*F);
      ASSERT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
      ASSERT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
      ASSERT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
      ASSERT_EQ(F->mul(a, b), F->mul(b, a));
      ASSERT_EQ(F->add(a, F->neg(a)), Field::zero());
      if (a != Field::zero()) {
        ASSERT_EQ(F->mul(a, F->inv(a)), Field::one());
      }
    }
    EXPECT_THROW(F->inv(Field::zero()), std::domain_error);
  }
}

TEST(FieldOps, FrobeniusIsRingMapAndFullPowerIsIdentity) {
  Gen gen(13);
  for (auto [p, l] : {std::pair<std::uint64_t, unsigned>{5, 2}, {3, 4}, {2, 7}, {19, 4}}) {
    const auto F = Field::make(p, l);
    for (int i = 0; i < 100; ++i) {
      const Elem a = gen.elem(*F), b = gen.elem(*F);
      ASSERT_EQ(F->frobenius(F->add(a, b)), F->add(F->frobenius(a), F->frobenius(b)));
      ASSERT_EQ(F->frobenius(F->mul(a, b)), F->mul(F->frobenius(a), F->frobenius(b)));
      ASSERT_EQ(F->pow(a, F->size()), a);
    }
  }
}

TEST(Conj, F25Exhaustive) {
  const auto F = Field::make_hermitian(5);
  EXPECT_EQ(F->conj(Field::zero()), Field::zero());
  EXPECT_EQ(F->conj(Field::one()), Field::one());
  const Elem g = F->primitive();
  EXPECT_EQ(F->conj(g), F->pow(g, 5));
  int fixed = 0;
  for (std::uint32_t v = 0; v < 25; ++v) {
    const Elem x{v};
    EXPECT_EQ(F->conj(F->conj(x)), x);
    fixed += F->conj(x) == x;
  }
  EXPECT_EQ(fixed, 5);
}

TEST(Conj, FixedPointsEqualQ) {
  for (std::uint64_t q : {3, 7, 9, 13, 27}) {
    const auto F = Field::make_hermitian(q);
    std::uint64_t fixed = 0;
    for (std::uint32_t v = 0; v < F->size(); ++v) fixed += F->conj(Elem{v}) == Elem{v};
    EXPECT_EQ(fixed, q);
  }
}

TEST(Conj, RequiresTaggedField) { EXPECT_THROW(Field::make(5, 2)->conj(Field::one()), InvalidInput); }

TEST(Extend, PrimeIntoF25MapsToConstants) {
  const auto F5 = Field::make(5, 1);
  const auto ext = extend(F5, 2);
  EXPECT_EQ(ext.field->size(), 25u);
  for (std::uint32_t a = 0; a < 5; ++a) {
    const auto c = ext.field->coords(ext.embedding.apply(Elem{a}));
    EXPECT_EQ(c[0], a);
    EXPECT_EQ(c[1], 0u);
  }
}

TEST(Extend, F25IntoF625IsHomomorphism) {
  const auto F25 = Field::make_hermitian(5);
  const auto ext = extend(F25, 2);
  const Field& T = *ext.field;
  EXPECT_EQ(T.size(), 625u);
  EXPECT_EQ(ext.embedding.apply(Field::one()), Field::one());
  Gen gen(14);
  for (int i = 0; i < 100; ++i) {
    const Elem x = gen.elem(*F25), y = gen.elem(*F25);
    ASSERT_EQ(ext.embedding.apply(F25->mul(x, y)), T.mul(ext.embedding.apply(x), ext.embedding.apply(y)));
    ASSERT_EQ(ext.embedding.apply(F25->add(x, y)), T.add(ext.embedding.apply(x), ext.embedding.apply(y)));
  }
}

TEST(Extend, PreservesOrderFrobeniusAndDescends) {
  Gen gen(15);
  for (auto [q, d] : {std::pair<std::uint64_t, unsigned>{5, 2}, {13, 2}, {9, 2}, {4, 3}, {43, 2}}) {
    const auto base = Field::make_hermitian(q);
    const auto ext = extend(base, d);
    const Field& T = *ext.field;
    const auto& E = ext.embedding;
    // The image of the modulus root satisfies the base modulus.
    Elem acc = Field::zero();
    const auto& f = base->modulus();
    for (std::size_t i = f.size(); i-- > 0;) acc = T.add(T.mul(acc, E.generator_image()), T.from_int(f[i]));
    EXPECT_EQ(acc, Field::zero());
    std::size_t image_count = 0;
    for (int i = 0; i < 50; ++i) {
      const Elem x = gen.nonzero(*base);
      const Elem y = E.apply(x);
      ASSERT_EQ(T.order(y), base->order(x));
      ASSERT_EQ(E.apply(base->frobenius(x)), T.frobenius(y));
      ASSERT_EQ(E.descend(y), x);
    }
    // Exactly |base| elements of the target descend.
    if (T.size() <= 20000) {
      for (std::uint32_t v = 0; v < T.size(); ++v) image_count += E.descend(Elem{v}).has_value();
      EXPECT_EQ(image_count, base->size());
    }
  }
}

TEST(Extend, DegreeOneIsIdentity) {
  const auto F = Field::make_hermitian(7);
  const auto ext = extend(F, 1);
  EXPECT_EQ(ext.field, F);
  EXPECT_EQ(ext.embedding.apply(Elem{17}), Elem{17});
  EXPECT_THROW(extend(F, 0), InvalidInput);
}

TEST(Format, Readable) {
  EXPECT_EQ(Field::make(7, 1)->format(Elem{3}), "3");
  EXPECT_EQ(Field::make(5, 2)->format(Elem{7}), "(2,1)");
}
