#include "eaqmds/families.hpp"

#include <exception>
#include <string>

#include "eaqmds/errors.hpp"
#include "eaqmds/numtheory.hpp"

namespace eaqmds {

namespace {

std::string describe(FamilyId f, std::uint64_t q, std::uint64_t h, std::int64_t k) {
  std::string s = std::string(family_name(f)) + " q=" + std::to_string(q);
  if (f == FamilyId::QM1_H) s += " h=" + std::to_string(h);
  return s + " k=" + std::to_string(k);
}

[[noreturn]] void fail(const FamilyInstance& inst, const std::string& what) {
  const auto& L = inst.layout;
  throw VerificationFailure(describe(L.family, L.q, L.h, inst.k) + ": " + what);
}

// Rethrows the active VerificationFailure with the instance prefixed, keeping
// its dynamic type.
[[noreturn]] void rethrow_with_context(const FamilyInstance& inst) {
  const auto& L = inst.layout;
  const std::string ctx = describe(L.family, L.q, L.h, inst.k) + ": ";
  try {
    throw;
  } catch (const OracleDisagreement& e) {
    throw OracleDisagreement(ctx + e.what());
  } catch (const DescentFailure& e) {
    throw DescentFailure(ctx + e.what());
  } catch (const VerificationFailure& e) {
    throw VerificationFailure(ctx + e.what());
  }
}

}  // namespace

const char* family_name(FamilyId f) noexcept {
  switch (f) {
    case FamilyId::Q2P1_NEGA: return "Q2P1_NEGA";
    case FamilyId::Q2P1_CONSTA: return "Q2P1_CONSTA";
    case FamilyId::TENTH_3: return "TENTH_3";
    case FamilyId::TENTH_7: return "TENTH_7";
    case FamilyId::QM1_H: return "QM1_H";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (FamilyId f : kAllFamilies) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

std::optional<std::string> inapplicable_reason(FamilyId f, std::uint64_t q, std::uint64_t h) {
  if (!as_prime_power(q)) return "q=" + std::to_string(q) + " is not a prime power";
  if (q % 2 == 0) return "q must be odd";
  if (f != FamilyId::QM1_H && h != 0) return "h applies only to QM1_H";
  switch (f) {
    case FamilyId::Q2P1_NEGA:
      if (q % 4 != 1 || q < 5) return "requires q = 1 mod 4 and q >= 5";
      break;
    case FamilyId::Q2P1_CONSTA:
      if (q % 4 != 3 || q < 7) return "requires q = 3 mod 4 and q >= 7";
      break;
    case FamilyId::TENTH_3:
      if (q % 10 != 3 || q < 13) return "requires q = 10m+3 with m >= 1";
      break;
    case FamilyId::TENTH_7:
      if (q % 10 != 7 || q < 17) return "requires q = 10m+7 with m >= 1";
      break;
    case FamilyId::QM1_H:
      if (h != 3 && h != 5 && h != 7) return "h must be 3, 5 or 7";
      if ((q + 1) % h != 0) return "h=" + std::to_string(h) + " does not divide q+1";
      break;
  }
  return std::nullopt;
}

bool is_applicable(FamilyId f, std::uint64_t q, std::uint64_t h) { return !inapplicable_reason(f, q, h); }

std::size_t FamilyLayout::size_at(std::int64_t k) const noexcept {
  if (family == FamilyId::QM1_H) return static_cast<std::size_t>(k - k_lo + 1);
  return static_cast<std::size_t>(2 * (k - k_lo) + 1);
}

DefiningSet FamilyLayout::defining_set_unchecked(std::int64_t k) const {
  const std::uint64_t step = family == FamilyId::Q2P1_CONSTA ? q + 1 : family == FamilyId::QM1_H ? h : 2;
  std::vector<std::uint64_t> reps;
  for (std::int64_t i = 0; i <= k - k_lo; ++i) {
    reps.push_back((start + step * static_cast<std::uint64_t>(i)) % spec.rn);
  }
  return DefiningSet::from_cosets(spec, reps);
}

FamilyLayout family_layout(FamilyId f, std::uint64_t q, std::uint64_t h) {
  if (auto why = inapplicable_reason(f, q, h)) {
    throw InvalidInput(std::string(family_name(f)) + " not applicable at q=" + std::to_string(q) + ": " + *why);
  }
  FamilyLayout L{f, q, h, {}, 0, 0, 0, 0, 0};
  const auto sq = static_cast<std::int64_t>(q);
  switch (f) {
    case FamilyId::Q2P1_NEGA:
    case FamilyId::Q2P1_CONSTA: {
      const std::uint64_t n = q * q + 1;
      L.spec = CodeSpec::make(q, f == FamilyId::Q2P1_NEGA ? 2 : q + 1, n);
      L.start = n / 2;
      L.k_hi = (3 * sq - 3) / 2;
      L.k_ea = (sq + 1) / 2;
      L.ebits = 4;
      break;
    }
    case FamilyId::TENTH_3:
    case FamilyId::TENTH_7: {
      const std::uint64_t n = (q * q + 1) / 10;
      const auto m = static_cast<std::int64_t>(q / 10);
      L.spec = CodeSpec::make(q, 2, n);
      L.start = n;
      L.k_hi = f == FamilyId::TENTH_3 ? 3 * m : 3 * m + 1;
      L.ebits = 1;
      break;
    }
    case FamilyId::QM1_H: {
      const auto sh = static_cast<std::int64_t>(h);
      L.spec = CodeSpec::make(q, h, (q * q - 1) / h);
      L.k_lo = (sh - 3) * (sq + 1) / (2 * sh);
      L.start = 1 + h * static_cast<std::uint64_t>(L.k_lo);
      L.k_hi = sq - 2;
      L.k_ea = (sh - 1) * (sq + 1) / (2 * sh) - 1;
      L.ebits = 1;
      break;
    }
  }
  return L;
}

FamilyInstance family_defining_set(FamilyId f, std::uint64_t q, std::uint64_t h, std::int64_t k) {
  FamilyLayout L = family_layout(f, q, h);
  if (k < L.k_lo || k > L.k_hi) {
    throw InvalidInput(describe(f, q, h, k) + ": k outside [" + std::to_string(L.k_lo) + ", " +
                       std::to_string(L.k_hi) + "]");
  }
  DefiningSet t = L.defining_set_unchecked(k);
  const std::size_t tss = L.predicted_tss(k);
  return FamilyInstance{std::move(L), k, std::move(t), tss};
}

std::size_t predicted_tss(const FamilyInstance& inst) noexcept { return inst.layout.predicted_tss(inst.k); }

const char* to_string(Verified v) noexcept {
  switch (v) {
    case Verified::BchOnly: return "bch-only";
    case Verified::RankOracle: return "rank-oracle";
    case Verified::ExactDistance: return "exact-distance";
  }
  return "?";
}

FamilyRow evaluate_instance(const Tower& tower, const FamilyInstance& inst, const EnumerateOptions& options) {
  const FamilyLayout& L = inst.layout;
  FamilyRow row{L.family, L.q, L.h, inst.k, {}, inst.predicted_tss == 0, Verified::BchOnly, std::nullopt};
  try {
    if (inst.t.size() != L.size_at(inst.k)) fail(inst, "|T| differs from the interval length");
    const ConstacyclicCode code = build_code(tower, inst.t);
    if (code.bch_delta != inst.t.size() + 1) fail(inst, "T is not a single consecutive run");

    const std::size_t tss = ebits_combinatorial(inst.t);
    if (tss != inst.predicted_tss) {
      fail(inst, "|T_ss|=" + std::to_string(tss) + " but the construction predicts " +
                     std::to_string(inst.predicted_tss));
    }
    if (options.rank_oracle) {
      row.params = derive_eaq(code);
      row.verified = Verified::RankOracle;
    } else {
      EaqParams& p = row.params;
      p.q = L.q;
      p.n = static_cast<std::int64_t>(L.spec.n);
      p.c = static_cast<std::int64_t>(tss);
      p.k = p.n - 2 * static_cast<std::int64_t>(inst.t.size()) + p.c;
      p.d = static_cast<std::int64_t>(code.bch_delta);
      p.singleton = check_singleton(p);
      p.mds = singleton_equality(p);
    }
    if (!row.params.mds) fail(inst, "EA-Singleton bound is not met with equality");

    if (options.exact_distance) {
      try {
        const DistanceResult d = exact_distance_small(code, options.distance);
        if (d.status == DistanceResult::Status::Exact) {
          if (d.distance != code.spec.n - code.dim + 1) {
            fail(inst, "exact distance " + std::to_string(d.distance) + " is below n-k+1");
          }
          row.exact_distance = d.distance;
          row.verified = Verified::ExactDistance;
        }
      } catch (const BudgetExceeded&) {
        // Too many subsets; the row keeps its lower verification level.
      }
    }
  } catch (const VerificationFailure&) {
    rethrow_with_context(inst);
  }
  return row;
}

std::vector<FamilyRow> enumerate_family(FamilyId f, std::uint64_t q, std::uint64_t h,
                                        const EnumerateOptions& options) {
  const FamilyLayout L = family_layout(f, q, h);
  const Tower tower = Tower::make(L.spec);
  const std::int64_t first = options.include_qmds ? L.k_lo : L.k_ea;
  const std::int64_t count = L.k_hi - first + 1;
  std::vector<FamilyRow> rows(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  std::vector<std::exception_ptr> errors(rows.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      rows[idx] = evaluate_instance(tower, family_defining_set(f, q, h, first + i), options);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

RangeReport analyze_range(FamilyId f, std::uint64_t q, std::uint64_t h) {
  const FamilyLayout L = family_layout(f, q, h);
  auto tss_at = [&](std::int64_t k) { return ebits_combinatorial(L.defining_set_unchecked(k)); };
  // Past this point the interval starts to overlap itself.
  auto well_formed = [&](std::int64_t k) {
    return L.size_at(k) < L.spec.n && L.defining_set_unchecked(k).size() == L.size_at(k);
  };

  RangeReport rep;
  rep.claimed = {L.d_at(L.k_ea), L.d_at(L.k_hi)};
  std::int64_t lo = L.k_ea;
  std::int64_t hi = L.k_ea;
  if (tss_at(L.k_ea) != L.ebits) {
    rep.computed = {0, -1};
    return rep;
  }
  while (lo > L.k_lo && tss_at(lo - 1) == L.ebits) --lo;
  while (well_formed(hi + 1) && tss_at(hi + 1) == L.ebits) ++hi;
  rep.computed = {L.d_at(lo), L.d_at(hi)};
  rep.tss_below = lo > L.k_lo ? tss_at(lo - 1) : 0;
  rep.tss_above = well_formed(hi + 1) ? tss_at(hi + 1) : 0;
  return rep;
}

}  // namespace eaqmds
