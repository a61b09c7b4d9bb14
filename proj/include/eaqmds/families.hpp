#pragma once

// The four interval constructions of EA-quantum MDS codes:
//
//   Q2P1_NEGA    q = 1 mod 4, n = q^2+1, r = 2,   T = U_{i<=k} C_{s+2i}
//   Q2P1_CONSTA  q = 3 mod 4, n = q^2+1, r = q+1, T = U_{i<=k} C_{s+(q+1)i}
//   TENTH_3      q = 10m+3,  n = (q^2+1)/10, r = 2, T = U_{i<=k} C_{n+2i}
//   TENTH_7      q = 10m+7,  n = (q^2+1)/10, r = 2, T = U_{i<=k} C_{n+2i}
//   QM1_H        h | q+1, h in {3,5,7}, n = (q^2-1)/h, r = h,
//                T = {1+hi : i0 <= i <= k}, i0 = (h-3)(q+1)/(2h)
//
// with s = n/2 in the first two.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "eaqmds/constacyclic.hpp"
#include "eaqmds/ea.hpp"

namespace eaqmds {

enum class FamilyId { Q2P1_NEGA, Q2P1_CONSTA, TENTH_3, TENTH_7, QM1_H };

inline constexpr std::array<FamilyId, 5> kAllFamilies = {FamilyId::Q2P1_NEGA, FamilyId::Q2P1_CONSTA,
                                                         FamilyId::TENTH_3, FamilyId::TENTH_7,
                                                         FamilyId::QM1_H};

const char* family_name(FamilyId f) noexcept;
std::optional<FamilyId> parse_family(std::string_view name);

/// Empty when (q, h) suits the family, else the violated condition.
/// h is ignored (and should be 0) outside QM1_H.
std::optional<std::string> inapplicable_reason(FamilyId f, std::uint64_t q, std::uint64_t h = 0);
bool is_applicable(FamilyId f, std::uint64_t q, std::uint64_t h = 0);

/// Everything about a family at fixed (q, h) that does not depend on k.
struct FamilyLayout {
  FamilyId family;
  std::uint64_t q = 0;
  std::uint64_t h = 0;
  CodeSpec spec;
  std::uint64_t start = 0;  // first class element of T
  std::int64_t k_lo = 0;    // k range of the construction
  std::int64_t k_hi = 0;
  std::int64_t k_ea = 0;    // first k with nonzero predicted ebits
  std::size_t ebits = 0;    // predicted ebits for k >= k_ea

  /// Element count of T at index k.
  std::size_t size_at(std::int64_t k) const noexcept;
  std::size_t predicted_tss(std::int64_t k) const noexcept { return k >= k_ea ? ebits : 0; }
  std::int64_t d_at(std::int64_t k) const noexcept { return static_cast<std::int64_t>(size_at(k)) + 1; }
  /// Defining set at k with no range check (used to probe past the bounds).
  DefiningSet defining_set_unchecked(std::int64_t k) const;
};

/// Throws InvalidInput when inapplicable.
FamilyLayout family_layout(FamilyId f, std::uint64_t q, std::uint64_t h = 0);

struct FamilyInstance {
  FamilyLayout layout;
  std::int64_t k = 0;
  DefiningSet t;
  std::size_t predicted_tss = 0;
};

/// Throws InvalidInput for inapplicable (q, h) or k outside [k_lo, k_hi].
FamilyInstance family_defining_set(FamilyId f, std::uint64_t q, std::uint64_t h, std::int64_t k);
std::size_t predicted_tss(const FamilyInstance& inst) noexcept;

/// How far a row was checked beyond the pipeline's own identities.
enum class Verified { BchOnly, RankOracle, ExactDistance };
const char* to_string(Verified v) noexcept;

struct FamilyRow {
  FamilyId family;
  std::uint64_t q = 0;
  std::uint64_t h = 0;
  std::int64_t k_index = 0;
  EaqParams params;
  bool qmds = false;  // c = 0 datapoint below the EA range
  Verified verified = Verified::RankOracle;
  std::optional<std::size_t> exact_distance;
};

struct EnumerateOptions {
  bool include_qmds = false;
  bool rank_oracle = true;
  bool exact_distance = false;
  DistanceOptions distance;
};

/// One row per admissible d, ascending; every row is fully verified or a
/// VerificationFailure naming the instance is thrown.
std::vector<FamilyRow> enumerate_family(FamilyId f, std::uint64_t q, std::uint64_t h = 0,
                                        const EnumerateOptions& options = {});

/// Runs one instance through the pipeline; used by enumerate_family.
FamilyRow evaluate_instance(const Tower& tower, const FamilyInstance& inst, const EnumerateOptions& options);

struct DRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const DRange&, const DRange&) = default;
};

/// Stated vs. computed range of d carrying the family's nonzero ebit count.
/// The computed range is the maximal run of k around k_ea whose |T_ss|
/// equals the predicted value, found by direct decomposition.
struct RangeReport {
  DRange claimed;
  DRange computed;
  std::size_t tss_below = 0;  // |T_ss| one step below computed.lo (0 if none)
  std::size_t tss_above = 0;  // |T_ss| one step above computed.hi
};

RangeReport analyze_range(FamilyId f, std::uint64_t q, std::uint64_t h = 0);

}  // namespace eaqmds
