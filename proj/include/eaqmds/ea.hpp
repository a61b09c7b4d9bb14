#pragma once

#include <cstdint>

#include "eaqmds/constacyclic.hpp"

namespace eaqmds {

/// [[n, k, d; c]]_q. k is signed: large defining sets drive n - 2|T| + c
/// below zero, which is reported rather than clamped.
struct EaqParams {
  std::uint64_t q = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::int64_t c = 0;
  bool singleton = false;  // n + c - k >= 2(d - 1)
  bool mds = false;        // ... with equality
  bool oracle_agreement = false;
};

/// |T ∩ T^{-q}|.
std::size_t ebits_combinatorial(const DefiningSet& t);
/// rank(H H^dagger) over F_{q^2}.
std::size_t ebits_rank_oracle(const Matrix& check_matrix);
inline std::size_t ebits_rank_oracle(const ConstacyclicCode& c) { return ebits_rank_oracle(c.check_matrix); }

/// [[n, n - 2|T| + |T_ss|, bch_delta; |T_ss|]]_q. Throws OracleDisagreement
/// when the two ebit counts differ.
EaqParams derive_eaq(const ConstacyclicCode& c);

bool check_singleton(const EaqParams& p) noexcept;
/// Equality in the EA-Singleton bound.
bool singleton_equality(const EaqParams& p) noexcept;

}  // namespace eaqmds
