#include "eaqmds/ea.hpp"

#include <string>

#include "eaqmds/errors.hpp"
#include "eaqmds/kernels.hpp"

namespace eaqmds {

std::size_t ebits_combinatorial(const DefiningSet& t) { return decompose(t).t_ss.size(); }

std::size_t ebits_rank_oracle(const Matrix& check_matrix) {
  // (H H^dagger)_{ij} = sum_l H_il conj(H_jl) = (H * conj(H)^T)_{ij}.
  return rank(kernels::multiply_transposed(check_matrix, check_matrix.conjugate()));
}

EaqParams derive_eaq(const ConstacyclicCode& code) {
  const std::size_t comb = ebits_combinatorial(code.t);
  const std::size_t by_rank = ebits_rank_oracle(code);
  if (comb != by_rank) {
    throw OracleDisagreement("ebit count mismatch for q=" + std::to_string(code.spec.q) +
                             " n=" + std::to_string(code.spec.n) + ": |T_ss|=" + std::to_string(comb) +
                             " but rank(HH^dagger)=" + std::to_string(by_rank));
  }
  EaqParams p;
  p.q = code.spec.q;
  p.n = static_cast<std::int64_t>(code.spec.n);
  p.c = static_cast<std::int64_t>(comb);
  p.k = p.n - 2 * static_cast<std::int64_t>(code.t.size()) + p.c;
  p.d = static_cast<std::int64_t>(code.bch_delta);
  p.singleton = check_singleton(p);
  p.mds = singleton_equality(p);
  p.oracle_agreement = true;
  return p;
}

bool check_singleton(const EaqParams& p) noexcept { return p.n + p.c - p.k >= 2 * (p.d - 1); }

bool singleton_equality(const EaqParams& p) noexcept { return p.n + p.c - p.k == 2 * (p.d - 1); }

}  // namespace eaqmds
