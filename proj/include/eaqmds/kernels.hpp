#pragma once

// Data-parallel kernels. Each OpenMP kernel has a plain serial reference
// with the same contract; tests check they agree and bench/ compares them.

#include <cstddef>
#include <optional>
#include <vector>

#include "eaqmds/matrix.hpp"

namespace eaqmds::kernels {

/// a * b^T.
Matrix multiply_transposed(const Matrix& a, const Matrix& b);
Matrix multiply_transposed_serial(const Matrix& a, const Matrix& b);

/// Nullspace basis from an echelon form: one row per free column, with a 1
/// in that column and zeros in the other free columns.
Matrix back_substitute(const RowEchelon& ech);
Matrix back_substitute_serial(const RowEchelon& ech);

/// Lexicographically first set of `weight` linearly dependent columns of h,
/// or nullopt if every `weight`-subset is independent.
///
/// The parallel kernel runs a depth-first search with an incremental
/// echelon basis, split by first column; the serial reference ranks every
/// subset from scratch.
std::optional<std::vector<std::size_t>> find_dependent_columns(const Matrix& h, std::size_t weight);
std::optional<std::vector<std::size_t>> find_dependent_columns_serial(const Matrix& h,
                                                                      std::size_t weight);

/// Number of worker threads kernels may use (OpenMP max threads).
int worker_count();
void set_worker_count(int workers);

}  // namespace eaqmds::kernels
