#include <gtest/gtest.h>

#include "eaqmds/kernels.hpp"
#include "oracles.hpp"

using namespace eaqmds;
using oracle::Gen;

namespace {

struct WorkerGuard {
  int saved = kernels::worker_count();
  ~WorkerGuard() { kernels::set_worker_count(saved); }
};

const int kWorkerCounts[] = {1, 2, 4};

}  // namespace

TEST(Kernels, MultiplyTransposedAgrees) {
  WorkerGuard guard;
  Gen gen(31);
  const auto F = Field::make_hermitian(7);
  for (int i = 0; i < 20; ++i) {
    Matrix a = gen.matrix(F, gen.range(1, 20), 15), b = gen.matrix(F, gen.range(1, 20), 15);
    // Sparse rows exercise the support skipping.
    for (std::size_t j = 0; j < 10; ++j) a(0, j) = Field::zero();
    const Matrix want = kernels::multiply_transposed_serial(a, b);
    for (int w : kWorkerCounts) {
      kernels::set_worker_count(w);
      ASSERT_EQ(kernels::multiply_transposed(a, b), want);
    }
  }
}

TEST(Kernels, BackSubstituteAgrees) {
  WorkerGuard guard;
  Gen gen(32);
  const auto F = Field::make_hermitian(5);
  for (int i = 0; i < 30; ++i) {
    // Banded rows, like generator matrices.
    const std::size_t rows = gen.range(1, 12), band = gen.range(1, 6), cols = rows + band + gen.below(4);
    Matrix m(F, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t j = r; j < std::min(cols, r + band + 1); ++j) m(r, j) = gen.elem(*F);
    const auto ech = row_echelon(m);
    const Matrix want = kernels::back_substitute_serial(ech);
    for (int w : kWorkerCounts) {
      kernels::set_worker_count(w);
      ASSERT_EQ(kernels::back_substitute(ech), want);
    }
    if (want.rows()) {
      EXPECT_TRUE((m * want.transpose()).is_zero());
    }
  }
}

TEST(Kernels, DependentColumnsAgree) {
  WorkerGuard guard;
  Gen gen(33);
  const auto F = Field::make_hermitian(3);
  for (int i = 0; i < 30; ++i) {
    const std::size_t rows = gen.range(2, 5), cols = gen.range(rows, 10);
    Matrix h = gen.matrix(F, rows, cols);
    if (gen.coin()) {
      const std::size_t a = gen.below(cols), b = gen.below(cols);
      for (std::size_t r = 0; r < rows; ++r) h(r, b) = F->mul(Elem{3}, h(r, a));
    }
    for (std::size_t w = 1; w <= rows + 1; ++w) {
      const auto want = kernels::find_dependent_columns_serial(h, w);
      for (int workers : kWorkerCounts) {
        kernels::set_worker_count(workers);
        ASSERT_EQ(kernels::find_dependent_columns(h, w), want) << "weight " << w;
      }
      if (want) {
        EXPECT_LT(rank(h.columns(*want)), w);
      }
    }
    // Any rows+1 columns are dependent.
    ASSERT_TRUE(kernels::find_dependent_columns(h, rows + 1) || cols < rows + 1);
  }
}

TEST(Kernels, ZeroColumnIsWeightOne) {
  const auto F = Field::make_hermitian(3);
  Matrix h = Matrix::identity(F, 3);
  Matrix wide(F, 3, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) wide(r, c + 1) = h(r, c);
  EXPECT_EQ(kernels::find_dependent_columns(wide, 1), (std::vector<std::size_t>{0}));
  EXPECT_EQ(kernels::find_dependent_columns(h, 3), std::nullopt);
}

TEST(Kernels, WorkerCount) {
  WorkerGuard guard;
  kernels::set_worker_count(3);
  EXPECT_EQ(kernels::worker_count(), 3);
  EXPECT_THROW(kernels::set_worker_count(0), InvalidInput);
}
