// Serial reference vs OpenMP kernel on inputs shaped like the real workload:
// check matrices of family codes and their Hermitian products.
//
//   ./build/bench/bench_kernels --benchmark_filter=Dependent

#include <benchmark/benchmark.h>

#include "eaqmds/constacyclic.hpp"
#include "eaqmds/families.hpp"
#include "eaqmds/kernels.hpp"

using namespace eaqmds;

namespace {

struct Fixture {
  ConstacyclicCode code;
  RowEchelon gen_echelon;
};

// Mid-range instances: rank oracle and nullspace sizes that dominate a catalog run.
const Fixture& fixture(int which) {
  static const Fixture fx[] = {
      [] {
        const auto inst = family_defining_set(FamilyId::Q2P1_NEGA, 13, 0, 12);
        const auto c = build_code(Tower::make(inst.layout.spec), inst.t);
        return Fixture{c, row_echelon(c.gen_matrix)};
      }(),
      [] {
        const auto inst = family_defining_set(FamilyId::Q2P1_CONSTA, 19, 0, 20);
        const auto c = build_code(Tower::make(inst.layout.spec), inst.t);
        return Fixture{c, row_echelon(c.gen_matrix)};
      }(),
  };
  return fx[which];
}

// Small code for the distance search: [40, 33] from QM1_H q=11 h=3.
const ConstacyclicCode& distance_code() {
  static const ConstacyclicCode c = [] {
    const auto inst = family_defining_set(FamilyId::QM1_H, 11, 3, 8);
    return build_code(Tower::make(inst.layout.spec), inst.t);
  }();
  return c;
}

void BM_HermitianProduct_Serial(benchmark::State& st) {
  const auto& H = fixture(static_cast<int>(st.range(0))).code.check_matrix;
  const Matrix Hc = H.conjugate();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply_transposed_serial(H, Hc));
}

void BM_HermitianProduct_Parallel(benchmark::State& st) {
  const auto& H = fixture(static_cast<int>(st.range(0))).code.check_matrix;
  const Matrix Hc = H.conjugate();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply_transposed(H, Hc));
}

void BM_BackSubstitute_Serial(benchmark::State& st) {
  const auto& ech = fixture(static_cast<int>(st.range(0))).gen_echelon;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::back_substitute_serial(ech));
}

void BM_BackSubstitute_Parallel(benchmark::State& st) {
  const auto& ech = fixture(static_cast<int>(st.range(0))).gen_echelon;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::back_substitute(ech));
}

void BM_DependentColumns_Serial(benchmark::State& st) {
  const auto& H = distance_code().check_matrix;
  const auto w = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::find_dependent_columns_serial(H, w));
}

void BM_DependentColumns_Parallel(benchmark::State& st) {
  const auto& H = distance_code().check_matrix;
  const auto w = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::find_dependent_columns(H, w));
}

}  // namespace

BENCHMARK(BM_HermitianProduct_Serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HermitianProduct_Parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BackSubstitute_Serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BackSubstitute_Parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DependentColumns_Serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DependentColumns_Parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
