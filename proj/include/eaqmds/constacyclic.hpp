#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eaqmds/cyclotomic.hpp"
#include "eaqmds/field.hpp"
#include "eaqmds/matrix.hpp"
#include "eaqmds/poly.hpp"

namespace eaqmds {

/// F_{q^2} ⊆ F_{q^{2m}} for one CodeSpec, with omega = gamma^((q^{2m}-1)/rn)
/// for the canonical primitive gamma, and eta = omega^n descended to F_{q^2}.
struct Tower {
  CodeSpec spec;
  FieldPtr base;  // F_{q^2}, conjugation-tagged
  FieldPtr top;   // F_{q^{2m}}
  Embedding embedding;
  std::uint64_t omega_exponent = 0;
  Elem gamma;
  Elem omega;
  Elem eta;  // in base

  static Tower make(const CodeSpec& spec);
};

struct ConstacyclicCode {
  CodeSpec spec;
  DefiningSet t;
  Poly gen_poly;  // over F_{q^2}
  std::size_t dim = 0;
  std::size_t bch_delta = 0;
  Matrix gen_matrix;    // dim x n
  Matrix check_matrix;  // (n - dim) x n
};

/// g = prod_{j in T}(x - omega^j), descended to F_{q^2}; verifies g | x^n - eta
/// and G H^T = 0. Throws DescentFailure when T is not coset-closed.
ConstacyclicCode build_code(const Tower& tower, const DefiningSet& t);

/// 1 + longest cyclic run of consecutive class indices inside T.
std::size_t bch_delta(const DefiningSet& t);

struct DistanceResult {
  enum class Status { Exact, ExceedsCap, Degenerate };
  Status status = Status::Degenerate;
  std::size_t distance = 0;
  std::vector<std::size_t> witness;  // dependent check-matrix columns
};

struct DistanceOptions {
  std::size_t cap = 0;  // 0: up to n - dim + 1
  std::uint64_t budget = 1'000'000;
  bool serial = false;  // use the reference kernel
};

/// Minimum number of dependent columns of the check matrix. Throws
/// BudgetExceeded when sum C(n, w) over the weights still to be tried
/// would pass options.budget.
DistanceResult exact_distance_small(const ConstacyclicCode& c, const DistanceOptions& options = {});

enum class MdsVerdict { Mds, NotMds, Degenerate, Undecided };

struct MdsCheck {
  MdsVerdict verdict = MdsVerdict::Undecided;
  bool by_bch = false;
  std::optional<std::size_t> exact;
};

MdsCheck is_classical_mds(const ConstacyclicCode& c, const DistanceOptions& options = {});

const char* to_string(MdsVerdict v) noexcept;

}  // namespace eaqmds
