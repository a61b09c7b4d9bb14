#include "eaqmds/constacyclic.hpp"

#include <algorithm>
#include <string>

#include "eaqmds/errors.hpp"
#include "eaqmds/kernels.hpp"
#include "eaqmds/numtheory.hpp"

namespace eaqmds {

Tower Tower::make(const CodeSpec& spec) {
  const auto top_size = checked_pow(spec.q, static_cast<unsigned>(2 * spec.m), Field::kMaxSize);
  if (spec.m > 16 || !top_size) {
    throw BudgetExceeded("q^(2m) = " + std::to_string(spec.q) + "^" + std::to_string(2 * spec.m) +
                         " exceeds 2^32 elements");
  }
  FieldPtr base = Field::make_hermitian(spec.q);
  Extension ext = extend(base, static_cast<unsigned>(spec.m));
  const Field& T = *ext.field;
  const std::uint64_t e = (T.size() - 1) / spec.rn;
  const Elem gamma = T.primitive();
  const Elem omega = T.pow(gamma, e);
  const auto eta = ext.embedding.descend(T.pow(omega, spec.n));
  if (!eta) throw VerificationFailure("omega^n does not lie in F_{q^2}");
  return Tower{spec, std::move(base), ext.field, std::move(ext.embedding), e, gamma, omega, *eta};
}

ConstacyclicCode build_code(const Tower& tower, const DefiningSet& t) {
  if (!(t.spec() == tower.spec)) throw InvalidInput("build_code: defining set belongs to another spec");
  if (t.empty()) throw InvalidInput("build_code: defining set is empty");
  const CodeSpec& spec = tower.spec;
  const Field& T = *tower.top;
  const FieldPtr& base = tower.base;

  // Multiply out the linear factors in the top field, then descend.
  std::vector<Elem> top{Field::one()};
  for (std::uint64_t j : t.elements()) {
    const Elem root = T.pow(tower.omega, j);
    const Elem nr = T.neg(root);
    top.push_back(Field::zero());
    for (std::size_t i = top.size() - 1; i > 0; --i) top[i] = T.fma(top[i - 1], nr, top[i]);
    top[0] = T.mul(top[0], nr);
  }
  std::vector<Elem> coeffs(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) {
    const auto c = tower.embedding.descend(top[i]);
    if (!c) {
      throw DescentFailure("generator coefficient of x^" + std::to_string(i) +
                           " is not in F_{q^2}; T is not a union of q^2-cyclotomic cosets");
    }
    coeffs[i] = *c;
  }

  ConstacyclicCode code{spec, t, Poly(base, std::move(coeffs)), 0, bch_delta(t), {}, {}};
  const std::size_t n = spec.n;
  const std::size_t deg = t.size();
  code.dim = n - deg;

  Poly modulus = Poly::monomial(base, n, Field::one()) - Poly(base, {tower.eta});
  if (!divmod(modulus, code.gen_poly).second.is_zero()) {
    throw VerificationFailure("generator polynomial does not divide x^n - eta");
  }

  Matrix G(base, code.dim, n);
  for (std::size_t i = 0; i < code.dim; ++i) {
    for (std::size_t j = 0; j <= deg; ++j) G(i, i + j) = code.gen_poly.coeff(j);
  }
  Matrix H = nullspace(G);
  if (H.rows() != deg) throw VerificationFailure("generator matrix is not of full rank");
  if (!kernels::multiply_transposed(G, H).is_zero()) {
    throw VerificationFailure("G * H^T is not zero");
  }
  code.gen_matrix = std::move(G);
  code.check_matrix = std::move(H);
  return code;
}

std::size_t bch_delta(const DefiningSet& t) {
  const CodeSpec& spec = t.spec();
  const std::size_t n = spec.n;
  std::vector<bool> in(n, false);
  for (std::uint64_t s : t.elements()) in[spec.index_of(s)] = true;
  std::size_t gap = 0;
  while (gap < n && in[gap]) ++gap;
  if (gap == n) return n + 1;
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    if (in[(gap + step) % n]) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best + 1;
}

DistanceResult exact_distance_small(const ConstacyclicCode& c, const DistanceOptions& options) {
  DistanceResult res;
  const Matrix& H = c.check_matrix;
  const std::size_t n = c.spec.n;
  const std::size_t rows = H.rows();
  if (c.dim == 0) return res;  // no nonzero codewords

  const std::size_t cap = options.cap == 0 ? rows + 1 : options.cap;
  const std::size_t last = std::min(cap, rows);
  std::uint64_t spent = 0;
  for (std::size_t w = 1; w <= last; ++w) {
    const std::uint64_t cost = binomial(n, w);
    if (cost > options.budget - spent) {
      throw BudgetExceeded("distance oracle: weight " + std::to_string(w) + " needs more than " +
                           std::to_string(options.budget) + " subsets");
    }
    spent += cost;
    auto hit = options.serial ? kernels::find_dependent_columns_serial(H, w)
                              : kernels::find_dependent_columns(H, w);
    if (hit) {
      res.status = DistanceResult::Status::Exact;
      res.distance = w;
      res.witness = std::move(*hit);
      return res;
    }
  }
  if (cap >= rows + 1) {
    // Any rows+1 columns of a rank-`rows` matrix are dependent.
    res.status = DistanceResult::Status::Exact;
    res.distance = rows + 1;
    for (std::size_t i = 0; i <= rows; ++i) res.witness.push_back(i);
    return res;
  }
  res.status = DistanceResult::Status::ExceedsCap;
  res.distance = cap;
  return res;
}

MdsCheck is_classical_mds(const ConstacyclicCode& c, const DistanceOptions& options) {
  MdsCheck out;
  if (c.dim == 0 || c.dim == c.spec.n) {
    out.verdict = MdsVerdict::Degenerate;
    return out;
  }
  const std::size_t target = c.spec.n - c.dim + 1;
  if (c.bch_delta == target) {
    out.verdict = MdsVerdict::Mds;
    out.by_bch = true;
    return out;
  }
  DistanceOptions opt = options;
  opt.cap = target;
  try {
    const auto d = exact_distance_small(c, opt);
    out.exact = d.distance;
    out.verdict = d.distance == target ? MdsVerdict::Mds : MdsVerdict::NotMds;
  } catch (const BudgetExceeded&) {
    out.verdict = MdsVerdict::Undecided;
  }
  return out;
}

const char* to_string(MdsVerdict v) noexcept {
  switch (v) {
    case MdsVerdict::Mds: return "mds";
    case MdsVerdict::NotMds: return "not-mds";
    case MdsVerdict::Degenerate: return "degenerate";
    case MdsVerdict::Undecided: return "undecided";
  }
  return "?";
}

}  // namespace eaqmds
