#include "eaqmds/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "eaqmds/numtheory.hpp"

namespace eaqmds {

namespace {

constexpr unsigned kMaxDegree = 32;
using Digits = std::array<std::uint64_t, kMaxDegree>;

// Dense polynomials over F_p used only for the modulus search.
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

PolyP poly_mod(PolyP a, const PolyP& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = (a[shift + j] + p - mul_mod(c, f[j], p)) % p;
    }
    trim(a);
  }
  return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(out), f, p);
}

PolyP poly_powmod(PolyP base, std::uint64_t e, const PolyP& f, std::uint64_t p) {
  PolyP result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

PolyP poly_gcd(PolyP a, PolyP b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Inverse of a square matrix over F_p by Gauss-Jordan; empty when singular.
std::vector<std::uint32_t> invert_mod_p(std::vector<std::uint64_t> m, std::size_t n,
                                        std::uint64_t p) {
  std::vector<std::uint64_t> inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return {};
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m[col * n + j], m[pivot * n + j]);
      std::swap(inv[col * n + j], inv[pivot * n + j]);
    }
    const std::uint64_t s = inv_mod_p(m[col * n + col], p);
    for (std::size_t j = 0; j < n; ++j) {
      m[col * n + j] = mul_mod(m[col * n + j], s, p);
      inv[col * n + j] = mul_mod(inv[col * n + j], s, p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == 0) continue;
      const std::uint64_t f = m[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r * n + j] = (m[r * n + j] + p - mul_mod(f, m[col * n + j], p)) % p;
        inv[r * n + j] = (inv[r * n + j] + p - mul_mod(f, inv[col * n + j], p)) % p;
      }
    }
  }
  return {inv.begin(), inv.end()};
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
  if (monic.size() < 2 || monic.back() != 1) {
    throw InvalidInput("is_irreducible_mod_p: expected a monic polynomial of degree >= 1");
  }
  const unsigned degree = static_cast<unsigned>(monic.size() - 1);
  if (degree == 1) return true;
  const PolyP f(monic.begin(), monic.end());
  const PolyP x{0, 1};
  // Rabin: x^{p^L} = x mod f, and gcd(x^{p^{L/l}} - x, f) = 1 for each prime l | L.
  std::vector<PolyP> frob(degree + 1);
  frob[0] = poly_mod(x, f, p);
  for (unsigned i = 1; i <= degree; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (frob[degree] != frob[0]) return false;
  for (std::uint64_t ell : prime_divisors(degree)) {
    PolyP h = frob[degree / ell];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    const PolyP g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, unsigned degree) {
  const auto count = checked_pow(p, degree, Field::kMaxSize);
  if (!count) throw BudgetExceeded("canonical_modulus: p^degree exceeds 2^32");
  std::vector<std::uint32_t> f(degree + 1, 0);
  f[degree] = 1;
  for (std::uint64_t code = 0; code < *count; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible_mod_p(f, p)) return f;
  }
  throw std::logic_error("canonical_modulus: no irreducible polynomial found");
}

FieldPtr Field::make(std::uint64_t p, unsigned degree) {
  if (!is_prime(p)) throw InvalidInput("make_field: characteristic " + std::to_string(p) + " is not prime");
  if (degree < 1) throw InvalidInput("make_field: extension degree must be >= 1");
  if (!checked_pow(p, degree, kMaxSize)) {
    throw BudgetExceeded("make_field: " + std::to_string(p) + "^" + std::to_string(degree) +
                         " exceeds 2^32 elements");
  }
  const auto p32 = static_cast<std::uint32_t>(p);
  return std::make_shared<const Field>(Private{}, p32, degree, canonical_modulus(p32, degree),
                                       std::nullopt);
}

FieldPtr Field::make_hermitian(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw InvalidInput("make_hermitian: q = " + std::to_string(q) + " is not a prime power");
  const auto [p, a] = *pp;
  if (!checked_pow(p, 2 * a, kMaxSize)) throw BudgetExceeded("make_hermitian: q^2 exceeds 2^32");
  const auto p32 = static_cast<std::uint32_t>(p);
  return std::make_shared<const Field>(Private{}, p32, 2 * a, canonical_modulus(p32, 2 * a), q);
}

Field::Field(Private, std::uint32_t p, unsigned degree, std::vector<std::uint32_t> modulus,
             std::optional<std::uint64_t> hermitian_q)
    : p_(p),
      degree_(degree),
      size_(*checked_pow(p, degree, kMaxSize)),
      modulus_(std::move(modulus)),
      hermitian_q_(hermitian_q) {
  if (degree_ > kMaxDegree) throw BudgetExceeded("Field: degree above 32");
  group_primes_ = prime_divisors(size_ - 1 == 0 ? 1 : size_ - 1);
  find_primitive();
  if (size_ <= kTableLimit) build_tables();
}

void Field::find_primitive() {
  const std::uint64_t group = size_ - 1;
  for (std::uint64_t v = 1; v < size_; ++v) {
    const Elem g{static_cast<std::uint32_t>(v)};
    bool full = true;
    for (std::uint64_t ell : group_primes_) {
      if (pow_slow(g, group / ell) == one()) {
        full = false;
        break;
      }
    }
    if (full) {
      primitive_ = g;
      return;
    }
  }
  throw std::logic_error("Field: no primitive element");
}

void Field::build_tables() {
  group_order_ = static_cast<std::uint32_t>(size_ - 1);
  log_.assign(size_, 0);
  exp_.assign(2 * std::size_t{group_order_}, 0);
  zech_.assign(group_order_, -1);
  Elem x = one();
  for (std::uint32_t i = 0; i < group_order_; ++i) {
    exp_[i] = x.v;
    exp_[i + group_order_] = x.v;
    log_[x.v] = i;
    x = mul_slow(x, primitive_);
  }
  for (std::uint32_t i = 0; i < group_order_; ++i) {
    const Elem s = add_slow(one(), Elem{exp_[i]});
    zech_[i] = s.v == 0 ? -1 : static_cast<std::int32_t>(log_[s.v]);
  }
}

Elem Field::from_int(std::int64_t value) const noexcept {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > degree_) throw InvalidInput("from_coords: too many coordinates");
  std::uint64_t v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= p_) throw InvalidInput("from_coords: coordinate out of range");
    v = v * p_ + coords[i];
  }
  return Elem{static_cast<std::uint32_t>(v)};
}

std::vector<std::uint32_t> Field::coords(Elem a) const {
  std::vector<std::uint32_t> out(degree_, 0);
  std::uint64_t v = a.v;
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return out;
}

namespace {

Digits decode(std::uint64_t v, std::uint32_t p, unsigned degree) {
  Digits d{};
  for (unsigned i = 0; i < degree; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

Elem encode(const Digits& d, std::uint32_t p, unsigned degree) {
  std::uint64_t v = 0;
  for (unsigned i = degree; i-- > 0;) v = v * p + d[i];
  return Elem{static_cast<std::uint32_t>(v)};
}

}  // namespace

Elem Field::add_slow(Elem a, Elem b) const noexcept {
  Digits da = decode(a.v, p_, degree_);
  const Digits db = decode(b.v, p_, degree_);
  for (unsigned i = 0; i < degree_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da, p_, degree_);
}

Elem Field::neg_slow(Elem a) const noexcept {
  Digits da = decode(a.v, p_, degree_);
  for (unsigned i = 0; i < degree_; ++i) da[i] = (p_ - da[i]) % p_;
  return encode(da, p_, degree_);
}

Elem Field::mul_slow(Elem a, Elem b) const noexcept {
  if (degree_ == 1) return Elem{static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
  // degree >= 2 implies p < 2^16, so raw products and short sums fit in 64 bits.
  const Digits da = decode(a.v, p_, degree_);
  const Digits db = decode(b.v, p_, degree_);
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < degree_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) prod[i + j] += da[i] * db[j];
  }
  for (unsigned k = 2 * degree_ - 2; k >= degree_; --k) {
    const std::uint64_t c = prod[k] % p_;
    if (c == 0) continue;
    for (unsigned j = 0; j < degree_; ++j) {
      prod[k - degree_ + j] += c * ((p_ - modulus_[j]) % p_);
    }
  }
  Digits out{};
  for (unsigned i = 0; i < degree_; ++i) out[i] = prod[i] % p_;
  return encode(out, p_, degree_);
}

Elem Field::pow_slow(Elem a, std::uint64_t e) const noexcept {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  if (!log_.empty()) {
    const std::uint64_t l = std::uint64_t{log_[a.v]} * (e % group_order_) % group_order_;
    return Elem{exp_[l]};
  }
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw std::domain_error("Field::inv: zero has no inverse");
  if (!log_.empty()) return Elem{exp_[group_order_ - log_[a.v]]};
  return pow(a, size_ - 2);
}

Elem Field::conj(Elem a) const {
  if (!hermitian_q_) {
    throw InvalidInput("conj: field of size " + std::to_string(size_) +
                       " is not a designated F_{q^2} level");
  }
  return pow(a, *hermitian_q_);
}

std::uint64_t Field::order(Elem a) const {
  if (a.v == 0) throw std::domain_error("Field::order: zero has no multiplicative order");
  std::uint64_t ord = size_ - 1;
  for (std::uint64_t ell : group_primes_) {
    while (ord % ell == 0 && pow(a, ord / ell) == one()) ord /= ell;
  }
  return ord;
}

std::string Field::format(Elem a) const {
  if (degree_ == 1) return std::to_string(a.v);
  std::ostringstream os;
  os << '(';
  const auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- embedding

struct ExtensionBuilder {
  static Embedding identity(FieldPtr field) {
    Embedding e;
    e.source_ = field;
    e.target_ = field;
    e.beta_ = field->degree() == 1 ? Field::zero() : Elem{field->characteristic()};
    return e;
  }

  static Embedding build(FieldPtr base, FieldPtr target) {
    Embedding e;
    e.source_ = base;
    e.target_ = target;
    const Field& T = *target;
    const unsigned l = base->degree();
    const auto& f = base->modulus();

    auto eval = [&](Elem y) {
      Elem acc = Field::zero();
      for (std::size_t i = f.size(); i-- > 0;) acc = T.add(T.mul(acc, y), T.from_int(f[i]));
      return acc;
    };

    // Roots of the base modulus lie in the embedded copy of the base field:
    // {0} together with the powers of theta.
    std::optional<Elem> best;
    if (eval(Field::zero()) == Field::zero()) best = Field::zero();
    const std::uint64_t sub_order = base->size() - 1;
    const Elem theta = T.pow(T.primitive(), (T.size() - 1) / sub_order);
    Elem y = Field::one();
    for (std::uint64_t j = 0; j < sub_order; ++j) {
      if (eval(y) == Field::zero() && (!best || y < *best)) best = y;
      y = T.mul(y, theta);
    }
    if (!best) throw std::logic_error("extend: base modulus has no root in the extension");
    e.beta_ = *best;

    e.basis_images_.resize(l);
    Elem power = Field::one();
    for (unsigned i = 0; i < l; ++i) {
      e.basis_images_[i] = power;
      power = T.mul(power, e.beta_);
    }

    // Pick l target coordinates on which the images of the basis are independent.
    const std::uint64_t p = T.characteristic();
    std::vector<std::vector<std::uint32_t>> cols(l);
    for (unsigned i = 0; i < l; ++i) cols[i] = T.coords(e.basis_images_[i]);
    std::vector<std::vector<std::uint64_t>> echelon;  // reduced chosen rows
    std::vector<unsigned> lead;
    for (unsigned r = 0; r < T.degree() && e.pivot_coords_.size() < l; ++r) {
      std::vector<std::uint64_t> row(l);
      for (unsigned i = 0; i < l; ++i) row[i] = cols[i][r];
      for (std::size_t b = 0; b < echelon.size(); ++b) {
        const std::uint64_t c = row[lead[b]];
        if (c == 0) continue;
        for (unsigned i = 0; i < l; ++i) row[i] = (row[i] + p - mul_mod(c, echelon[b][i], p)) % p;
      }
      const auto nz = std::find_if(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; });
      if (nz == row.end()) continue;
      const auto piv = static_cast<unsigned>(nz - row.begin());
      const std::uint64_t s = inv_mod_p(row[piv], p);
      for (auto& v : row) v = mul_mod(v, s, p);
      echelon.push_back(std::move(row));
      lead.push_back(piv);
      e.pivot_coords_.push_back(r);
    }
    if (e.pivot_coords_.size() != l) throw std::logic_error("extend: embedding is not injective");
    std::vector<std::uint64_t> block(std::size_t{l} * l);
    for (unsigned a = 0; a < l; ++a) {
      for (unsigned i = 0; i < l; ++i) block[a * l + i] = cols[i][e.pivot_coords_[a]];
    }
    e.solve_inv_ = invert_mod_p(std::move(block), l, p);
    return e;
  }
};

Embedding Embedding::identity(FieldPtr field) { return ExtensionBuilder::identity(std::move(field)); }

Elem Embedding::apply(Elem a) const {
  if (source_ == target_) return a;
  const Field& T = *target_;
  const auto c = source_->coords(a);
  Elem acc = Field::zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) acc = T.add(acc, T.mul(T.from_int(c[i]), basis_images_[i]));
  }
  return acc;
}

std::optional<Elem> Embedding::descend(Elem y) const {
  if (source_ == target_) return y;
  const auto yc = target_->coords(y);
  const std::size_t l = pivot_coords_.size();
  const std::uint64_t p = target_->characteristic();
  std::vector<std::uint32_t> a(l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < l; ++j) {
      acc = (acc + mul_mod(solve_inv_[i * l + j], yc[pivot_coords_[j]], p)) % p;
    }
    a[i] = static_cast<std::uint32_t>(acc);
  }
  const Elem candidate = source_->from_coords(a);
  if (apply(candidate) != y) return std::nullopt;
  return candidate;
}

Extension extend(const FieldPtr& base, unsigned degree) {
  if (degree < 1) throw InvalidInput("extend: degree must be >= 1");
  if (degree == 1) return {base, Embedding::identity(base)};
  const auto target = Field::make(base->characteristic(), base->degree() * degree);
  return {target, ExtensionBuilder::build(base, target)};
}

}  // namespace eaqmds
