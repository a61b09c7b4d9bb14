#include "eaqmds/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace eaqmds {

namespace {

const Field& common_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field() && *a.field() != *b.field()) {
    throw InvalidInput("Poly: operands over different fields");
  }
  return *a.field();
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::monomial(FieldPtr field, std::size_t degree, Elem coeff) {
  std::vector<Elem> c(degree + 1, Field::zero());
  c[degree] = coeff;
  return Poly(std::move(field), std::move(c));
}

Poly Poly::linear(FieldPtr field, Elem root) {
  const Elem c0 = field->neg(root);
  return Poly(std::move(field), {c0, Field::one()});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Field::zero()) coeffs_.pop_back();
}

Elem Poly::eval(Elem x) const {
  const Field& F = *field_;
  Elem acc = Field::zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Field& F = *field_;
  const Elem s = F.inv(leading());
  std::vector<Elem> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [&](Elem v) { return F.mul(v, s); });
  return Poly(field_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  const Field& F = common_field(a, b);
  std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Field& F = common_field(a, b);
  std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field& F = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, Field::zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == Field::zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = F.fma(c[i + j], a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return Poly(a.field_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const Field& F = common_field(a, b);
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(a.field()), a};
  std::vector<Elem> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Elem> quot(rem.size() - db, Field::zero());
  const Elem lead_inv = F.inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == Field::zero()) continue;
    const Elem c = F.mul(rem[k], lead_inv);
    quot[k - db] = c;
    const Elem nc = F.neg(c);
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = F.fma(rem[k - db + j], nc, b.coeffs()[j]);
  }
  rem.resize(db);
  return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

}  // namespace eaqmds
