#pragma once

#include <utility>
#include <vector>

#include "eaqmds/field.hpp"

namespace eaqmds {

/// Univariate polynomial over a Field; coefficients constant term first,
/// trailing zeros trimmed so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly monomial(FieldPtr field, std::size_t degree, Elem coeff);
  /// x - root.
  static Poly linear(FieldPtr field, Elem root);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Field::zero(); }
  Elem leading() const noexcept { return coeffs_.empty() ? Field::zero() : coeffs_.back(); }

  Elem eval(Elem x) const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// Quotient and remainder; throws std::domain_error when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

}  // namespace eaqmds
