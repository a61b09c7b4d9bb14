#pragma once

// Finite fields F_{p^l} in the power basis of a canonical modulus.
//
// An element is its coordinate vector (c_0, ..., c_{l-1}) packed as the
// integer c_0 + c_1 p + ... + c_{l-1} p^{l-1}. Integer order of the packed
// value is the canonical element order used for every "smallest such
// element" choice. Fields up to kTableLimit elements also carry log/Zech
// tables; these only accelerate arithmetic and never change results.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eaqmds/errors.hpp"

namespace eaqmds {

struct Elem {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
  struct Private {};

 public:
  /// Largest supported cardinality.
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 32;
  /// Fields at most this large get log/Zech tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

  /// F_{p^l} with the lexicographically smallest monic irreducible modulus.
  static FieldPtr make(std::uint64_t p, unsigned degree);
  /// F_{q^2} tagged so that conj(x) = x^q is available.
  static FieldPtr make_hermitian(std::uint64_t q);

  Field(Private, std::uint32_t p, unsigned degree, std::vector<std::uint32_t> modulus,
        std::optional<std::uint64_t> hermitian_q);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return degree_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Monic modulus, constant term first, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// q when this field is a designated F_{q^2} level.
  std::optional<std::uint64_t> hermitian_q() const noexcept { return hermitian_q_; }
  bool has_tables() const noexcept { return !log_.empty(); }

  static constexpr Elem zero() noexcept { return Elem{0}; }
  static constexpr Elem one() noexcept { return Elem{1}; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t value) const noexcept;
  Elem from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Elem a) const;
  bool contains(Elem a) const noexcept { return a.v < size_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    if (degree_ == 1) {
      const std::uint64_t s = std::uint64_t{a.v} + b.v;
      return Elem{static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
    }
    if (!log_.empty()) {
      const std::uint32_t la = log_[a.v];
      const std::uint32_t lb = log_[b.v];
      const std::uint32_t diff = lb >= la ? lb - la : lb + group_order_ - la;
      const std::int32_t z = zech_[diff];
      if (z < 0) return Elem{0};
      return Elem{exp_[la + static_cast<std::uint32_t>(z)]};
    }
    return add_slow(a, b);
  }

  Elem neg(Elem a) const noexcept {
    if (a.v == 0 || p_ == 2) return a;
    if (degree_ == 1) return Elem{p_ - a.v};
    if (!log_.empty()) return Elem{exp_[log_[a.v] + group_order_ / 2]};
    return neg_slow(a);
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (a.v == 0 || b.v == 0) return Elem{0};
    if (degree_ == 1) {
      return Elem{static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p_)};
    }
    if (!log_.empty()) return Elem{exp_[log_[a.v] + log_[b.v]]};
    return mul_slow(a, b);
  }

  /// a + b*c, the inner step of every elimination and dot product.
  Elem fma(Elem a, Elem b, Elem c) const noexcept { return add(a, mul(b, c)); }

  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// x -> x^p.
  Elem frobenius(Elem a) const noexcept { return pow(a, p_); }
  /// x -> x^q on a designated F_{q^2} level; throws InvalidInput elsewhere.
  Elem conj(Elem a) const;

  /// Multiplicative order; throws std::domain_error on zero.
  std::uint64_t order(Elem a) const;
  /// Canonically smallest element of order size()-1.
  Elem primitive() const noexcept { return primitive_; }

  /// "c0", or "(c0,c1,...)" for extension fields.
  std::string format(Elem a) const;

  /// Same characteristic, degree and modulus; the F_{q^2} tag is ignored.
  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }

 private:
  Elem add_slow(Elem a, Elem b) const noexcept;
  Elem neg_slow(Elem a) const noexcept;
  Elem mul_slow(Elem a, Elem b) const noexcept;
  Elem pow_slow(Elem a, std::uint64_t e) const noexcept;
  void find_primitive();
  void build_tables();

  std::uint32_t p_;
  unsigned degree_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
  std::optional<std::uint64_t> hermitian_q_;
  std::vector<std::uint64_t> group_primes_;  // distinct primes dividing size-1
  Elem primitive_{};

  std::uint32_t group_order_ = 0;
  std::vector<std::uint32_t> log_;  // log_[v] for v != 0
  std::vector<std::uint32_t> exp_;  // doubled: exp_[i] for i < 2*(size-1)
  std::vector<std::int32_t> zech_;  // log(1 + g^i) or -1 when that sum is 0
};

/// Injective ring map from a subfield into an extension, x -> beta with
/// beta the canonical root of the source modulus.
class Embedding {
 public:
  static Embedding identity(FieldPtr field);

  const FieldPtr& source() const noexcept { return source_; }
  const FieldPtr& target() const noexcept { return target_; }
  /// Image of the source generator x.
  Elem generator_image() const noexcept { return beta_; }

  Elem apply(Elem a) const;
  /// Preimage when `y` lies in the embedded subfield.
  std::optional<Elem> descend(Elem y) const;

 private:
  friend struct ExtensionBuilder;
  Embedding() = default;

  FieldPtr source_;
  FieldPtr target_;
  Elem beta_{};
  std::vector<Elem> basis_images_;        // beta^i
  std::vector<unsigned> pivot_coords_;    // target coordinates solved for
  std::vector<std::uint32_t> solve_inv_;  // inverse of the pivot block, over F_p
};

struct Extension {
  FieldPtr field;
  Embedding embedding;
};

/// F_{p^{l*degree}} together with the embedding of `base`.
Extension extend(const FieldPtr& base, unsigned degree);

/// Canonical modulus search, exposed for tests: smallest monic irreducible
/// of the given degree over F_p.
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, unsigned degree);

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace eaqmds
