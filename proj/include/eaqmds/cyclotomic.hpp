#pragma once

// q^2-cyclotomic cosets on the class set Omega = {1 + r*i mod rn} and the
// skew decomposition of a defining set. Everything here is integer-only.

#include <cstdint>
#include <vector>

namespace eaqmds {

/// Ambient constacyclic setting: length n over F_{q^2}, eta of order r.
struct CodeSpec {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint64_t n = 0;
  std::uint64_t rn = 0;
  std::uint64_t m = 0;  // ord_{rn}(q^2)

  /// Validates q a prime power, r | q+1, n >= 1, gcd(n, q) = 1.
  static CodeSpec make(std::uint64_t q, std::uint64_t r, std::uint64_t n);

  bool in_omega(std::uint64_t s) const noexcept { return s < rn && s % r == 1 % r; }
  /// s -> (rn - q*s) mod rn.
  std::uint64_t skew(std::uint64_t s) const noexcept;
  /// Class index i of s = 1 + r*i.
  std::uint64_t index_of(std::uint64_t s) const noexcept { return ((s + rn - 1) % rn) / r; }
  std::uint64_t element_at(std::uint64_t i) const noexcept { return (1 + r * (i % n)) % rn; }

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// {1 + r*i mod rn : 0 <= i < n}, ascending.
std::vector<std::uint64_t> omega_set(const CodeSpec& spec);

struct CyclotomicCoset {
  CodeSpec spec;
  std::uint64_t leader = 0;             // smallest element
  std::vector<std::uint64_t> elements;  // ascending

  bool contains(std::uint64_t s) const noexcept;
  friend bool operator==(const CyclotomicCoset& a, const CyclotomicCoset& b) {
    return a.spec == b.spec && a.elements == b.elements;
  }
};

/// Orbit of s under multiplication by q^2; s must lie in Omega.
CyclotomicCoset coset(const CodeSpec& spec, std::uint64_t s);
/// All cosets of Omega ordered by leader.
std::vector<CyclotomicCoset> partition(const CodeSpec& spec);

bool is_skew_symmetric(const CyclotomicCoset& c);
/// True iff the skew map sends c1 into c2. With c1 == c2 this reduces to
/// is_skew_symmetric.
bool forms_skew_pair(const CyclotomicCoset& c1, const CyclotomicCoset& c2);
/// The coset containing skew(leader).
CyclotomicCoset skew_partner(const CyclotomicCoset& c);

class DefiningSet {
 public:
  DefiningSet() = default;

  /// Union of the cosets through each representative (any element of Omega).
  static DefiningSet from_cosets(const CodeSpec& spec, const std::vector<std::uint64_t>& reps);
  /// Raw element set; only Omega membership is enforced, so the result may
  /// fail to be a union of cosets (see is_coset_closed).
  static DefiningSet from_elements(const CodeSpec& spec, std::vector<std::uint64_t> elements);

  const CodeSpec& spec() const noexcept { return spec_; }
  const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::uint64_t s) const noexcept;
  bool is_coset_closed() const;
  /// Leaders of the cosets meeting T.
  std::vector<std::uint64_t> leaders() const;

 private:
  DefiningSet(CodeSpec spec, std::vector<std::uint64_t> elements);

  CodeSpec spec_;
  std::vector<std::uint64_t> elements_;  // ascending, distinct
};

/// Elementwise skew image, in the order of t.elements().
std::vector<std::uint64_t> t_minus_q(const DefiningSet& t);

struct Decomposition {
  std::vector<std::uint64_t> t_ss;   // T ∩ T^{-q}
  std::vector<std::uint64_t> t_sas;  // T \ t_ss
};

Decomposition decompose(const DefiningSet& t);
/// The Hermitian dual is contained in the code iff T ∩ T^{-q} is empty.
bool dual_containing(const DefiningSet& t);

}  // namespace eaqmds
