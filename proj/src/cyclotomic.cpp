#include "eaqmds/cyclotomic.hpp"

#include <algorithm>
#include <string>

#include "eaqmds/errors.hpp"
#include "eaqmds/numtheory.hpp"

namespace eaqmds {

CodeSpec CodeSpec::make(std::uint64_t q, std::uint64_t r, std::uint64_t n) {
  if (!as_prime_power(q)) throw InvalidInput("q=" + std::to_string(q) + " is not a prime power");
  if (r == 0 || (q + 1) % r != 0) {
    throw InvalidInput("r=" + std::to_string(r) + " does not divide q+1=" + std::to_string(q + 1));
  }
  if (n == 0) throw InvalidInput("n must be positive");
  if (gcd(n, q) != 1) throw InvalidInput("gcd(n, q) != 1 for n=" + std::to_string(n));
  if (n > (UINT64_C(1) << 31) / r) throw BudgetExceeded("rn is too large");
  CodeSpec s;
  s.q = q;
  s.r = r;
  s.n = n;
  s.rn = r * n;
  s.m = multiplicative_order(mul_mod(q, q, s.rn), s.rn);
  return s;
}

std::uint64_t CodeSpec::skew(std::uint64_t s) const noexcept {
  const std::uint64_t qs = mul_mod(q % rn, s, rn);
  return (rn - qs) % rn;
}

std::vector<std::uint64_t> omega_set(const CodeSpec& spec) {
  std::vector<std::uint64_t> out(spec.n);
  for (std::uint64_t i = 0; i < spec.n; ++i) out[i] = spec.element_at(i);
  std::sort(out.begin(), out.end());
  return out;
}

bool CyclotomicCoset::contains(std::uint64_t s) const noexcept {
  return std::binary_search(elements.begin(), elements.end(), s);
}

CyclotomicCoset coset(const CodeSpec& spec, std::uint64_t s) {
  if (!spec.in_omega(s)) {
    throw InvalidInput(std::to_string(s) + " is not in Omega (mod " + std::to_string(spec.rn) + ")");
  }
  const std::uint64_t q2 = mul_mod(spec.q, spec.q, spec.rn);
  CyclotomicCoset c;
  c.spec = spec;
  std::uint64_t x = s;
  do {
    c.elements.push_back(x);
    x = mul_mod(x, q2, spec.rn);
  } while (x != s);
  std::sort(c.elements.begin(), c.elements.end());
  c.leader = c.elements.front();
  return c;
}

std::vector<CyclotomicCoset> partition(const CodeSpec& spec) {
  std::vector<CyclotomicCoset> out;
  std::vector<bool> seen(spec.rn, false);
  for (std::uint64_t s : omega_set(spec)) {
    if (seen[s]) continue;
    out.push_back(coset(spec, s));
    for (std::uint64_t x : out.back().elements) seen[x] = true;
  }
  return out;
}

bool is_skew_symmetric(const CyclotomicCoset& c) { return c.contains(c.spec.skew(c.leader)); }

bool forms_skew_pair(const CyclotomicCoset& c1, const CyclotomicCoset& c2) {
  if (c1.spec != c2.spec) throw InvalidInput("forms_skew_pair: cosets from different specs");
  // skew maps cosets onto cosets, so testing one element suffices.
  return c2.contains(c1.spec.skew(c1.leader));
}

CyclotomicCoset skew_partner(const CyclotomicCoset& c) { return coset(c.spec, c.spec.skew(c.leader)); }

DefiningSet::DefiningSet(CodeSpec spec, std::vector<std::uint64_t> elements)
    : spec_(spec), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

DefiningSet DefiningSet::from_cosets(const CodeSpec& spec, const std::vector<std::uint64_t>& reps) {
  std::vector<std::uint64_t> all;
  for (std::uint64_t s : reps) {
    const auto c = coset(spec, s % spec.rn);
    all.insert(all.end(), c.elements.begin(), c.elements.end());
  }
  return DefiningSet(spec, std::move(all));
}

DefiningSet DefiningSet::from_elements(const CodeSpec& spec, std::vector<std::uint64_t> elements) {
  for (std::uint64_t s : elements) {
    if (!spec.in_omega(s)) throw InvalidInput(std::to_string(s) + " is not in Omega");
  }
  return DefiningSet(spec, std::move(elements));
}

bool DefiningSet::contains(std::uint64_t s) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), s);
}

bool DefiningSet::is_coset_closed() const {
  const std::uint64_t q2 = mul_mod(spec_.q, spec_.q, spec_.rn);
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](std::uint64_t s) { return contains(mul_mod(s, q2, spec_.rn)); });
}

std::vector<std::uint64_t> DefiningSet::leaders() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s : elements_) out.push_back(coset(spec_, s).leader);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> t_minus_q(const DefiningSet& t) {
  std::vector<std::uint64_t> out;
  out.reserve(t.size());
  for (std::uint64_t s : t.elements()) out.push_back(t.spec().skew(s));
  return out;
}

Decomposition decompose(const DefiningSet& t) {
  std::vector<std::uint64_t> image = t_minus_q(t);
  std::sort(image.begin(), image.end());
  Decomposition d;
  for (std::uint64_t s : t.elements()) {
    if (std::binary_search(image.begin(), image.end(), s)) {
      d.t_ss.push_back(s);
    } else {
      d.t_sas.push_back(s);
    }
  }
  return d;
}

bool dual_containing(const DefiningSet& t) { return decompose(t).t_ss.empty(); }

}  // namespace eaqmds
