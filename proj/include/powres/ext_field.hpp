#pragma once
// F_q = F_p[t]/(m(t)) for a monic irreducible m of degree n, q = p^n < 2^63.
// Elements are fixed-width coefficient vectors; ElementIndex is the integer
// encoding c0 + c1*p + ... + c_{n-1}*p^(n-1) (constant term least
// significant) and induces the canonical ordering used everywhere.

#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "powres/caps.hpp"
#include "powres/polynomial.hpp"
#include "powres/prime_field.hpp"

namespace powres {

// p >= 2 and q < 2^63 bound the extension degree.
inline constexpr unsigned kMaxExtensionDegree = 62;

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

using ElementIndex = std::uint64_t;

class FieldSpec {
 public:
  // Validates the triple: n >= 1, q = p^n < 2^63, m monic irreducible of
  // degree n over F_p. Construct through make_field.
  FieldSpec(PrimeModulus p, unsigned n, Poly<PrimeFieldOps> modulus);

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  PrimeModulus prime() const noexcept { return p_; }
  unsigned degree() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return q_; }
  std::uint64_t unit_count() const noexcept { return q_ - 1; }
  const Poly<PrimeFieldOps>& modulus() const noexcept { return modulus_; }

  // "F(p^n; m)" with the modulus in canonical ascending text.
  std::string descriptor() const;

  // Low-level kernels on raw coefficient spans of length n (canonical values
  // mod p). Output spans may not alias inputs for mul/pow.
  void add_coeffs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out) const;
  void sub_coeffs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out) const;
  void neg_coeffs(std::span<const std::uint32_t> a, std::span<std::uint32_t> out) const;
  void mul_coeffs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out) const;
  // Square-and-multiply with 0^0 = 1.
  void pow_coeffs(std::span<const std::uint32_t> base, std::uint64_t exp,
                  std::span<std::uint32_t> out) const;

  // Memoized multiplicative-group machinery. Each item is computed at most
  // once under a lock and is immutable afterwards, so concurrent first use is
  // idempotent.
  const std::vector<std::pair<std::uint64_t, int>>& group_order_factors() const;
  const std::vector<std::uint32_t>& generator_coeffs() const;

  struct DlogTable {
    std::uint64_t stride = 0;                                // baby-step count
    std::vector<std::uint32_t> giant;                        // generator^(-stride)
    std::unordered_map<std::uint64_t, std::uint32_t> baby;   // index -> exponent
  };
  const DlogTable& dlog_table() const;

 private:
  PrimeModulus p_;
  unsigned n_;
  std::uint64_t q_;
  Poly<PrimeFieldOps> modulus_;
  std::vector<std::uint32_t> mneg_;  // p - m_j, for reduction by the monic modulus

  mutable std::mutex memo_mutex_;
  mutable std::unique_ptr<const std::vector<std::pair<std::uint64_t, int>>> factors_;
  mutable std::unique_ptr<const std::vector<std::uint32_t>> generator_;
  mutable std::unique_ptr<const DlogTable> dlog_;
};

// Specs interoperate iff they agree as (p, n, m) triples.
bool same_spec(const FieldSpec& a, const FieldSpec& b);

FieldRef make_field(std::uint64_t p, unsigned n);
FieldRef make_field(std::uint64_t p, unsigned n, const Poly<PrimeFieldOps>& modulus);

// Descriptor grammar: "F(p^n; m)", "F(p^n)" (canonical default modulus), and
// the prime-field shorthand "F(p)". Whitespace is tolerated.
FieldRef parse_field(std::string_view descriptor);

class FieldElement {
 public:
  // coeffs must have length n with canonical values in [0, p-1].
  FieldElement(FieldRef spec, std::vector<std::uint32_t> coeffs);

  const FieldRef& spec() const noexcept { return spec_; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_spec(*a.spec_, *b.spec_) && a.c_ == b.c_;
  }

 private:
  FieldRef spec_;
  std::vector<std::uint32_t> c_;
};

FieldElement zero_element(const FieldRef& spec);
FieldElement one_element(const FieldRef& spec);

// Embedding of the prime subfield: v mod p as a constant element.
FieldElement element_from_integer(const FieldRef& spec, std::int64_t v);

ElementIndex element_index(const FieldElement& a) noexcept;
FieldElement element_from_index(const FieldRef& spec, ElementIndex idx);

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
FieldElement operator*(const FieldElement& a, const FieldElement& b);

FieldElement ff_pow(const FieldElement& a, std::uint64_t exp);

// Extended-Euclid inverse of the representative polynomial modulo m.
FieldElement ff_inv(const FieldElement& a);

// All q - 1 units in ElementIndex order. Refuses when q exceeds the cap.
std::vector<FieldElement> enumerate_units(const FieldRef& spec,
                                          std::uint64_t cap = kDefaultEnumerationCap);

// Multiplicative order via the factorization of q - 1 (strip prime factors
// while the power stays 1); never iterates the group.
std::uint64_t element_order(const FieldElement& a);

// The element of least ElementIndex whose order is q - 1. Deterministic.
FieldElement find_generator(const FieldRef& spec);

// Conversions between elements and representative polynomials over F_p.
// element_from_poly reduces inputs of degree >= n by the field modulus.
Poly<PrimeFieldOps> to_poly(const FieldElement& a);
FieldElement element_from_poly(const FieldRef& spec, const Poly<PrimeFieldOps>& f);

// Accepts polynomial text ("5+3*t+7*t^2", any term order), a bracketed
// coefficient list ("[5,3,7]"), or a bare integer for prime-subfield
// elements. Terms of degree >= n are reduced via m.
FieldElement parse_element(const FieldRef& spec, std::string_view text);

// Canonical ascending text; round-trips through parse_element.
std::string format_element(const FieldElement& a);

inline std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << format_element(a);
}

// Coefficient capability of F_q, so the one polynomial engine also serves
// polynomials with extension-field coefficients.
struct ExtFieldOps {
  using Element = FieldElement;

  FieldRef spec;

  explicit ExtFieldOps(FieldRef s) : spec(std::move(s)) {}

  Element zero() const { return zero_element(spec); }
  Element one() const { return one_element(spec); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return ff_inv(a); }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool same_as(const ExtFieldOps& o) const { return same_spec(*spec, *o.spec); }
  std::string describe() const { return spec->descriptor(); }
};

// Text for polynomials with F_q coefficients (default variable "x");
// non-constant coefficients are parenthesized.
std::string format_poly(const Poly<ExtFieldOps>& f, std::string_view var = "x");

inline std::ostream& operator<<(std::ostream& os, const Poly<ExtFieldOps>& f) {
  return os << format_poly(f);
}

}  // namespace powres
