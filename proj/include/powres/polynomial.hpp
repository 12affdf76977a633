#pragma once
// Dense univariate polynomials over an abstract coefficient field. One engine
// serves both prime-field coefficients and extension-field coefficients; the
// field is passed as a small capability object.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powres/modmath.hpp"
#include "powres/prime_field.hpp"

namespace powres {

template <typename F>
concept CoefficientField =
    std::copy_constructible<F> &&
    requires(const F& f, const typename F::Element& a, const typename F::Element& b) {
      { f.zero() } -> std::convertible_to<typename F::Element>;
      { f.one() } -> std::convertible_to<typename F::Element>;
      { f.add(a, b) } -> std::convertible_to<typename F::Element>;
      { f.sub(a, b) } -> std::convertible_to<typename F::Element>;
      { f.mul(a, b) } -> std::convertible_to<typename F::Element>;
      { f.inv(a) } -> std::convertible_to<typename F::Element>;
      { f.eq(a, b) } -> std::convertible_to<bool>;
      { f.is_zero(a) } -> std::convertible_to<bool>;
      { f.same_as(f) } -> std::convertible_to<bool>;
      { f.describe() } -> std::convertible_to<std::string>;
    };

// Coefficient capability of Z/pZ. Element is the canonical residue value.
struct PrimeFieldOps {
  using Element = std::uint32_t;

  PrimeModulus mod;

  explicit PrimeFieldOps(PrimeModulus m) noexcept : mod(m) {}

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    if (s >= mod.value()) s -= mod.value();
    return s;
  }
  Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : a + mod.value() - b;
  }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % mod.value());
  }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("prime field: zero is not invertible");
    return static_cast<Element>(invmod_u64(a, mod.value()));
  }
  bool eq(Element a, Element b) const noexcept { return a == b; }
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool same_as(const PrimeFieldOps& o) const noexcept { return mod == o.mod; }
  std::string describe() const { return "F(" + std::to_string(mod.value()) + ")"; }
};

// Normalized dense coefficient vector: index i holds the coefficient of x^i,
// the top coefficient is nonzero, and the zero polynomial is the empty vector.
template <CoefficientField F>
class Poly {
 public:
  using Element = typename F::Element;

  explicit Poly(F field) : field_(std::move(field)) {}

  Poly(F field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Poly monomial(const F& field, Element c, std::size_t degree) {
    std::vector<Element> v(degree + 1, field.zero());
    v[degree] = c;
    return Poly(field, std::move(v));
  }

  static Poly constant(const F& field, Element c) { return monomial(field, c, 0); }
  static Poly variable(const F& field) { return monomial(field, field.one(), 1); }

  // -1 stands in for the degree of the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && field_.eq(coeffs_[0], field_.one()); }

  Element coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
  const F& field() const noexcept { return field_; }

  Element leading() const {
    if (is_zero()) throw std::domain_error("leading: zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const { return !is_zero() && field_.eq(coeffs_.back(), field_.one()); }

 private:
  F field_;
  std::vector<Element> coeffs_;

  void normalize() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }
};

namespace detail {
template <CoefficientField F>
void require_same_field(const Poly<F>& a, const Poly<F>& b) {
  if (!a.field().same_as(b.field()))
    throw std::domain_error("polynomial arithmetic: coefficient fields differ (" +
                            a.field().describe() + " vs " + b.field().describe() + ")");
}
}  // namespace detail

template <CoefficientField F>
bool operator==(const Poly<F>& a, const Poly<F>& b) {
  if (!a.field().same_as(b.field())) return false;
  if (a.coeffs().size() != b.coeffs().size()) return false;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (!a.field().eq(a.coeffs()[i], b.coeffs()[i])) return false;
  return true;
}

template <CoefficientField F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
  detail::require_same_field(a, b);
  const F& K = a.field();
  std::vector<typename F::Element> out(std::max(a.coeffs().size(), b.coeffs().size()), K.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = K.add(a.coeff(i), b.coeff(i));
  return Poly<F>(K, std::move(out));
}

template <CoefficientField F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
  detail::require_same_field(a, b);
  const F& K = a.field();
  std::vector<typename F::Element> out(std::max(a.coeffs().size(), b.coeffs().size()), K.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = K.sub(a.coeff(i), b.coeff(i));
  return Poly<F>(K, std::move(out));
}

template <CoefficientField F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
  detail::require_same_field(a, b);
  const F& K = a.field();
  if (a.is_zero() || b.is_zero()) return Poly<F>(K);
  std::vector<typename F::Element> out(a.coeffs().size() + b.coeffs().size() - 1, K.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto& ai = a.coeffs()[i];
    if (K.is_zero(ai)) continue;  // sparse operands are common here
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      const auto& bj = b.coeffs()[j];
      if (K.is_zero(bj)) continue;
      out[i + j] = K.add(out[i + j], K.mul(ai, bj));
    }
  }
  return Poly<F>(K, std::move(out));
}

// Quotient and remainder with deg r < deg g; g need not be monic. The inner
// loop walks only the nonzero coefficients of g, so division by a sparse
// divisor of high degree stays linear in deg f.
template <CoefficientField F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& f, const Poly<F>& g) {
  detail::require_same_field(f, g);
  if (g.is_zero()) throw std::domain_error("poly_divmod: division by the zero polynomial");
  const F& K = f.field();
  if (f.degree() < g.degree()) return {Poly<F>(K), f};

  const auto dg = static_cast<std::size_t>(g.degree());
  const auto df = static_cast<std::size_t>(f.degree());
  const auto lead_inv = K.inv(g.leading());

  std::vector<std::pair<std::size_t, typename F::Element>> gterms;
  for (std::size_t i = 0; i < dg; ++i)
    if (!K.is_zero(g.coeffs()[i])) gterms.emplace_back(i, g.coeffs()[i]);

  std::vector<typename F::Element> rem = f.coeffs();
  std::vector<typename F::Element> quot(df - dg + 1, K.zero());
  for (std::size_t i = df + 1; i-- > dg;) {
    if (K.is_zero(rem[i])) continue;
    const auto qc = K.mul(rem[i], lead_inv);
    quot[i - dg] = qc;
    rem[i] = K.zero();
    for (const auto& [j, gj] : gterms) rem[i - dg + j] = K.sub(rem[i - dg + j], K.mul(qc, gj));
  }
  rem.resize(dg, K.zero());
  return {Poly<F>(K, std::move(quot)), Poly<F>(K, std::move(rem))};
}

// Monic gcd by Euclid's algorithm; gcd(f, 0) is the monic scaling of f.
template <CoefficientField F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  detail::require_same_field(a, b);
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("poly_gcd: gcd(0, 0) is undefined");
  const F K = a.field();
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  const auto scale = K.inv(a.leading());
  return Poly<F>::constant(K, scale) * a;
}

template <CoefficientField F>
Poly<F> poly_mod(const Poly<F>& f, const Poly<F>& m) {
  return poly_divmod(f, m).second;
}

template <CoefficientField F>
Poly<F> poly_pow_mod(const Poly<F>& base, std::uint64_t exp, const Poly<F>& m) {
  detail::require_same_field(base, m);
  if (m.degree() < 1) throw std::domain_error("poly_pow_mod: modulus must have degree >= 1");
  const F& K = base.field();
  Poly<F> result = poly_mod(Poly<F>::constant(K, K.one()), m);
  Poly<F> b = poly_mod(base, m);
  while (exp != 0) {
    if (exp & 1) result = poly_mod(result * b, m);
    b = poly_mod(b * b, m);
    exp >>= 1;
  }
  return result;
}

// Inverse of f modulo m via the extended Euclidean algorithm; requires
// gcd(f, m) to be constant.
template <CoefficientField F>
Poly<F> poly_inverse_mod(const Poly<F>& f, const Poly<F>& m) {
  detail::require_same_field(f, m);
  if (m.degree() < 1) throw std::domain_error("poly_inverse_mod: modulus must have degree >= 1");
  const F& K = f.field();
  Poly<F> r0 = m;
  Poly<F> r1 = poly_mod(f, m);
  if (r1.is_zero()) throw std::domain_error("poly_inverse_mod: argument is divisible by the modulus");
  Poly<F> t0(K);
  Poly<F> t1 = Poly<F>::constant(K, K.one());
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.degree() != 0)
    throw std::domain_error("poly_inverse_mod: argument shares a factor with the modulus");
  const auto scale = K.inv(r0.coeff(0));
  return poly_mod(Poly<F>::constant(K, scale) * t0, m);
}

template <CoefficientField F>
typename F::Element poly_eval(const Poly<F>& f, const typename F::Element& x) {
  const F& K = f.field();
  auto acc = K.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = K.add(K.mul(acc, x), f.coeffs()[i]);
  return acc;
}

// Irreducibility over Z/pZ via the Frobenius-power test: m of degree d is
// irreducible iff x^(p^d) = x mod m and gcd(x^(p^(d/l)) - x, m) = 1 for every
// prime l dividing d. Constant input is a domain error.
bool is_irreducible(const Poly<PrimeFieldOps>& m);

// The canonically smallest monic irreducible of degree n: minimal value of
// c0 + c1*p + ... + c_{n-1}*p^(n-1) over the non-leading coefficients.
Poly<PrimeFieldOps> find_irreducible(PrimeModulus p, unsigned n);

// Text format "c0 + c1*t + c2*t^2 + ...": ascending degree, zero terms
// omitted, unit coefficients dropped before the variable, "0" for the zero
// polynomial. The parser accepts arbitrary term order, repeated terms (which
// accumulate), optional whitespace, '-' separators, and coefficients of any
// magnitude (reduced mod p).
std::string format_poly(const Poly<PrimeFieldOps>& f, std::string_view var = "t");
Poly<PrimeFieldOps> parse_poly(std::string_view text, PrimeModulus p, std::string_view var = "t");

inline std::ostream& operator<<(std::ostream& os, const Poly<PrimeFieldOps>& f) {
  return os << format_poly(f);
}

}  // namespace powres
