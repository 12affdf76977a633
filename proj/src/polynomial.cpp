#include "powres/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "powres/modmath.hpp"

namespace powres {

bool is_irreducible(const Poly<PrimeFieldOps>& m_in) {
  if (m_in.degree() < 1)
    throw std::domain_error("is_irreducible: input must have degree >= 1");
  const PrimeFieldOps K = m_in.field();

  Poly<PrimeFieldOps> m = m_in;
  if (!m.is_monic()) m = Poly<PrimeFieldOps>::constant(K, K.inv(m.leading())) * m;
  const auto d = static_cast<std::uint64_t>(m.degree());
  if (d == 1) return true;

  const std::uint64_t p = K.mod.value();
  const auto x = Poly<PrimeFieldOps>::variable(K);

  std::vector<std::uint64_t> checkpoints;  // d/l for each prime l | d
  for (const auto& [l, e] : factorize(d)) checkpoints.push_back(d / l);

  // Frobenius ladder: after the k-th step fr = x^(p^k) mod m. m of degree d
  // is irreducible iff x^(p^d) = x and every checkpoint power is coprime to m.
  Poly<PrimeFieldOps> fr = x;
  for (std::uint64_t k = 1; k <= d; ++k) {
    fr = poly_pow_mod(fr, p, m);
    if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
      const auto g = poly_gcd(fr - x, m);
      if (g.degree() != 0) return false;
    }
  }
  return fr == x;
}

Poly<PrimeFieldOps> find_irreducible(PrimeModulus p, unsigned n) {
  if (n == 0) throw std::domain_error("find_irreducible: degree must be >= 1");
  const PrimeFieldOps K(p);
  const std::uint64_t pv = p.value();

  // Candidates in order of the integer encoding of the non-leading
  // coefficients (constant term least significant).
  for (std::uint64_t enc = 0;; ++enc) {
    std::vector<std::uint32_t> c(n + 1, 0);
    std::uint64_t v = enc;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = static_cast<std::uint32_t>(v % pv);
      v /= pv;
    }
    if (v != 0)  // every monic candidate tried; cannot happen over a field
      throw std::logic_error("find_irreducible: search space exhausted");
    c[n] = 1;
    Poly<PrimeFieldOps> cand(K, std::move(c));
    if (is_irreducible(cand)) return cand;
  }
}

std::string format_poly(const Poly<PrimeFieldOps>& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const std::uint32_t c = f.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) {
      out += std::to_string(c);
      out += '*';
    }
    out += var;
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out;
}

namespace {

constexpr std::uint64_t kMaxParseDegree = std::uint64_t{1} << 20;

struct PolyParser {
  std::string_view s;
  std::size_t i = 0;
  std::uint64_t p;
  std::string_view var;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_poly: " + why + " near position " + std::to_string(i) +
                                " in \"" + std::string(s) + "\"");
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool at_digit() const { return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); }

  // Digits reduced modulo p on the fly, so magnitude is unrestricted.
  std::uint64_t parse_coeff() {
    if (!at_digit()) fail("expected a number");
    std::uint64_t acc = 0;
    while (at_digit()) {
      acc = (acc * 10 + static_cast<std::uint64_t>(s[i] - '0')) % p;
      ++i;
    }
    return acc;
  }

  std::uint64_t parse_exponent() {
    if (!at_digit()) fail("expected an exponent");
    std::uint64_t acc = 0;
    while (at_digit()) {
      acc = acc * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (acc > kMaxParseDegree) fail("term degree too large");
      ++i;
    }
    return acc;
  }

  bool try_var() {
    if (s.compare(i, var.size(), var) == 0) {
      i += var.size();
      return true;
    }
    return false;
  }

  // var ['^' INT]; the variable token itself is already consumed.
  std::uint64_t parse_var_degree() {
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip_ws();
      return parse_exponent();
    }
    return 1;
  }
};

}  // namespace

Poly<PrimeFieldOps> parse_poly(std::string_view text, PrimeModulus p, std::string_view var) {
  const PrimeFieldOps K(p);
  PolyParser ps{text, 0, p.value(), var};
  std::map<std::uint64_t, std::uint64_t> terms;  // degree -> accumulated residue

  ps.skip_ws();
  if (ps.i >= text.size()) ps.fail("empty input");

  bool first = true;
  while (true) {
    ps.skip_ws();
    if (ps.i >= text.size()) {
      if (first) ps.fail("expected a term");
      break;
    }

    std::uint64_t sign = 1;
    if (text[ps.i] == '+' || text[ps.i] == '-') {
      if (text[ps.i] == '-') sign = ps.p - 1;  // multiply by -1 mod p
      ++ps.i;
    } else if (!first) {
      ps.fail("expected '+' or '-'");
    }
    ps.skip_ws();

    std::uint64_t coeff;
    std::uint64_t deg;
    if (ps.at_digit()) {
      coeff = ps.parse_coeff();
      ps.skip_ws();
      if (ps.i < text.size() && text[ps.i] == '*') {
        ++ps.i;
        ps.skip_ws();
        if (!ps.try_var()) ps.fail("expected the variable after '*'");
        deg = ps.parse_var_degree();
      } else {
        deg = 0;
      }
    } else if (ps.try_var()) {
      coeff = 1;
      deg = ps.parse_var_degree();
    } else {
      ps.fail("expected a term");
    }

    coeff = coeff * sign % ps.p;
    auto& slot = terms[deg];
    slot = (slot + coeff) % ps.p;
    first = false;
  }

  std::uint64_t max_deg = 0;
  for (const auto& [d, c] : terms)
    if (c != 0) max_deg = std::max(max_deg, d);
  std::vector<std::uint32_t> coeffs(max_deg + 1, 0);
  for (const auto& [d, c] : terms)
    if (c != 0) coeffs[d] = static_cast<std::uint32_t>(c);
  return Poly<PrimeFieldOps>(K, std::move(coeffs));
}

}  // namespace powres
