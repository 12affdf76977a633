#include "powres/ext_field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>

#include "powres/modmath.hpp"

namespace powres {

namespace {

std::uint64_t checked_field_size(std::uint64_t p, unsigned n) {
  u128 q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q >= (u128{1} << 63)) throw std::domain_error("FieldSpec: p^n must be < 2^63");
  }
  return static_cast<std::uint64_t>(q);
}

std::uint64_t index_of_coeffs(std::span<const std::uint32_t> c, std::uint64_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

bool coeffs_are_one(std::span<const std::uint32_t> c) {
  if (c.empty() || c[0] != 1) return false;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

}  // namespace

FieldSpec::FieldSpec(PrimeModulus p, unsigned n, Poly<PrimeFieldOps> modulus)
    : p_(p), n_(n), q_(0), modulus_(std::move(modulus)) {
  if (n_ < 1) throw std::domain_error("FieldSpec: extension degree must be >= 1");
  if (n_ > kMaxExtensionDegree)
    throw std::domain_error("FieldSpec: extension degree exceeds " + std::to_string(kMaxExtensionDegree));
  q_ = checked_field_size(p_.value(), n_);
  if (!(modulus_.field().mod == p_))
    throw std::domain_error("FieldSpec: modulus coefficients use a different prime");
  if (modulus_.degree() != static_cast<std::int64_t>(n_))
    throw std::domain_error("FieldSpec: modulus degree must equal the extension degree");
  if (!modulus_.is_monic()) throw std::domain_error("FieldSpec: modulus must be monic");
  if (!is_irreducible(modulus_))
    throw std::domain_error("FieldSpec: modulus is reducible: " + format_poly(modulus_));
  mneg_.resize(n_);
  for (unsigned j = 0; j < n_; ++j) {
    const std::uint32_t mj = modulus_.coeff(j);
    mneg_[j] = mj == 0 ? 0 : p_.value() - mj;
  }
}

std::string FieldSpec::descriptor() const {
  return "F(" + std::to_string(p_.value()) + "^" + std::to_string(n_) + "; " +
         format_poly(modulus_) + ")";
}

void FieldSpec::add_coeffs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::span<std::uint32_t> out) const {
  const std::uint32_t p = p_.value();
  for (unsigned i = 0; i < n_; ++i) {
    std::uint32_t s = a[i] + b[i];
    if (s >= p) s -= p;
    out[i] = s;
  }
}

void FieldSpec::sub_coeffs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::span<std::uint32_t> out) const {
  const std::uint32_t p = p_.value();
  for (unsigned i = 0; i < n_; ++i)
    out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
}

void FieldSpec::neg_coeffs(std::span<const std::uint32_t> a, std::span<std::uint32_t> out) const {
  const std::uint32_t p = p_.value();
  for (unsigned i = 0; i < n_; ++i) out[i] = a[i] == 0 ? 0 : p - a[i];
}

void FieldSpec::mul_coeffs(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::span<std::uint32_t> out) const {
  const std::uint64_t p = p_.value();
  const unsigned n = n_;
  if (n == 1) {
    out[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p);
    return;
  }
  // Schoolbook product into a stack buffer (2n-1 <= 123), then reduction by
  // the monic modulus: t^n = sum_j (p - m_j) t^j. Every partial sum stays
  // below 2^62 + 2^31, so plain uint64 with one reduction per step is exact.
  std::array<std::uint64_t, 2 * kMaxExtensionDegree - 1> scratch;
  std::fill_n(scratch.data(), 2 * n - 1, std::uint64_t{0});
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      scratch[i + j] = (scratch[i + j] + ai * b[j]) % p;
    }
  }
  for (unsigned i = 2 * n - 2; i >= n; --i) {
    const std::uint64_t c = scratch[i];
    if (c != 0) {
      scratch[i] = 0;
      for (unsigned j = 0; j < n; ++j) {
        if (mneg_[j] != 0) scratch[i - n + j] = (scratch[i - n + j] + mneg_[j] * c) % p;
      }
    }
  }
  for (unsigned i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(scratch[i]);
}

void FieldSpec::pow_coeffs(std::span<const std::uint32_t> base, std::uint64_t exp,
                           std::span<std::uint32_t> out) const {
  std::fill(out.begin(), out.end(), 0);
  out[0] = 1;  // 0^0 = 1 by convention
  if (exp == 0) return;
  std::vector<std::uint32_t> b(base.begin(), base.end());
  std::vector<std::uint32_t> tmp(n_);
  while (true) {
    if (exp & 1) {
      mul_coeffs(out, b, tmp);
      std::copy(tmp.begin(), tmp.end(), out.begin());
    }
    exp >>= 1;
    if (exp == 0) break;
    mul_coeffs(b, b, tmp);
    std::swap(b, tmp);
  }
}

const std::vector<std::pair<std::uint64_t, int>>& FieldSpec::group_order_factors() const {
  std::scoped_lock lock(memo_mutex_);
  if (!factors_)
    factors_ = std::make_unique<const std::vector<std::pair<std::uint64_t, int>>>(factorize(q_ - 1));
  return *factors_;
}

const std::vector<std::uint32_t>& FieldSpec::generator_coeffs() const {
  {
    std::scoped_lock lock(memo_mutex_);
    if (generator_) return *generator_;
  }
  const auto& fac = group_order_factors();
  const std::uint64_t N = q_ - 1;
  std::vector<std::uint32_t> cand(n_);
  std::vector<std::uint32_t> tmp(n_);
  for (std::uint64_t idx = 1; idx < q_; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < n_; ++i) {
      cand[i] = static_cast<std::uint32_t>(v % p_.value());
      v /= p_.value();
    }
    bool full_order = true;
    for (const auto& [l, e] : fac) {
      pow_coeffs(cand, N / l, tmp);
      if (coeffs_are_one(tmp)) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      std::scoped_lock lock(memo_mutex_);
      if (!generator_) generator_ = std::make_unique<const std::vector<std::uint32_t>>(cand);
      return *generator_;
    }
  }
  throw std::logic_error("generator_coeffs: no generator found (impossible for a field)");
}

const FieldSpec::DlogTable& FieldSpec::dlog_table() const {
  {
    std::scoped_lock lock(memo_mutex_);
    if (dlog_) return *dlog_;
  }
  const auto& gen = generator_coeffs();
  const std::uint64_t N = q_ - 1;
  std::uint64_t m = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(N)));
  if (m == 0) m = 1;
  while (m * m < N) ++m;

  auto table = std::make_unique<DlogTable>();
  table->stride = m;
  table->baby.reserve(static_cast<std::size_t>(m));
  std::vector<std::uint32_t> cur(n_, 0);
  std::vector<std::uint32_t> tmp(n_);
  cur[0] = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    table->baby.emplace(index_of_coeffs(cur, p_.value()), static_cast<std::uint32_t>(j));
    mul_coeffs(cur, gen, tmp);
    std::swap(cur, tmp);
  }
  table->giant.resize(n_);
  pow_coeffs(gen, N - m, table->giant);  // gen^(-m)

  std::scoped_lock lock(memo_mutex_);
  if (!dlog_) dlog_ = std::move(table);
  return *dlog_;
}

bool same_spec(const FieldSpec& a, const FieldSpec& b) {
  if (&a == &b) return true;
  return a.prime() == b.prime() && a.degree() == b.degree() &&
         a.modulus().coeffs() == b.modulus().coeffs();
}

FieldRef make_field(std::uint64_t p, unsigned n) {
  const PrimeModulus pm(p);
  if (n < 1) throw std::domain_error("FieldSpec: extension degree must be >= 1");
  if (n > kMaxExtensionDegree)
    throw std::domain_error("FieldSpec: extension degree exceeds " +
                            std::to_string(kMaxExtensionDegree));
  checked_field_size(p, n);  // reject oversized q before searching for a modulus
  return std::make_shared<const FieldSpec>(pm, n, find_irreducible(pm, n));
}

FieldRef make_field(std::uint64_t p, unsigned n, const Poly<PrimeFieldOps>& modulus) {
  return std::make_shared<const FieldSpec>(PrimeModulus(p), n, modulus);
}

FieldElement::FieldElement(FieldRef spec, std::vector<std::uint32_t> coeffs)
    : spec_(std::move(spec)), c_(std::move(coeffs)) {
  if (!spec_) throw std::domain_error("FieldElement: missing field spec");
  if (c_.size() != spec_->degree())
    throw std::domain_error("FieldElement: expected " + std::to_string(spec_->degree()) +
                            " coefficients, got " + std::to_string(c_.size()));
  for (const auto v : c_)
    if (v >= spec_->prime().value())
      throw std::domain_error("FieldElement: coefficient not reduced mod p");
}

bool FieldElement::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const noexcept { return coeffs_are_one(c_); }

FieldElement zero_element(const FieldRef& spec) {
  return {spec, std::vector<std::uint32_t>(spec->degree(), 0)};
}

FieldElement one_element(const FieldRef& spec) {
  std::vector<std::uint32_t> c(spec->degree(), 0);
  c[0] = 1;
  return {spec, std::move(c)};
}

FieldElement element_from_integer(const FieldRef& spec, std::int64_t v) {
  const Residue r(v, spec->prime());
  std::vector<std::uint32_t> c(spec->degree(), 0);
  c[0] = r.value();
  return {spec, std::move(c)};
}

ElementIndex element_index(const FieldElement& a) noexcept {
  return index_of_coeffs(a.coeffs(), a.spec()->prime().value());
}

FieldElement element_from_index(const FieldRef& spec, ElementIndex idx) {
  if (idx >= spec->size())
    throw std::domain_error("element_from_index: index " + std::to_string(idx) +
                            " outside [0, q-1]");
  std::vector<std::uint32_t> c(spec->degree());
  const std::uint64_t p = spec->prime().value();
  for (unsigned i = 0; i < spec->degree(); ++i) {
    c[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return {spec, std::move(c)};
}

namespace {
const FieldRef& common_spec(const FieldElement& a, const FieldElement& b) {
  if (!same_spec(*a.spec(), *b.spec()))
    throw std::domain_error("field elements belong to different specs (" + a.spec()->descriptor() +
                            " vs " + b.spec()->descriptor() + ")");
  return a.spec();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& spec = common_spec(a, b);
  std::vector<std::uint32_t> out(spec->degree());
  spec->add_coeffs(a.coeffs(), b.coeffs(), out);
  return {spec, std::move(out)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& spec = common_spec(a, b);
  std::vector<std::uint32_t> out(spec->degree());
  spec->sub_coeffs(a.coeffs(), b.coeffs(), out);
  return {spec, std::move(out)};
}

FieldElement operator-(const FieldElement& a) {
  std::vector<std::uint32_t> out(a.spec()->degree());
  a.spec()->neg_coeffs(a.coeffs(), out);
  return {a.spec(), std::move(out)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& spec = common_spec(a, b);
  std::vector<std::uint32_t> out(spec->degree());
  spec->mul_coeffs(a.coeffs(), b.coeffs(), out);
  return {spec, std::move(out)};
}

FieldElement ff_pow(const FieldElement& a, std::uint64_t exp) {
  std::vector<std::uint32_t> out(a.spec()->degree());
  a.spec()->pow_coeffs(a.coeffs(), exp, out);
  return {a.spec(), std::move(out)};
}

FieldElement ff_inv(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("ff_inv: zero is not invertible");
  const auto& spec = a.spec();
  const auto inv = poly_inverse_mod(to_poly(a), spec->modulus());
  return element_from_poly(spec, inv);
}

std::vector<FieldElement> enumerate_units(const FieldRef& spec, std::uint64_t cap) {
  if (spec->size() > cap)
    throw CapExceeded("enumerate_units: field size " + std::to_string(spec->size()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(spec->unit_count()));
  for (std::uint64_t idx = 1; idx < spec->size(); ++idx)
    out.push_back(element_from_index(spec, idx));
  return out;
}

std::uint64_t element_order(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("element_order: zero has no multiplicative order");
  const auto& spec = a.spec();
  const std::uint64_t N = spec->unit_count();
  std::uint64_t k = N;
  for (const auto& [l, e] : spec->group_order_factors()) {
    for (int i = 0; i < e; ++i) {
      if (k % l != 0) break;
      if (!ff_pow(a, k / l).is_one()) break;
      k /= l;
    }
  }
  return k;
}

FieldElement find_generator(const FieldRef& spec) {
  return {spec, spec->generator_coeffs()};
}

Poly<PrimeFieldOps> to_poly(const FieldElement& a) {
  return {PrimeFieldOps(a.spec()->prime()), a.coeffs()};
}

FieldElement element_from_poly(const FieldRef& spec, const Poly<PrimeFieldOps>& f) {
  if (!(f.field().mod == spec->prime()))
    throw std::domain_error("element_from_poly: polynomial is over a different prime field");
  Poly<PrimeFieldOps> r = f;
  if (r.degree() >= static_cast<std::int64_t>(spec->degree())) r = poly_mod(r, spec->modulus());
  std::vector<std::uint32_t> c(spec->degree(), 0);
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
  return {spec, std::move(c)};
}

FieldElement parse_element(const FieldRef& spec, std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  if (b == e) throw std::invalid_argument("parse_element: empty input");

  if (text[b] == '[') {
    if (text[e - 1] != ']') throw std::invalid_argument("parse_element: unterminated coefficient list");
    std::string_view inner = text.substr(b + 1, e - b - 2);
    std::vector<std::uint32_t> coeffs;
    const PrimeFieldOps K(spec->prime());
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = inner.find(',', pos);
      std::string_view item = inner.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      // each entry is a (possibly signed) integer, reduced mod p
      std::size_t ib = 0;
      std::size_t ie = item.size();
      while (ib < ie && std::isspace(static_cast<unsigned char>(item[ib]))) ++ib;
      while (ie > ib && std::isspace(static_cast<unsigned char>(item[ie - 1]))) --ie;
      if (ib == ie) throw std::invalid_argument("parse_element: empty list entry");
      bool neg = false;
      if (item[ib] == '+' || item[ib] == '-') {
        neg = item[ib] == '-';
        ++ib;
      }
      std::uint64_t acc = 0;
      if (ib == ie) throw std::invalid_argument("parse_element: malformed list entry");
      for (std::size_t k = ib; k < ie; ++k) {
        if (!std::isdigit(static_cast<unsigned char>(item[k])))
          throw std::invalid_argument("parse_element: malformed list entry");
        acc = (acc * 10 + static_cast<std::uint64_t>(item[k] - '0')) % spec->prime().value();
      }
      if (neg && acc != 0) acc = spec->prime().value() - acc;
      coeffs.push_back(static_cast<std::uint32_t>(acc));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return element_from_poly(spec, Poly<PrimeFieldOps>(K, std::move(coeffs)));
  }

  return element_from_poly(spec, parse_poly(text.substr(b, e - b), spec->prime()));
}

std::string format_element(const FieldElement& a) { return format_poly(to_poly(a)); }

namespace {

// Descriptor parser for "F(p^n; m)", "F(p^n)", "F(p)".
struct DescParser {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse_field: " + why + " in \"" + std::string(s) + "\"");
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  std::uint64_t parse_uint() {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected a number");
    std::uint64_t acc = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (acc > (std::uint64_t{1} << 62) / 10) fail("number too large");
      acc = acc * 10 + static_cast<std::uint64_t>(s[i] - '0');
      ++i;
    }
    return acc;
  }
};

}  // namespace

FieldRef parse_field(std::string_view descriptor) {
  DescParser ps{descriptor, 0};
  ps.skip_ws();
  if (ps.i >= descriptor.size() || descriptor[ps.i] != 'F') ps.fail("expected 'F('");
  ++ps.i;
  ps.skip_ws();
  if (ps.i >= descriptor.size() || descriptor[ps.i] != '(') ps.fail("expected '('");
  ++ps.i;
  ps.skip_ws();
  const std::uint64_t p = ps.parse_uint();
  ps.skip_ws();
  std::uint64_t n = 1;
  if (ps.i < descriptor.size() && descriptor[ps.i] == '^') {
    ++ps.i;
    ps.skip_ws();
    n = ps.parse_uint();
  }
  ps.skip_ws();
  std::string modulus_text;
  if (ps.i < descriptor.size() && descriptor[ps.i] == ';') {
    ++ps.i;
    const std::size_t close = descriptor.rfind(')');
    if (close == std::string_view::npos || close < ps.i) ps.fail("expected ')'");
    modulus_text = std::string(descriptor.substr(ps.i, close - ps.i));
    ps.i = close;
  }
  if (ps.i >= descriptor.size() || descriptor[ps.i] != ')') ps.fail("expected ')'");
  ++ps.i;
  ps.skip_ws();
  if (ps.i != descriptor.size()) ps.fail("trailing characters after ')'");
  if (n == 0 || n > kMaxExtensionDegree) ps.fail("extension degree out of range");

  if (modulus_text.empty()) return make_field(p, static_cast<unsigned>(n));
  return make_field(p, static_cast<unsigned>(n), parse_poly(modulus_text, PrimeModulus(p)));
}

std::string format_poly(const Poly<ExtFieldOps>& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const FieldElement& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    const bool constant_coeff =
        std::all_of(c.coeffs().begin() + 1, c.coeffs().end(), [](std::uint32_t v) { return v == 0; });
    const std::string cs = format_element(c);
    if (i == 0) {
      out += constant_coeff ? cs : "(" + cs + ")";
      continue;
    }
    if (!c.is_one()) {
      out += constant_coeff ? cs : "(" + cs + ")";
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

}  // namespace powres
