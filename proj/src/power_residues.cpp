#include "powres/power_residues.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "powres/modmath.hpp"

namespace powres {

FieldElement euler_exponent_value(const FieldElement& a, std::uint64_t r) {
  const std::uint64_t N = a.spec()->unit_count();
  if (r == 0 || N % r != 0)
    throw std::domain_error("euler_exponent_value: exponent divisor " + std::to_string(r) +
                            " does not divide q-1 = " + std::to_string(N));
  if (a.is_zero()) throw std::domain_error("euler_exponent_value: undefined at zero");
  return ff_pow(a, N / r);
}

ResidueReport is_rth_power(const FieldElement& a, std::uint64_t r, std::uint64_t dlog_cap) {
  if (r == 0) throw std::domain_error("is_rth_power: r must be >= 1");
  const auto& spec = a.spec();
  const std::uint64_t N = spec->unit_count();
  const std::uint64_t d = std::gcd(r, N);

  if (a.is_zero()) {
    // 0 = 0^r and nothing else: x^r = 0 forces x = 0.
    return {a, r, d, zero_element(spec), true, 1, zero_element(spec)};
  }

  FieldElement ev = ff_pow(a, N / d);
  const bool power = ev.is_one();
  ResidueReport rep{a, r, d, std::move(ev), power, power ? d : 0, std::nullopt};
  if (power && spec->size() <= dlog_cap) rep.canonical_root = rth_root(a, r, dlog_cap).canonical_root;
  return rep;
}

PowerCount count_rth_powers(const FieldRef& spec, std::uint64_t r) {
  if (r == 0) throw std::domain_error("count_rth_powers: r must be >= 1");
  const std::uint64_t N = spec->unit_count();
  const std::uint64_t d = std::gcd(r, N);
  PowerCount out{N / d, std::nullopt, false};
  if (r == 2) {
    // Nonzero squares other than 1. In characteristic 2 squaring is the
    // Frobenius bijection, so every unit is a square; flag that regime.
    out.nontrivial_squares = out.total - 1;
    out.char_two_squares = spec->prime().value() == 2;
  }
  return out;
}

std::vector<FieldElement> list_rth_powers(const FieldRef& spec, std::uint64_t r,
                                          std::uint64_t cap) {
  if (r == 0) throw std::domain_error("list_rth_powers: r must be >= 1");
  if (spec->size() > cap)
    throw CapExceeded("list_rth_powers: field size " + std::to_string(spec->size()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  const std::uint64_t N = spec->unit_count();
  const std::uint64_t d = std::gcd(r, N);
  const std::uint64_t k = N / d;

  const FieldElement step = ff_pow(find_generator(spec), r);
  std::vector<ElementIndex> idxs;
  idxs.reserve(static_cast<std::size_t>(k));
  FieldElement cur = one_element(spec);
  for (std::uint64_t j = 0; j < k; ++j) {
    idxs.push_back(element_index(cur));
    cur = cur * step;
  }
  std::sort(idxs.begin(), idxs.end());

  std::vector<FieldElement> out;
  out.reserve(idxs.size());
  for (const auto idx : idxs) out.push_back(element_from_index(spec, idx));
  return out;
}

std::uint64_t discrete_log(const FieldElement& a, std::uint64_t cap) {
  if (a.is_zero()) throw std::domain_error("discrete_log: zero is not in the unit group");
  const auto& spec = a.spec();
  if (spec->size() > cap)
    throw CapExceeded("discrete_log: field size " + std::to_string(spec->size()) +
                      " exceeds the discrete-log cap " + std::to_string(cap));
  const auto& table = spec->dlog_table();
  const std::uint64_t N = spec->unit_count();
  const std::uint64_t m = table.stride;
  const FieldElement giant(spec, table.giant);

  FieldElement cur = a;
  for (std::uint64_t i = 0; i * m <= N; ++i) {
    const auto it = table.baby.find(element_index(cur));
    if (it != table.baby.end()) {
      std::uint64_t k = (i * m + it->second) % N;
      return k == 0 ? N : k;  // representative in [1, q-1]
    }
    cur = cur * giant;
  }
  throw std::logic_error("discrete_log: search exhausted without a hit");
}

RootResult rth_root(const FieldElement& a, std::uint64_t r, std::uint64_t cap) {
  if (r == 0) throw std::domain_error("rth_root: r must be >= 1");
  const auto& spec = a.spec();
  if (a.is_zero()) return {zero_element(spec), 1};

  const std::uint64_t N = spec->unit_count();
  const std::uint64_t L = discrete_log(a, cap);
  const std::uint64_t rhs = L % N;  // dlog(1) is reported as N
  const std::uint64_t d = std::gcd(r, N);
  if (rhs % d != 0) return {std::nullopt, 0};

  // Solve r*x = rhs (mod N): x = x0 + u*(N/d), u = 0..d-1.
  const std::uint64_t Nd = N / d;
  const std::uint64_t x0 =
      mulmod_u64((rhs / d) % Nd, invmod_u64((r / d) % Nd == 0 ? 1 : (r / d) % Nd, Nd), Nd);

  const FieldElement g = find_generator(spec);
  const FieldElement stepper = ff_pow(g, Nd % N == 0 ? 0 : Nd % N);
  FieldElement cur = ff_pow(g, x0);
  FieldElement best = cur;
  ElementIndex best_idx = element_index(cur);
  for (std::uint64_t u = 1; u < d; ++u) {
    cur = cur * stepper;
    const ElementIndex idx = element_index(cur);
    if (idx < best_idx) {
      best_idx = idx;
      best = cur;
    }
  }
  if (!(ff_pow(best, r) == a))
    throw std::logic_error("rth_root: computed root fails the defining equation");
  return {std::move(best), d};
}

DivisionIdentityReport euler_division_identity(const FieldElement& a, std::uint64_t r,
                                               std::uint64_t degree_cap) {
  const auto& spec = a.spec();
  const std::uint64_t q = spec->size();
  const std::uint64_t N = q - 1;
  if (r == 0 || N % r != 0)
    throw std::domain_error("euler_division_identity: r must divide q-1 = " + std::to_string(N));
  if (a.is_zero()) throw std::domain_error("euler_division_identity: a must be nonzero");

  const std::uint64_t k = N / r;
  const FieldElement remainder_coeff = ff_pow(a, k) - one_element(spec);
  if (q > degree_cap) return {std::nullopt, remainder_coeff, std::nullopt};

  const ExtFieldOps K(spec);

  // h(x) = sum_{j=1..k} a^(j-1) x^(q-jr); exponents run q-r down to 1.
  std::vector<FieldElement> hc(static_cast<std::size_t>(q - r) + 1, zero_element(spec));
  FieldElement apow = one_element(spec);
  for (std::uint64_t j = 1; j <= k; ++j) {
    hc[static_cast<std::size_t>(q - j * r)] = apow;
    if (j < k) apow = apow * a;
  }
  Poly<ExtFieldOps> h(K, std::move(hc));

  std::vector<FieldElement> fc(static_cast<std::size_t>(q) + 1, zero_element(spec));
  fc[1] = -one_element(spec);
  fc[static_cast<std::size_t>(q)] = one_element(spec);
  Poly<ExtFieldOps> f(K, std::move(fc));

  std::vector<FieldElement> gc(static_cast<std::size_t>(r) + 1, zero_element(spec));
  gc[0] = -a;
  gc[static_cast<std::size_t>(r)] = one_element(spec);
  Poly<ExtFieldOps> g(K, std::move(gc));

  auto [quot, rem] = poly_divmod(f, g);
  const bool ok = quot == h && rem == Poly<ExtFieldOps>::monomial(K, remainder_coeff, 1);
  return {std::move(h), remainder_coeff, ok};
}

bool constant_power_in_extension(Residue c, std::uint64_t n, std::uint64_t r) {
  if (c.is_zero())
    throw std::domain_error("constant_power_in_extension: the constant must be a unit mod p");
  if (n == 0) throw std::domain_error("constant_power_in_extension: extension degree must be >= 1");
  if (r == 0) throw std::domain_error("constant_power_in_extension: r must be >= 1");

  const std::uint64_t p = c.modulus().value();

  // d = gcd(r, p^n - 1) via p^n - 1 mod r.
  const std::uint64_t pn_mod_r = static_cast<std::uint64_t>(powmod_u128(p, n, r));
  const std::uint64_t d = std::gcd(r, pn_mod_r == 0 ? r - 1 : pn_mod_r - 1);

  // e = ((p^n - 1)/d) mod (p-1), recovered from X = (p^n - 1) mod (d*(p-1)):
  // p^n - 1 = d*K gives X = d*(K mod (p-1)), so e = X/d. M < 2^95 needs
  // 128-bit modular arithmetic; n itself is never iterated over.
  const u128 M = static_cast<u128>(d) * (p - 1);
  const u128 X = (powmod_u128(p, n, M) + M - 1) % M;
  const std::uint64_t e = static_cast<std::uint64_t>(X / d);

  return fp_pow(c, e).value() == 1;
}

}  // namespace powres
