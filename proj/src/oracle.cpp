#include "powres/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace powres {

namespace {

void check_cap(const FieldRef& spec, std::uint64_t cap, const char* who) {
  if (spec->size() > cap)
    throw CapExceeded(std::string(who) + ": field size " + std::to_string(spec->size()) +
                      " exceeds the oracle cap " + std::to_string(cap));
}

}  // namespace

std::vector<FieldElement> brute_rth_powers(const FieldRef& spec, std::uint64_t r,
                                           std::uint64_t cap) {
  if (r == 0) throw std::domain_error("brute_rth_powers: r must be >= 1");
  check_cap(spec, cap, "brute_rth_powers");

  const unsigned n = spec->degree();
  const std::uint32_t p = spec->prime().value();
  std::vector<std::uint32_t> x(n, 0);
  std::vector<std::uint32_t> y(n);
  std::vector<ElementIndex> idxs;

  // Walk every unit as a base-p counter and record x^r.
  for (std::uint64_t i = 1; i < spec->size(); ++i) {
    unsigned j = 0;
    while (true) {
      if (++x[j] < p) break;
      x[j++] = 0;
    }
    spec->pow_coeffs(x, r, y);
    std::uint64_t idx = 0;
    for (std::size_t k = y.size(); k-- > 0;) idx = idx * p + y[k];
    idxs.push_back(idx);
  }
  std::sort(idxs.begin(), idxs.end());
  idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());

  std::vector<FieldElement> out;
  out.reserve(idxs.size());
  for (const auto idx : idxs) out.push_back(element_from_index(spec, idx));
  return out;
}

std::vector<FieldElement> brute_roots(const FieldRef& spec, const FieldElement& a,
                                      std::uint64_t r, std::uint64_t cap) {
  if (r == 0) throw std::domain_error("brute_roots: r must be >= 1");
  if (!same_spec(*spec, *a.spec()))
    throw std::domain_error("brute_roots: element does not belong to the given field");
  check_cap(spec, cap, "brute_roots");

  const unsigned n = spec->degree();
  std::vector<std::uint32_t> y(n);
  std::vector<FieldElement> out;
  for (std::uint64_t i = 0; i < spec->size(); ++i) {
    const FieldElement x = element_from_index(spec, i);
    spec->pow_coeffs(x.coeffs(), r, y);
    if (std::equal(y.begin(), y.end(), a.coeffs().begin(), a.coeffs().end())) out.push_back(x);
  }
  return out;
}

}  // namespace powres
