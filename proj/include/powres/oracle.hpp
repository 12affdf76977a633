#pragma once
// Brute-force ground truth by exhaustive scan. This module deliberately uses
// nothing beyond ext_field arithmetic, so its answers are independent of the
// criterion-based code paths it is used to check.

#include <cstdint>
#include <vector>

#include "powres/caps.hpp"
#include "powres/ext_field.hpp"

namespace powres {

// {x^r : x a unit}, deduplicated and sorted by ElementIndex.
std::vector<FieldElement> brute_rth_powers(const FieldRef& spec, std::uint64_t r,
                                           std::uint64_t cap = kDefaultOracleCap);

// Every x in F_q (zero included) with x^r = a, sorted by ElementIndex.
std::vector<FieldElement> brute_roots(const FieldRef& spec, const FieldElement& a,
                                      std::uint64_t r, std::uint64_t cap = kDefaultOracleCap);

}  // namespace powres
