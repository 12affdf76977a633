#pragma once
// Default work caps and the refusal error they raise. Every cap is a plain
// function parameter, so callers can widen or narrow per call.

#include <cstdint>
#include <stdexcept>

namespace powres {

// Full enumeration of the unit group (enumerate_units, list_rth_powers).
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

// Brute-force oracle scans.
inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 16;

// Baby-step/giant-step discrete logarithms (table size ~ sqrt(q)).
inline constexpr std::uint64_t kDefaultDlogCap = std::uint64_t{1} << 40;

// Materializing x^q - x for the division-identity cross check.
inline constexpr std::uint64_t kDefaultIdentityDegreeCap = 1'000'000;

struct CapExceeded : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace powres
