#include "powres/prime_field.hpp"

#include <cstdint>

#include "powres/modmath.hpp"

namespace powres {

namespace {

// One strong-probable-prime round to base a (n odd, n - 1 = d * 2^s).
bool sprp_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod_u64(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t b : bases) {
    if (!sprp_round(n, b, d, s)) return false;
  }
  return true;
}

}  // namespace powres
