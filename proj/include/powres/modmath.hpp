#pragma once
// Small modular-arithmetic helpers shared across the library.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace powres {

using u128 = unsigned __int128;

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Shift-and-add product for moduli wider than 64 bits (m < 2^127).
inline u128 mulmod_u128(u128 a, u128 b, u128 m) {
  a %= m;
  b %= m;
  u128 r = 0;
  while (b != 0) {
    if (b & 1) {
      r += a;
      if (r >= m) r -= m;
    }
    b >>= 1;
    a <<= 1;
    if (a >= m) a -= m;
  }
  return r;
}

inline u128 powmod_u128(u128 base, std::uint64_t exp, u128 m) {
  if (m == 1) return 0;
  u128 r = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mulmod_u128(r, base, m);
    base = mulmod_u128(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Inverse of a modulo m (m < 2^63); throws when gcd(a, m) != 1.
inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0;
  std::int64_t newt = 1;
  auto r = static_cast<std::int64_t>(m);
  auto newr = static_cast<std::int64_t>(a % m);
  while (newr != 0) {
    const std::int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw std::domain_error("invmod: argument is not invertible modulo m");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// Trial-division factorization, (prime, multiplicity) pairs in ascending order.
// Intended for group orders q - 1 at desk scale; worst case walks to sqrt(n).
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

}  // namespace powres
