#pragma once
// Exact arithmetic in Z/pZ for a validated prime p < 2^31. Residues are
// canonical values in [0, p-1]; products of two residues fit in 62 bits.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "powres/modmath.hpp"

namespace powres {

// Deterministic for every 64-bit input: strong-probable-prime test against
// the twelve smallest prime bases, which has no composite liar below 3.3e24.
bool is_prime(std::uint64_t n) noexcept;

class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31))
      throw std::domain_error("PrimeModulus: p must lie in [2, 2^31)");
    if (!is_prime(p)) throw std::domain_error("PrimeModulus: " + std::to_string(p) + " is not prime");
    p_ = static_cast<std::uint32_t>(p);
  }

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept = default;

 private:
  std::uint32_t p_;
};

class Residue {
 public:
  // Reduces any signed value into the canonical range.
  Residue(std::int64_t value, PrimeModulus m) noexcept : mod_(m) {
    const auto p = static_cast<std::int64_t>(m.value());
    std::int64_t r = value % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const noexcept { return v_; }
  PrimeModulus modulus() const noexcept { return mod_; }
  bool is_zero() const noexcept { return v_ == 0; }

  friend bool operator==(Residue a, Residue b) noexcept {
    return a.mod_ == b.mod_ && a.v_ == b.v_;
  }

 private:
  std::uint32_t v_;
  PrimeModulus mod_;
};

namespace detail {
inline void require_same_modulus(Residue a, Residue b) {
  if (!(a.modulus() == b.modulus()))
    throw std::domain_error("residue arithmetic: operands carry different moduli");
}
}  // namespace detail

inline Residue operator+(Residue a, Residue b) {
  detail::require_same_modulus(a, b);
  const std::uint32_t p = a.modulus().value();
  std::uint32_t s = a.value() + b.value();  // < 2^32 since p < 2^31
  if (s >= p) s -= p;
  return {s, a.modulus()};
}

inline Residue operator-(Residue a, Residue b) {
  detail::require_same_modulus(a, b);
  const std::uint32_t p = a.modulus().value();
  const std::uint32_t d = a.value() >= b.value() ? a.value() - b.value() : a.value() + p - b.value();
  return {d, a.modulus()};
}

inline Residue operator-(Residue a) { return Residue(0, a.modulus()) - a; }

inline Residue operator*(Residue a, Residue b) {
  detail::require_same_modulus(a, b);
  const auto prod = static_cast<std::uint64_t>(a.value()) * b.value();
  return {static_cast<std::int64_t>(prod % a.modulus().value()), a.modulus()};
}

// Square-and-multiply; adopts the convention 0^0 = 1.
inline Residue fp_pow(Residue a, std::uint64_t exp) noexcept {
  const std::uint64_t p = a.modulus().value();
  std::uint64_t r = 1 % p;
  std::uint64_t base = a.value();
  while (exp != 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return {static_cast<std::int64_t>(r), a.modulus()};
}

inline Residue fp_inv(Residue a) {
  if (a.is_zero()) throw std::domain_error("fp_inv: zero is not invertible");
  return {static_cast<std::int64_t>(invmod_u64(a.value(), a.modulus().value())), a.modulus()};
}

inline std::ostream& operator<<(std::ostream& os, Residue a) {
  return os << a.value() << " (mod " << a.modulus().value() << ")";
}

}  // namespace powres
