#pragma once
// Deciding, counting, listing, and extracting r-th powers in F_q through the
// exponent criterion: with d = gcd(r, q-1), a nonzero a is an r-th power iff
// a^((q-1)/d) = 1, and then it has exactly d r-th roots. For r | q-1 this is
// the classical criterion; general r reduces to d because the unit group is
// cyclic, so the r-th powers coincide with the d-th powers.

#include <cstdint>
#include <optional>
#include <vector>

#include "powres/caps.hpp"
#include "powres/ext_field.hpp"
#include "powres/polynomial.hpp"
#include "powres/prime_field.hpp"

namespace powres {

// a^((q-1)/r) for r | q-1. r not dividing q-1 is a precondition violation and
// a = 0 a domain error; both throw.
FieldElement euler_exponent_value(const FieldElement& a, std::uint64_t r);

struct ResidueReport {
  FieldElement a;
  std::uint64_t r;
  std::uint64_t d;           // gcd(r, q-1)
  FieldElement euler_value;  // a^((q-1)/d); 0 for a = 0
  bool is_power;
  std::uint64_t num_roots;   // d or 0; 1 for a = 0
  std::optional<FieldElement> canonical_root;  // least-index root when is_power
};

// Verdict for any r >= 1, any a (a = 0 is the r-th power of 0 alone).
// dlog_cap bounds the root extraction that populates canonical_root.
ResidueReport is_rth_power(const FieldElement& a, std::uint64_t r,
                           std::uint64_t dlog_cap = kDefaultDlogCap);

struct PowerCount {
  std::uint64_t total;  // (q-1)/gcd(r, q-1) nonzero r-th powers
  // Squares other than 0 and 1; reported for r = 2 only.
  std::optional<std::uint64_t> nontrivial_squares;
  // True for p = 2 with r = 2: squaring is then the Frobenius bijection and
  // the odd-characteristic counting hypothesis does not apply.
  bool char_two_squares = false;
};

PowerCount count_rth_powers(const FieldRef& spec, std::uint64_t r);

// The set {g^(j*r)} for a fixed generator g, sorted by ElementIndex; equals
// the set of nonzero r-th powers. Refuses when q exceeds the cap.
std::vector<FieldElement> list_rth_powers(const FieldRef& spec, std::uint64_t r,
                                          std::uint64_t cap = kDefaultEnumerationCap);

// Baby-step/giant-step logarithm to the canonical generator, representative
// in [1, q-1] (so discrete_log(1) = q-1). Refuses when q exceeds the cap.
std::uint64_t discrete_log(const FieldElement& a, std::uint64_t cap = kDefaultDlogCap);

struct RootResult {
  std::optional<FieldElement> canonical_root;  // least ElementIndex among roots
  std::uint64_t count = 0;
};

// All r-th roots of a come from the linear congruence r*x = dlog(a) mod q-1;
// the returned canonical root is re-checked against a before returning.
RootResult rth_root(const FieldElement& a, std::uint64_t r,
                    std::uint64_t cap = kDefaultDlogCap);

struct DivisionIdentityReport {
  // h(x) = sum_{j=1..k} a^(j-1) x^(q-jr) with k = (q-1)/r; the final term is
  // a^(k-1) x. Present only when q is within the degree cap.
  std::optional<Poly<ExtFieldOps>> h;
  FieldElement remainder_coeff;          // a^k - 1
  std::optional<bool> verified;          // empty when the check was skipped
};

// The division identity x^q - x = h(x) (x^r - a) + (a^((q-1)/r) - 1) x for
// r | q-1 and a != 0. Verification divides x^q - x by x^r - a with the
// generic polynomial engine and compares quotient and remainder against the
// closed form; fields with q above the cap skip that materialization.
DivisionIdentityReport euler_division_identity(const FieldElement& a, std::uint64_t r,
                                               std::uint64_t degree_cap = kDefaultIdentityDegreeCap);

// Whether the constant c (nonzero residue mod p) is an r-th power in
// F_(p^n), computed without constructing the extension: the verdict is
// c^e = 1 in F_p with e = ((p^n - 1)/gcd(r, p^n - 1)) mod (p - 1), evaluated
// with wide modular arithmetic so arbitrarily large n is exact.
bool constant_power_in_extension(Residue c, std::uint64_t n, std::uint64_t r);

}  // namespace powres
