#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "powres/ext_field.hpp"
#include "powres/oracle.hpp"
#include "powres/power_residues.hpp"

using namespace powres;

namespace {

FieldElement el(const FieldRef& F, const char* text) { return parse_element(F, text); }

}  // namespace

TEST_CASE("euler_exponent_value on F(3^2; 1+t^2)") {
  const FieldRef F = make_field(3, 2);
  CHECK(euler_exponent_value(el(F, "t"), 2) == el(F, "1"));      // t = (2+t)^2
  CHECK(euler_exponent_value(el(F, "1+t"), 2) == el(F, "2"));    // generator, not a square
  CHECK(euler_exponent_value(el(F, "2"), 4) == el(F, "1"));      // 2 = t^4... t^2=2, so 2 = (t)^2 and 2^2=1
  CHECK(euler_exponent_value(el(F, "1+t"), 8) == el(F, "1+t"));  // exponent 1
  CHECK_THROWS_AS(euler_exponent_value(el(F, "t"), 3), std::domain_error);  // 3 does not divide 8
  CHECK_THROWS_AS(euler_exponent_value(el(F, "t"), 0), std::domain_error);
  CHECK_THROWS_AS(euler_exponent_value(zero_element(F), 2), std::domain_error);
}

TEST_CASE("square decisions in F(3^2; 1+t^2)") {
  const FieldRef F = make_field(3, 2);

  const auto two = is_rth_power(el(F, "2"), 2);
  CHECK(two.is_power);
  CHECK(two.d == 2);
  CHECK(two.num_roots == 2);
  CHECK(two.euler_value == el(F, "1"));
  REQUIRE(two.canonical_root.has_value());
  CHECK(*two.canonical_root == el(F, "t"));

  const auto tee = is_rth_power(el(F, "t"), 2);
  CHECK(tee.is_power);
  REQUIRE(tee.canonical_root.has_value());
  CHECK(*tee.canonical_root == el(F, "2+t"));  // index 5 beats 1+2t at index 7

  const auto notsq = is_rth_power(el(F, "1+t"), 2);
  CHECK_FALSE(notsq.is_power);
  CHECK(notsq.num_roots == 0);
  CHECK_FALSE(notsq.canonical_root.has_value());
  CHECK(notsq.euler_value == el(F, "2"));
}

TEST_CASE("zero is the r-th power of zero alone") {
  const FieldRef F = make_field(3, 2);
  for (const std::uint64_t r : {1ULL, 2ULL, 7ULL, 100ULL}) {
    const auto rep = is_rth_power(zero_element(F), r);
    CHECK(rep.is_power);
    CHECK(rep.num_roots == 1);
    REQUIRE(rep.canonical_root.has_value());
    CHECK(rep.canonical_root->is_zero());
  }
  CHECK_THROWS_AS(is_rth_power(zero_element(F), 0), std::domain_error);
}

TEST_CASE("r reduces through gcd: verdicts depend only on gcd(r, q-1)") {
  const FieldRef F = make_field(3, 2);
  for (const auto& u : enumerate_units(F)) {
    CHECK(is_rth_power(u, 2).is_power == is_rth_power(u, 10).is_power);   // gcd 2
    CHECK(is_rth_power(u, 3).is_power);                                   // gcd(3,8)=1
    CHECK(is_rth_power(u, 5).is_power);
    CHECK(is_rth_power(u, 6).is_power == is_rth_power(u, 2).is_power);    // gcd 2
  }
}

TEST_CASE("ninth powers in F(5^2; 1+t+t^2) are exactly the cubes") {
  const FieldRef F = parse_field("F(5^2; 1+t+t^2)");
  for (std::uint64_t i = 0; i < F->size(); ++i) {
    const auto a = element_from_index(F, i);
    const auto nine = is_rth_power(a, 9);
    const auto three = is_rth_power(a, 3);
    CHECK(nine.is_power == three.is_power);
    CHECK(nine.d == 3);
    CHECK(nine.num_roots == three.num_roots);
  }
  CHECK(list_rth_powers(F, 9) == list_rth_powers(F, 3));
  CHECK(list_rth_powers(F, 9).size() == 8);
}

TEST_CASE("every element is an r-th power when gcd(r, q-1) = 1") {
  for (const char* desc : {"F(2^2)", "F(2^3)", "F(3^2)", "F(5^2)", "F(5^3)", "F(11)"}) {
    const FieldRef F = parse_field(desc);
    const std::uint64_t N = F->unit_count();
    for (std::uint64_t r = 1; r <= 10; ++r) {
      const bool bijective = std::gcd(r, N) == 1;
      CHECK((list_rth_powers(F, r).size() == N) == bijective);
      if (bijective)
        for (const auto& u : enumerate_units(F)) CHECK(is_rth_power(u, r).is_power);
    }
  }
}

TEST_CASE("counting r-th powers") {
  const FieldRef F9 = make_field(3, 2);
  const auto c9 = count_rth_powers(F9, 2);
  CHECK(c9.total == 4);
  REQUIRE(c9.nontrivial_squares.has_value());
  CHECK(*c9.nontrivial_squares == 3);
  CHECK_FALSE(c9.char_two_squares);

  const auto c13 = count_rth_powers(make_field(13, 1), 2);
  CHECK(c13.total == 6);
  CHECK(*c13.nontrivial_squares == 5);

  const auto c25 = count_rth_powers(parse_field("F(5^2; 1+t+t^2)"), 12);
  CHECK(c25.total == 2);
  CHECK_FALSE(c25.nontrivial_squares.has_value());

  const auto c4 = count_rth_powers(make_field(2, 2), 2);
  CHECK(c4.total == 3);
  CHECK(*c4.nontrivial_squares == 2);
  CHECK(c4.char_two_squares);

  CHECK(count_rth_powers(F9, 3).total == 8);  // gcd(3,8)=1
  CHECK_THROWS_AS(count_rth_powers(F9, 0), std::domain_error);
}

TEST_CASE("odd characteristic: (q-1)/2 - 1 squares besides 0 and 1") {
  for (const char* desc : {"F(3^2)", "F(5^2)", "F(3^3)", "F(7^2)", "F(11)", "F(13^2)"}) {
    const FieldRef F = parse_field(desc);
    const auto c = count_rth_powers(F, 2);
    REQUIRE(c.nontrivial_squares.has_value());
    CHECK(*c.nontrivial_squares == (F->size() - 1) / 2 - 1);
    CHECK_FALSE(c.char_two_squares);
    // cross-check by exhaustive scan
    CHECK(brute_rth_powers(F, 2).size() == c.total);
  }
}

TEST_CASE("listing matches the exhaustive oracle") {
  const FieldRef F9 = make_field(3, 2);
  const auto sq = list_rth_powers(F9, 2);
  REQUIRE(sq.size() == 4);
  CHECK(sq[0] == el(F9, "1"));
  CHECK(sq[1] == el(F9, "2"));
  CHECK(sq[2] == el(F9, "t"));
  CHECK(sq[3] == el(F9, "2*t"));
  CHECK(sq == brute_rth_powers(F9, 2));

  for (const std::uint64_t r : {1ULL, 3ULL, 4ULL, 8ULL, 12ULL})
    CHECK(list_rth_powers(F9, r) == brute_rth_powers(F9, r));

  CHECK_THROWS_AS(list_rth_powers(F9, 2, 8), CapExceeded);
  CHECK_THROWS_AS(list_rth_powers(F9, 0), std::domain_error);
}

TEST_CASE("discrete logarithms to the canonical generator") {
  const FieldRef F = make_field(3, 2);
  CHECK(discrete_log(el(F, "1+t")) == 1);
  CHECK(discrete_log(el(F, "2")) == 4);
  CHECK(discrete_log(el(F, "1")) == 8);  // representative in [1, q-1]
  CHECK_THROWS_AS(discrete_log(zero_element(F)), std::domain_error);
  CHECK_THROWS_AS(discrete_log(el(F, "2"), 8), CapExceeded);

  for (const char* desc : {"F(3^2)", "F(5^2; 1+t+t^2)", "F(13^3; 11+2*t+t^3)", "F(2^8)"}) {
    const FieldRef K = parse_field(desc);
    const auto g = find_generator(K);
    for (std::uint64_t i = 1; i < K->size(); i += 1 + K->size() / 97) {
      const auto a = element_from_index(K, i);
      const auto L = discrete_log(a);
      CHECK(L >= 1);
      CHECK(L <= K->unit_count());
      CHECK(ff_pow(g, L) == a);
    }
  }
}

TEST_CASE("root extraction in F(3^2; 1+t^2)") {
  const FieldRef F = make_field(3, 2);

  const auto r2 = rth_root(el(F, "2"), 2);
  CHECK(r2.count == 2);
  REQUIRE(r2.canonical_root.has_value());
  CHECK(*r2.canonical_root == el(F, "t"));

  const auto none = rth_root(el(F, "1+t"), 2);
  CHECK(none.count == 0);
  CHECK_FALSE(none.canonical_root.has_value());

  const auto zero = rth_root(zero_element(F), 5);
  CHECK(zero.count == 1);
  CHECK(zero.canonical_root->is_zero());

  const auto all8 = rth_root(el(F, "1"), 8);
  CHECK(all8.count == 8);
  CHECK(*all8.canonical_root == el(F, "1"));  // 1 is its own least root

  const auto ident = rth_root(el(F, "2+2*t"), 1);
  CHECK(ident.count == 1);
  CHECK(*ident.canonical_root == el(F, "2+2*t"));

  CHECK_THROWS_AS(rth_root(el(F, "2"), 0), std::domain_error);
  CHECK_THROWS_AS(rth_root(el(F, "2"), 2, 4), CapExceeded);
}

TEST_CASE("root extraction agrees with the exhaustive oracle") {
  std::mt19937_64 rng(271828);
  for (const char* desc : {"F(3^2)", "F(5^2; 1+t+t^2)", "F(13^3; 11+2*t+t^3)", "F(2^6)", "F(7^2)"}) {
    const FieldRef F = parse_field(desc);
    std::uniform_int_distribution<std::uint64_t> di(0, F->size() - 1);
    std::uniform_int_distribution<std::uint64_t> dr(1, 3 * F->unit_count());
    for (int iter = 0; iter < 60; ++iter) {
      const auto a = element_from_index(F, di(rng));
      const std::uint64_t r = dr(rng);
      const auto mine = rth_root(a, r);
      const auto truth = brute_roots(F, a, r);
      CHECK(mine.count == truth.size());
      if (truth.empty()) {
        CHECK_FALSE(mine.canonical_root.has_value());
      } else {
        REQUIRE(mine.canonical_root.has_value());
        CHECK(*mine.canonical_root == truth.front());  // oracle output is index-sorted
        CHECK(ff_pow(*mine.canonical_root, r) == a);
      }
    }
  }
}

TEST_CASE("sixty-first roots in F(13^3; 11+2*t+t^3)") {
  const FieldRef F = parse_field("F(13^3; 11+2*t+t^3)");
  const auto a = ff_pow(el(F, "6+2*t"), 61);
  CHECK(a == el(F, "5+3*t+7*t^2"));
  const auto rr = rth_root(a, 61);
  CHECK(rr.count == 61);  // gcd(61, 2196) = 61
  REQUIRE(rr.canonical_root.has_value());
  CHECK(ff_pow(*rr.canonical_root, 61) == a);
  const auto truth = brute_roots(F, a, 61);
  CHECK(truth.size() == 61);
  CHECK(*rr.canonical_root == truth.front());
}

TEST_CASE("division identity: frozen small cases") {
  const FieldRef F9 = make_field(3, 2);
  const auto rep = euler_division_identity(el(F9, "2"), 2);
  REQUIRE(rep.h.has_value());
  REQUIRE(rep.verified.has_value());
  CHECK(*rep.verified);
  CHECK(rep.remainder_coeff.is_zero());  // 2 is a square in F(9)
  CHECK(format_poly(*rep.h) == "2*x+x^3+2*x^5+x^7");

  const auto rep9 = euler_division_identity(el(F9, "1+t"), 2);
  CHECK(*rep9.verified);
  CHECK(rep9.remainder_coeff == el(F9, "1"));  // (1+t)^4 = 2, minus 1

  const FieldRef F25 = parse_field("F(5^2; 1+t+t^2)");
  const auto rep25 = euler_division_identity(el(F25, "2"), 4);
  REQUIRE(rep25.verified.has_value());
  CHECK(*rep25.verified);
  CHECK(rep25.remainder_coeff == el(F25, "3"));  // 2^6 - 1 = 63 = 3 (mod 5)

  CHECK_THROWS_AS(euler_division_identity(el(F9, "2"), 3), std::domain_error);
  CHECK_THROWS_AS(euler_division_identity(el(F9, "2"), 0), std::domain_error);
  CHECK_THROWS_AS(euler_division_identity(zero_element(F9), 2), std::domain_error);
}

TEST_CASE("division identity: r = 1 and r = q-1 degenerate cleanly") {
  const FieldRef F = make_field(3, 2);
  for (const auto& a : enumerate_units(F)) {
    const auto r1 = euler_division_identity(a, 1);
    CHECK(*r1.verified);
    CHECK(r1.remainder_coeff.is_zero());  // a^(q-1) = 1
    const auto rN = euler_division_identity(a, 8);
    CHECK(*rN.verified);
    CHECK(rN.h->degree() == 1);  // single term a^0 x^(q - (q-1)) = x
  }
}

TEST_CASE("division identity holds for every unit and divisor in small fields") {
  for (const char* desc : {"F(3^2)", "F(5^2; 1+t+t^2)", "F(2^4)"}) {
    const FieldRef F = parse_field(desc);
    const std::uint64_t N = F->unit_count();
    for (std::uint64_t r = 1; r <= N; ++r) {
      if (N % r != 0) continue;
      for (const auto& a : enumerate_units(F)) {
        const auto rep = euler_division_identity(a, r);
        REQUIRE(rep.verified.has_value());
        CHECK(*rep.verified);
        const bool zero_rem = rep.remainder_coeff.is_zero();
        CHECK(zero_rem == is_rth_power(a, r).is_power);
      }
    }
  }
}

TEST_CASE("division identity skips materialization above the degree cap") {
  const FieldRef F = make_field(3, 2);
  const auto rep = euler_division_identity(el(F, "2"), 2, 8);  // cap below q = 9
  CHECK_FALSE(rep.h.has_value());
  CHECK_FALSE(rep.verified.has_value());
  CHECK(rep.remainder_coeff.is_zero());  // still computed exactly
}

TEST_CASE("constant power tracking across extension degrees") {
  const PrimeModulus p3(3);
  const Residue two(2, p3);
  for (std::uint64_t n = 1; n <= 12; ++n)
    CHECK(constant_power_in_extension(two, n, 2) == (n % 2 == 0));

  // stays exact far beyond any constructible field
  CHECK(constant_power_in_extension(two, 100, 2));
  CHECK_FALSE(constant_power_in_extension(two, 101, 2));
  CHECK_FALSE(constant_power_in_extension(two, 1000000007ULL, 2));  // odd degree
  // gcd(2^62, 3^100 - 1) = 16 and (3^100 - 1)/16 is odd, so 2 is not one
  CHECK_FALSE(constant_power_in_extension(two, 100, std::uint64_t{1} << 62));

  CHECK_THROWS_AS(constant_power_in_extension(Residue(0, p3), 2, 2), std::domain_error);
  CHECK_THROWS_AS(constant_power_in_extension(two, 0, 2), std::domain_error);
  CHECK_THROWS_AS(constant_power_in_extension(two, 2, 0), std::domain_error);

  // characteristic 2: the only unit constant is 1, always a power
  for (std::uint64_t n : {1ULL, 7ULL, 64ULL})
    CHECK(constant_power_in_extension(Residue(1, PrimeModulus(2)), n, 6));
}

TEST_CASE("constant power tracking agrees with the in-field criterion") {
  for (const std::uint32_t pv : {3u, 5u, 7u}) {
    const PrimeModulus p(pv);
    for (unsigned n = 1; n <= 6; ++n) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < n; ++i) q *= pv;
      if (q > 729) break;
      const FieldRef F = make_field(pv, n);
      for (std::uint32_t c = 1; c < pv; ++c) {
        for (const std::uint64_t r : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL, 6ULL, 7ULL, 8ULL, 24ULL, 61ULL}) {
          const bool direct = is_rth_power(element_from_integer(F, c), r).is_power;
          CHECK(constant_power_in_extension(Residue(c, p), n, r) == direct);
        }
      }
    }
  }
}
