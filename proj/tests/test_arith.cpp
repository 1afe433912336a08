#include "doctest.h"

#include "guchar/arith.hpp"
#include "guchar/euler.hpp"

using namespace guchar;

namespace {

IntPoly ipoly(std::vector<Int> cs) { return IntPoly(std::move(cs)); }

IntPoly scaled(const RatPoly& p, unsigned by) {
  RatPoly s = p;
  s.scale(Rat(by));
  return IntPoly::from_ratpoly(s, "scaled count");
}

}  // namespace

TEST_CASE("moebius, divisors, primality") {
  int mu[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (unsigned n = 1; n <= 12; ++n) CHECK(moebius(n) == mu[n - 1]);
  CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<unsigned>{1});
  CHECK(divisors(49) == std::vector<unsigned>{1, 7, 49});
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("prime power decomposition") {
  CHECK(prime_power(Int(8)) == std::make_pair(2u, 3u));
  CHECK(prime_power(Int(81)) == std::make_pair(3u, 4u));
  CHECK(prime_power(Int(7)) == std::make_pair(7u, 1u));
  CHECK(prime_power(Int(262144)) == std::make_pair(2u, 18u));
  CHECK_FALSE(prime_power(Int(12)).has_value());
  CHECK_FALSE(prime_power(Int(1)).has_value());
  CHECK_FALSE(prime_power(Int(0)).has_value());
}

TEST_CASE("irreducible counts, scaled to integer polynomials") {
  // n count_irreducible(n), n = 1..6; the degree-1 count is q - 1 because
  // the single irreducible with zero constant term is excluded
  IntPoly rows[] = {
      ipoly({-1, 1}),                     // q - 1
      ipoly({0, -1, 1}),                  // q^2 - q
      ipoly({0, -1, 0, 1}),               // q^3 - q
      ipoly({0, 0, -1, 0, 1}),            // q^4 - q^2
      ipoly({0, -1, 0, 0, 0, 1}),         // q^5 - q
      ipoly({0, 1, -1, -1, 0, 0, 1}),     // q^6 - q^3 - q^2 + q
  };
  for (unsigned n = 1; n <= 6; ++n) CHECK(scaled(count_irreducible(n), n) == rows[n - 1]);

  // same counts over the quadratic extension: n count_irreducible(n)(q^2)
  IntPoly rows2[] = {
      ipoly({-1, 0, 1}),                                       // q^2 - 1
      ipoly({0, 0, -1, 0, 1}),                                 // q^4 - q^2
      ipoly({0, 0, -1, 0, 0, 0, 1}),                           // q^6 - q^2
      ipoly({0, 0, 0, 0, -1, 0, 0, 0, 1}),                     // q^8 - q^4
      ipoly({0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1}),               // q^10 - q^2
      ipoly({0, 0, 1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1}),        // q^12 - q^6 - q^4 + q^2
  };
  for (unsigned n = 1; n <= 6; ++n)
    CHECK(scaled(count_irreducible(n).compose_power(2), n) == rows2[n - 1]);
}

TEST_CASE("self-dual and dual-pair counts") {
  // n count_selfdual_irreducible(n): q+1, 0, q^3-q, 0, q^5-q, 0
  CHECK(count_selfdual_irreducible(1) == RatPoly({1, 1}));
  CHECK(count_selfdual_irreducible(2).is_zero());
  CHECK(scaled(count_selfdual_irreducible(3), 3) == ipoly({0, -1, 0, 1}));
  CHECK(count_selfdual_irreducible(4).is_zero());
  CHECK(scaled(count_selfdual_irreducible(5), 5) == ipoly({0, -1, 0, 0, 0, 1}));
  CHECK(count_selfdual_irreducible(6).is_zero());

  // 2n count_dual_pairs(n): q^2-q-2, q^4-q^2, q^6-q^3-q^2+q, q^8-q^4, ...
  IntPoly rows[] = {
      ipoly({-2, -1, 1}),
      ipoly({0, 0, -1, 0, 1}),
      ipoly({0, 1, -1, -1, 0, 0, 1}),
      ipoly({0, 0, 0, 0, -1, 0, 0, 0, 1}),
      ipoly({0, 1, -1, 0, 0, -1, 0, 0, 0, 0, 1}),
      ipoly({0, 0, 1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1}),
  };
  for (unsigned n = 1; n <= 6; ++n) CHECK(scaled(count_dual_pairs(n), 2 * n) == rows[n - 1]);

  // relations between the three counts
  for (unsigned d = 3; d <= 11; d += 2)
    CHECK(count_selfdual_irreducible(d) == count_irreducible(d));
  for (unsigned d = 2; d <= 12; ++d)
    CHECK(count_dual_pairs(d) == count_irreducible(2 * d));
  CHECK(count_dual_pairs(1) == RatPoly({Rat(-1), Rat(-1, 2), Rat(1, 2)}));

  // integer-valued at prime powers despite fractional coefficients
  for (unsigned d = 1; d <= 8; ++d)
    for (Int q : {Int(2), Int(3), Int(4), Int(5)}) {
      CHECK(count_irreducible(d).eval_int(q) >= 0);
      CHECK(count_dual_pairs(d).eval_int(q) >= 0);
    }
}

TEST_CASE("log derivative of the self-dual factorization, numerically") {
  CheckResult res = verify_variant_recursion(12);
  CHECK_MESSAGE(res.pass, res.detail);
}

TEST_CASE("infinite product exponents") {
  CHECK(infprod_exponent(2, 1) == RatPoly({1, 2, 1}));           // (q+1)^2
  CHECK(infprod_exponent(1, 1) == RatPoly({-1, -1}));            // -q-1
  CHECK(infprod_exponent(1, 2) == RatPoly({0, Rat(1, 2), Rat(1, 2)}));  // (q^2+q)/2
  CHECK(infprod_exponent(0, 1) == RatPoly::constant(1));
  CHECK(infprod_exponent(0, 2).is_zero());
  // integer-valued on integers
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned n = 1; n <= 6; ++n)
      for (int q = -3; q <= 3; ++q) {
        Rat v = infprod_exponent(r, n).eval(Rat(q));
        CHECK(denominator(v) == 1);
      }
}

TEST_CASE("p-parts") {
  CHECK(p_part(Int(48), 2) == 16);
  CHECK(p_part(Int(-12), 3) == 3);
  CHECK(p_part(Int(7), 2) == 1);
  CHECK(p_part(Int(4097), 3) == 1);
  CHECK(p_part(Int(16777215), 3) == 9);
}

TEST_CASE("self-dual monic totals") {
  CHECK(selfdual_monic_count(0) == IntPoly(std::vector<Int>{1}));
  CHECK(selfdual_monic_count(1) == ipoly({1, 1}));
  CHECK(selfdual_monic_count(3) == ipoly({0, 0, 1, 1}));
  CHECK(selfdual_monic_count(3).eval(2) == 12);
  CHECK(selfdual_monic_count(4).eval(3) == 108);
}
