#include "doctest.h"

#include "guchar/field.hpp"

using namespace guchar;

TEST_CASE("prime fields") {
  FieldTable f7(7, 1);
  CHECK(f7.size() == 7);
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.neg(3) == 4);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.pow(3, 6) == 1);
  CHECK(f7.frobenius(4) == 4);  // x^p = x on the prime field
  CHECK(f7.modulus() == std::vector<unsigned>{0, 1});
}

TEST_CASE("four elements") {
  FieldTable f4(2, 2);
  CHECK(f4.size() == 4);
  // t^2 + t + 1, the unique irreducible quadratic
  CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});
  for (unsigned a = 0; a < 4; ++a) CHECK(f4.add(a, a) == 0);
  // t * t = t + 1 under the modulus; indices 2 -> t, 3 -> t + 1
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.mul(2, 3) == 1);
  CHECK(f4.inv(2) == 3);
  CHECK(f4.pow(f4.generator(), 3) == 1);
  CHECK(f4.frobenius(f4.frobenius(2)) == 2);
}

TEST_CASE("nine elements") {
  FieldTable f9(3, 2);
  // t^2 + 1 is the least-encoded irreducible quadratic over F_3
  CHECK(f9.modulus() == std::vector<unsigned>{1, 0, 1});
  // index 3 is t, and t^2 = -1 = 2
  CHECK(f9.mul(3, 3) == 2);
  unsigned fixed = 0;
  for (unsigned a = 0; a < 9; ++a)
    if (f9.frobenius(a) == a) ++fixed;
  CHECK(fixed == 3);
  for (unsigned a = 0; a < 9; ++a) CHECK(f9.frobenius(f9.frobenius(a)) == a);
}

TEST_CASE("medium extensions") {
  FieldTable f256(2, 8);
  CHECK(f256.size() == 256);
  for (unsigned a : {1u, 7u, 100u, 255u}) {
    CHECK(f256.mul(a, f256.inv(a)) == 1);
    CHECK(f256.pow(a, 255) == 1);
  }
  // Frobenius additivity on a sample
  for (unsigned a : {3u, 50u, 200u})
    for (unsigned b : {9u, 77u, 131u})
      CHECK(f256.frobenius(f256.add(a, b)) == f256.add(f256.frobenius(a), f256.frobenius(b)));

  FieldTable f625(5, 4);
  CHECK(f625.size() == 625);
  unsigned x = f625.generator();
  CHECK(f625.pow(x, 624) == 1);
  CHECK(f625.pow(x, 312) != 1);  // generator has full order

  unsigned fixed = 0;
  for (unsigned a = 0; a < 625; ++a) {
    unsigned frob4 = f625.pow(a, 5 * 5 * 5 * 5);
    CHECK(frob4 == a);  // Frobenius has order dividing k
    if (f625.frobenius(a) == a) ++fixed;
  }
  CHECK(fixed == 5);
}

TEST_CASE("constructor rejects bad parameters") {
  CHECK_THROWS_AS(FieldTable(4, 1), std::exception);
  CHECK_THROWS_AS(FieldTable(1, 3), std::exception);
  CHECK_THROWS_AS(FieldTable(2, 17), std::exception);  // 2^17 > 2^16
  CHECK_THROWS_AS(FieldTable(257, 2), std::exception);
}
