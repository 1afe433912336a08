#pragma once

#include "guchar/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace guchar {

int moebius(unsigned n);
std::vector<unsigned> divisors(unsigned n);
bool is_prime(unsigned n);

// decomposition q = p^e with p prime, e >= 1
std::optional<std::pair<unsigned, unsigned>> prime_power(const Int& q);

// Number of monic irreducible polynomials of degree d with nonzero constant
// term over a field with q elements, as a polynomial in q:
//   A(d) = (1/d) sum_{e|d} mu(d/e) (q^e - 1).
// In particular A(1) = q - 1, the irreducible x being excluded.
RatPoly count_irreducible(unsigned d);

// Number of self-dual monic irreducible polynomials of degree d, nonzero
// constant term, over the quadratic extension of a field with q elements:
//   A^-(d) = (1/d) sum_{e|d} mu(d/e) (q^e + 1)  for odd d, 0 for even d.
RatPoly count_selfdual_irreducible(unsigned d);

// Number of two-element sets {f, fbar} with f monic irreducible of degree d,
// nonzero constant term, over the quadratic extension, f not self-dual:
//   A^+(d) = (A(d)(q^2) - A^-(d)(q)) / 2.
// Integer-valued, but with fractional coefficients (already for d = 1).
RatPoly count_dual_pairs(unsigned d);

// Exponent of (1 - x^n) in the infinite-product expansion of the level-(r+1)
// generating series:
//   b(n) = (1/n) sum_{d|n} mu(n/d) ((-q)^d - 1)^r.
// Integer-valued; fractional coefficients occur (r = 1, n = 2 gives
// (q^2+q)/2).
RatPoly infprod_exponent(unsigned r, unsigned n);

// largest power of p dividing |m|; m must be nonzero
Int p_part(const Int& m, unsigned p);

// number of self-dual monic polynomials of degree m with nonzero constant
// term over the quadratic extension: q^m + q^{m-1}
IntPoly selfdual_monic_count(unsigned m);

}  // namespace guchar
