#pragma once

#include "guchar/class_types.hpp"
#include "guchar/poly.hpp"
#include "guchar/series.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace guchar {

// Everything here computes, for a level r >= 1, the integer polynomials
//   u_r(n) = -chi_r(GU(n,q))   and   g_r(n) = chi_r(GL(n,q)),
// chi_r being the r-th equivariant reduced Euler characteristic of the poset
// of nonzero proper totally isotropic (resp. proper nonzero) subspaces, and
// their generating series
//   FGU_r(x) = 1 + sum_{n>=1} u_r(n) x^n,
//   FGL_r(x) = 1 + sum_{n>=1} g_r(n) x^n.
// Seven independent routes to u_r(n) are implemented; they are checked
// against one another and against a brute-force group-theoretic oracle.

enum class Family { GU, GL };

// closed product form
//   FGU_r = prod_{0<=j<=r-1} (1 + (-1)^j q^{r-1-j} x)^{(-1)^j binom(r-1,j)}
TruncSeries fgu_closed(unsigned r, unsigned order);
//   FGL_r = prod_{0<=j<=r-1} (1 - q^{r-1-j} x)^{(-1)^j binom(r-1,j)}
TruncSeries fgl_closed(unsigned r, unsigned order);

// coefficient-level expansion of the closed form: a sum over weak
// compositions n_0 + ... + n_{r-1} = n of signed products of generalized
// binomials times powers of q
IntPoly chi_gu_direct(unsigned n, unsigned r);
IntPoly chi_gl_direct(unsigned n, unsigned r);

// exponential form
//   FGU_r = exp( sum_{m>=1} (-1)^{m+1} (q^m - (-1)^m)^{r-1} x^m / m )
TruncSeries chi_gu_exp(unsigned r, unsigned order);

// Convolution recursion. The raw recursion
//   n g_n = - sum_{j=1..n} ((-q)^j - 1)^{r-1} g_{n-j}
// produces g_n = chi_r(GL(n, -q)); the GU values are recovered through the
// sign relation u_r(n) = (-1)^{nr} g_n. Entry [n] of the result is u_r(n),
// entry [0] is 1.
std::vector<IntPoly> chi_gu_recursion(unsigned r, unsigned nmax);

// infinite product
//   FGU_r(x) = prod_{n>=1} (1 - s^n x^n)^{b(n)},  s = (-1)^r,
// with polynomial exponents b(n) = infprod_exponent(r-1, n). The sign s
// accounts for the x -> (-1)^r x substitution in the relation between the
// GU and GL series; without it the product expands the wrong series for odd
// levels.
TruncSeries chi_gu_infprod(unsigned r, unsigned order);

// Class-type recursion in r: u_r(n) as a sum over class types of weight n of
// multiplier times products of level r-1 values of both families over
// extension fields. Memoized; GL values come from the closed form.
class EulerTable {
 public:
  const IntPoly& chi(Family f, unsigned n, unsigned r);

 private:
  std::map<std::tuple<Family, unsigned, unsigned>, IntPoly> cache_;
};
IntPoly chi_gu_classtype(unsigned n, unsigned r);

// One transform step FGU_{r+1} = T(FGU_r), as a product over field degrees
// of series with polynomial exponents A^-(d), A^+(d). plus_variant selects
// the sign (+1)^k versus (-1)^k on the even-degree factors; the chain from
// FGU_1 = 1 + x alternates, starting with the minus variant.
TruncSeries transform_step(const TruncSeries& f, bool plus_variant, unsigned order,
                           const CountFns& fns = CountFns::standard());
TruncSeries chi_gu_transform(unsigned r, unsigned order,
                             const CountFns& fns = CountFns::standard());

// p-primary sequence -chi^p_r(GU(n,q)) for n = 1..nmax, p prime, q any
// integer with |q| >= 2 (negative q is accepted formally). Entry [0] is 1.
std::vector<Int> p_primary_sequence(unsigned p, const Int& q, unsigned r, unsigned nmax);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on success, first failing case otherwise
};

// the seven pipelines agree as integer polynomials on 1 <= n <= nmax,
// 1 <= r <= rmax
CheckResult verify_pipeline_agreement(unsigned nmax, unsigned rmax);
// u_r(n)(q) = (-1)^{nr} g_r(n)(-q)
CheckResult verify_gu_gl_sign(unsigned nmax, unsigned rmax);
// prod_d (1-x^d)^{-A(d)} = (1-x)/(1-qx)
CheckResult verify_irreducible_zeta(unsigned order);
// prod_{d odd} ((1+x^d)/(1-x^d))^{A^-(d)} = (1+x)(1+qx)/((1-x)(1-qx))
CheckResult verify_selfdual_factorization(unsigned order);
// A^-(d) = A(d) for odd d > 1, A^+(d) = A(2d) for d > 1, A^-(even) = 0
CheckResult verify_count_relations(unsigned dmax);
// log-derivative identity behind the self-dual factorization, numerically at
// q = 2, 3, 4
CheckResult verify_variant_recursion(unsigned nmax);
// q^n + q^{n-1} = sum of class-type multipliers over weight n
CheckResult verify_qregular_identity(unsigned nmax, const CountFns& fns = CountFns::standard());
// the level r+1 direct sum equals the class-type sum with level r direct
// sums over extension fields substituted in
CheckResult verify_master_identity(unsigned nmax, unsigned rmax,
                                   const CountFns& fns = CountFns::standard());
// (q+1)^{r-1} divides u_r(n) for even r, (q+1)^{r-1} q^{n-1} for odd r
CheckResult verify_divisibility(unsigned nmax, unsigned rmax);
// T^-(1+x) = (1+qx)/(1-x) and T^+(1-x) = (1-qx)/(1+x)
CheckResult verify_transform_base(unsigned order, const CountFns& fns = CountFns::standard());

std::vector<CheckResult> verify_all(unsigned nmax, unsigned rmax, unsigned order,
                                    const CountFns& fns = CountFns::standard());

}  // namespace guchar
