#include "guchar/arith.hpp"

#include <limits>
#include <stdexcept>

namespace guchar {

int moebius(unsigned n) {
  if (n == 0) throw std::domain_error("moebius(0)");
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  if (n == 0) throw std::domain_error("divisors(0)");
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(const Int& q) {
  if (q < 2) return std::nullopt;
  for (unsigned p = 2;; ++p) {
    if (Int(p) * p > q) break;
    if (!is_prime(p)) continue;
    if (q % p) continue;
    Int m = q;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (m == 1) return std::make_pair(p, e);
    return std::nullopt;
  }
  // q itself is prime
  if (q > std::numeric_limits<unsigned>::max()) return std::nullopt;
  return std::make_pair(static_cast<unsigned>(q), 1u);
}

RatPoly count_irreducible(unsigned d) {
  if (d == 0) throw std::domain_error("count_irreducible(0)");
  RatPoly acc;
  for (unsigned e : divisors(d)) {
    int mu = moebius(d / e);
    if (mu == 0) continue;
    RatPoly term = RatPoly::monomial(Rat(mu), e);
    term -= RatPoly::constant(Rat(mu));
    acc += term;
  }
  acc.scale(Rat(1) / Rat(d));
  return acc;
}

RatPoly count_selfdual_irreducible(unsigned d) {
  if (d == 0) throw std::domain_error("count_selfdual_irreducible(0)");
  if (d % 2 == 0) return RatPoly{};
  RatPoly acc;
  for (unsigned e : divisors(d)) {
    int mu = moebius(d / e);
    if (mu == 0) continue;
    RatPoly term = RatPoly::monomial(Rat(mu), e);
    term += RatPoly::constant(Rat(mu));
    acc += term;
  }
  acc.scale(Rat(1) / Rat(d));
  return acc;
}

RatPoly count_dual_pairs(unsigned d) {
  RatPoly acc = count_irreducible(d).compose_power(2);
  acc -= count_selfdual_irreducible(d);
  acc.scale(Rat(1, 2));
  return acc;
}

RatPoly infprod_exponent(unsigned r, unsigned n) {
  if (n == 0) throw std::domain_error("infprod_exponent needs n >= 1");
  RatPoly acc;
  for (unsigned d : divisors(n)) {
    int mu = moebius(n / d);
    if (mu == 0) continue;
    RatPoly base = RatPoly::monomial(Rat(d % 2 ? -1 : 1), d);  // (-q)^d
    base -= RatPoly::constant(1);
    RatPoly term = base.pow(r);
    term.scale(Rat(mu));
    acc += term;
  }
  acc.scale(Rat(1) / Rat(n));
  return acc;
}

Int p_part(const Int& m, unsigned p) {
  if (m == 0) throw std::domain_error("p_part(0)");
  if (p < 2) throw std::domain_error("p_part needs p >= 2");
  Int v = abs(m);
  Int out = 1;
  while (v % p == 0) {
    v /= p;
    out *= p;
  }
  return out;
}

IntPoly selfdual_monic_count(unsigned m) {
  if (m == 0) return IntPoly{std::vector<Int>{1}};
  std::vector<Int> c(m + 1);
  c[m] = 1;
  c[m - 1] = 1;
  return IntPoly{c};
}

}  // namespace guchar
