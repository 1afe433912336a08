#pragma once

#include "guchar/poly.hpp"

#include <functional>
#include <vector>

namespace guchar {

// Power series in x truncated at a fixed order, with RatPoly coefficients:
// sum_{k=0..order} c_k(q) x^k. Binary operations truncate to the smaller of
// the two orders.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned order);
  static TruncSeries one(unsigned order);

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
  const RatPoly& coeff(unsigned k) const;
  void set_coeff(unsigned k, RatPoly v);

  bool operator==(const TruncSeries&) const = default;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

  // multiplicative inverse; the constant term must be a nonzero rational
  TruncSeries inverse() const;

  // (1 + c x)^e for integer e; negative e goes through the inverse of the
  // positive power
  static TruncSeries binomial_factor(const RatPoly& c, long long e, unsigned order);

  // substitution x -> c x^k, k >= 1
  TruncSeries substitute(const RatPoly& c, unsigned k) const;

  TruncSeries map_coeffs(const std::function<RatPoly(const RatPoly&)>& f) const;

  // The series c with c_0 = 1 and n c_n = sum_{k=1..n} c_{n-k} a_k, i.e.
  // exp of the antiderivative of a as a logarithmic derivative sequence.
  // a[0] is ignored; a must have at least order+1 entries.
  static TruncSeries exp_from_log_derivative(const std::vector<RatPoly>& a, unsigned order);

  // inverse of the above; the constant term must be 1
  std::vector<RatPoly> log_derivative() const;

  // base^expo for a polynomial exponent, base with constant term 1:
  //   sum_k C(expo; k) (base - 1)^k.
  static TruncSeries pow_poly_exponent(const TruncSeries& base, const RatPoly& expo,
                                       unsigned order);

  TruncSeries truncate(unsigned order) const;

 private:
  std::vector<RatPoly> c_;
};

}  // namespace guchar
