#pragma once

#include "guchar/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace guchar {

// Raised when a value that is claimed to be an integer polynomial turns out
// to have a fractional coefficient. The message carries the offending
// polynomial and the computation that produced it.
struct NonIntegralError : std::runtime_error {
  explicit NonIntegralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Polynomial in one variable over Q. Coefficients are stored from degree 0
// upward with no trailing zeros; the zero polynomial is the empty vector, so
// equal polynomials always have equal representations.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  static RatPoly constant(const Rat& c);
  static RatPoly variable();
  static RatPoly monomial(const Rat& c, unsigned deg);

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(unsigned deg) const;

  bool operator==(const RatPoly&) const = default;

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }
  RatPoly& scale(const Rat& s);

  Rat eval(const Rat& at) const;
  // evaluation that must land in Z, e.g. for integer-valued polynomials
  Int eval_int(const Int& at) const;

  RatPoly compose_power(unsigned d) const;  // q -> q^d, d >= 1
  RatPoly negate_variable() const;          // q -> -q
  RatPoly pow(unsigned e) const;

  // exact division; nullopt when the divisor is zero or the remainder is not
  std::optional<RatPoly> divide_exact(const RatPoly& divisor) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  std::vector<Rat> c_;
  void normalize();
};

// Falling-factorial multinomial coefficient with polynomial top:
//   C(P; e_1,...,e_k) = P (P-1) ... (P-s+1) / (e_1! ... e_k!),  s = sum e_i.
RatPoly poly_multinomial(const RatPoly& p, const std::vector<unsigned>& exps);

// Polynomial over Z, the boundary type for results whose integrality is part
// of what is being verified. Conversion from RatPoly fails loudly.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly from_ratpoly(const RatPoly& p, const std::string& context = "");

  RatPoly to_ratpoly() const;
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(unsigned deg) const;
  Int eval(const Int& at) const;

  bool operator==(const IntPoly&) const = default;

  std::string to_string(const std::string& var = "q") const;

 private:
  std::vector<Int> c_;
};

}  // namespace guchar
