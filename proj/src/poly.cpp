#include "guchar/poly.hpp"

#include <cassert>
#include <sstream>

namespace guchar {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly({c}); }

RatPoly RatPoly::variable() { return RatPoly({Rat(0), Rat(1)}); }

RatPoly RatPoly::monomial(const Rat& c, unsigned deg) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return RatPoly(std::move(v));
}

Rat RatPoly::coeff(unsigned deg) const { return deg < c_.size() ? c_[deg] : Rat(0); }

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::scale(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Rat RatPoly::eval(const Rat& at) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Int RatPoly::eval_int(const Int& at) const {
  Rat v = eval(Rat(at));
  if (denominator(v) != 1)
    throw NonIntegralError("non-integral value " + rat_str(v) + " of " + to_string() + " at " +
                           int_str(at));
  return numerator(v);
}

RatPoly RatPoly::compose_power(unsigned d) const {
  assert(d >= 1);
  if (is_zero() || d == 1) return *this;
  std::vector<Rat> out((c_.size() - 1) * d + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i * d] = c_[i];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::negate_variable() const {
  RatPoly r = *this;
  for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly acc = constant(1);
  for (unsigned i = 0; i < e; ++i) acc *= *this;
  return acc;
}

std::optional<RatPoly> RatPoly::divide_exact(const RatPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return RatPoly();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<Rat> quot(degree() - divisor.degree() + 1, Rat(0));
  RatPoly rem = *this;
  const Rat lead = divisor.c_.back();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    unsigned shift = rem.degree() - divisor.degree();
    Rat f = rem.c_.back() / lead;
    quot[shift] = f;
    rem -= divisor * monomial(f, shift);
  }
  if (!rem.is_zero()) return std::nullopt;
  return RatPoly(std::move(quot));
}

namespace {

// single term "c q^d" with sign handled by the caller
std::string term_str(const Rat& abs_coeff, unsigned deg, const std::string& var) {
  std::ostringstream os;
  bool frac = denominator(abs_coeff) != 1;
  if (deg == 0) {
    if (frac) os << "(" << abs_coeff << ")";
    else os << abs_coeff;
    return os.str();
  }
  if (frac) os << "(" << abs_coeff << ")";
  else if (abs_coeff != 1) os << abs_coeff;
  os << var;
  if (deg > 1) os << "^" << deg;
  return os.str();
}

}  // namespace

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rat& c = c_[d];
    if (c == 0) continue;
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << term_str(a, static_cast<unsigned>(d), var);
  }
  return os.str();
}

RatPoly poly_multinomial(const RatPoly& p, const std::vector<unsigned>& exps) {
  unsigned s = 0;
  for (unsigned e : exps) s += e;
  RatPoly acc = RatPoly::constant(1);
  for (unsigned t = 0; t < s; ++t) acc *= p - RatPoly::constant(Rat(t));
  Rat den(1);
  for (unsigned e : exps) den *= Rat(factorial(e));
  acc.scale(Rat(1) / den);
  return acc;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_ratpoly(const RatPoly& p, const std::string& context) {
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    if (denominator(c) != 1)
      throw NonIntegralError((context.empty() ? std::string("integrality") : context) +
                             ": fractional coefficient in " + p.to_string());
    out.push_back(numerator(c));
  }
  return IntPoly(std::move(out));
}

RatPoly IntPoly::to_ratpoly() const {
  std::vector<Rat> out;
  out.reserve(c_.size());
  for (const Int& c : c_) out.emplace_back(c);
  return RatPoly(std::move(out));
}

Int IntPoly::coeff(unsigned deg) const { return deg < c_.size() ? c_[deg] : Int(0); }

Int IntPoly::eval(const Int& at) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  return to_ratpoly().to_string(var);
}

}  // namespace guchar
