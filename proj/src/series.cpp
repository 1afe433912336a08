#include "guchar/series.hpp"

#include <stdexcept>

namespace guchar {

TruncSeries::TruncSeries(unsigned order) : c_(order + 1) {}

TruncSeries TruncSeries::one(unsigned order) {
  TruncSeries s(order);
  s.c_[0] = RatPoly::constant(1);
  return s;
}

const RatPoly& TruncSeries::coeff(unsigned k) const {
  if (k >= c_.size()) throw std::out_of_range("series coefficient beyond truncation order");
  return c_[k];
}

void TruncSeries::set_coeff(unsigned k, RatPoly v) {
  if (k >= c_.size()) throw std::out_of_range("series coefficient beyond truncation order");
  c_[k] = std::move(v);
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= out.order(); ++k) out.c_[k] = a.c_[k] + b.c_[k];
  return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (unsigned k = 0; k <= out.order(); ++k) out.c_[k] = a.c_[k] - b.c_[k];
  return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out(std::min(a.order(), b.order()));
  for (unsigned i = 0; i <= out.order(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= out.order(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

TruncSeries TruncSeries::inverse() const {
  const RatPoly& a0 = c_[0];
  if (a0.degree() > 0 || a0.is_zero())
    throw std::domain_error("series inverse requires a nonzero rational constant term");
  Rat inv0 = Rat(1) / a0.coeff(0);
  TruncSeries out(order());
  out.c_[0] = RatPoly::constant(inv0);
  for (unsigned n = 1; n <= order(); ++n) {
    RatPoly acc;
    for (unsigned k = 1; k <= n; ++k) acc += c_[k] * out.c_[n - k];
    acc.scale(-inv0);
    out.c_[n] = acc;
  }
  return out;
}

TruncSeries TruncSeries::binomial_factor(const RatPoly& c, long long e, unsigned order) {
  if (e < 0) return binomial_factor(c, -e, order).inverse();
  TruncSeries out(order);
  RatPoly ck = RatPoly::constant(1);
  for (unsigned k = 0; k <= order; ++k) {
    if (k > 0) {
      if (static_cast<long long>(k) > e) break;
      ck *= c;
    }
    RatPoly term = ck;
    term.scale(Rat(gen_binomial(Int(e), k)));
    out.c_[k] = term;
  }
  return out;
}

TruncSeries TruncSeries::substitute(const RatPoly& c, unsigned k) const {
  if (k == 0) throw std::domain_error("substitution x -> c x^k needs k >= 1");
  TruncSeries out(order());
  RatPoly ci = RatPoly::constant(1);
  for (unsigned i = 0; i * k <= order(); ++i) {
    if (i > 0) ci *= c;
    out.c_[i * k] += c_[i] * ci;
  }
  return out;
}

TruncSeries TruncSeries::map_coeffs(const std::function<RatPoly(const RatPoly&)>& f) const {
  TruncSeries out(order());
  for (unsigned k = 0; k <= order(); ++k) out.c_[k] = f(c_[k]);
  return out;
}

TruncSeries TruncSeries::exp_from_log_derivative(const std::vector<RatPoly>& a, unsigned order) {
  if (a.size() < order + 1)
    throw std::invalid_argument("log-derivative data shorter than the requested order");
  TruncSeries out(order);
  out.c_[0] = RatPoly::constant(1);
  for (unsigned n = 1; n <= order; ++n) {
    RatPoly acc;
    for (unsigned k = 1; k <= n; ++k) acc += out.c_[n - k] * a[k];
    acc.scale(Rat(1) / Rat(n));
    out.c_[n] = acc;
  }
  return out;
}

std::vector<RatPoly> TruncSeries::log_derivative() const {
  if (c_[0] != RatPoly::constant(1))
    throw std::domain_error("log derivative requires constant term 1");
  std::vector<RatPoly> a(order() + 1);
  for (unsigned n = 1; n <= order(); ++n) {
    RatPoly acc = c_[n];
    acc.scale(Rat(n));
    for (unsigned k = 1; k < n; ++k) acc -= a[k] * c_[n - k];
    a[n] = acc;
  }
  return a;
}

TruncSeries TruncSeries::pow_poly_exponent(const TruncSeries& base, const RatPoly& expo,
                                           unsigned order) {
  TruncSeries b = base.truncate(std::min(order, base.order()));
  if (b.c_[0] != RatPoly::constant(1))
    throw std::domain_error("polynomial-exponent power requires constant term 1");
  TruncSeries u = b - one(b.order());
  TruncSeries out(b.order());
  TruncSeries uk = one(b.order());
  for (unsigned k = 0; k <= b.order(); ++k) {
    RatPoly bk = poly_multinomial(expo, {k});
    if (!bk.is_zero()) {
      for (unsigned i = 0; i <= b.order(); ++i)
        if (!uk.c_[i].is_zero()) out.c_[i] += uk.c_[i] * bk;
    }
    if (k < b.order()) {
      uk = uk * u;
      bool zero = true;
      for (unsigned i = 0; i <= uk.order(); ++i)
        if (!uk.c_[i].is_zero()) {
          zero = false;
          break;
        }
      if (zero) break;
    }
  }
  return out;
}

TruncSeries TruncSeries::truncate(unsigned order) const {
  if (order > this->order()) throw std::out_of_range("cannot extend a truncated series");
  TruncSeries out(order);
  for (unsigned k = 0; k <= order; ++k) out.c_[k] = c_[k];
  return out;
}

}  // namespace guchar
