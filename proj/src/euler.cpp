#include "guchar/euler.hpp"

#include "guchar/arith.hpp"

#include <sstream>
#include <stdexcept>

namespace guchar {

namespace {

void require_level(unsigned r) {
  if (r == 0) throw std::domain_error("level r must be >= 1");
}

TruncSeries closed_product(unsigned r, unsigned order, bool unitary) {
  require_level(r);
  unsigned s = r - 1;
  TruncSeries out = TruncSeries::one(order);
  for (unsigned j = 0; j <= s; ++j) {
    Int e = binomial(s, j);
    if (j % 2) e = -e;
    Rat lead = (!unitary || j % 2) ? Rat(-1) : Rat(1);
    RatPoly c = RatPoly::monomial(lead, s - j);
    out = out * TruncSeries::binomial_factor(c, static_cast<long long>(e), order);
  }
  return out;
}

IntPoly direct_sum(unsigned n, unsigned r, bool unitary) {
  require_level(r);
  unsigned s = r - 1;
  std::vector<Int> acc(static_cast<size_t>(n) * s + 1);
  for (const auto& comp : weak_compositions(n, s + 1)) {
    Int coef = 1;
    unsigned pw = 0;
    for (unsigned j = 0; j <= s; ++j) {
      unsigned nj = comp[j];
      if (nj == 0) continue;
      Int top = binomial(s, j);
      if (j % 2) top = -top;
      Int c = gen_binomial(top, nj);
      bool flip = unitary ? (j % 2 == 1 && nj % 2 == 1) : (nj % 2 == 1);
      if (flip) c = -c;
      coef *= c;
      pw += nj * (s - j);
      if (coef == 0) break;
    }
    if (coef != 0) acc[pw] += coef;
  }
  return IntPoly(acc);
}

}  // namespace

TruncSeries fgu_closed(unsigned r, unsigned order) { return closed_product(r, order, true); }
TruncSeries fgl_closed(unsigned r, unsigned order) { return closed_product(r, order, false); }

IntPoly chi_gu_direct(unsigned n, unsigned r) { return direct_sum(n, r, true); }
IntPoly chi_gl_direct(unsigned n, unsigned r) { return direct_sum(n, r, false); }

TruncSeries chi_gu_exp(unsigned r, unsigned order) {
  require_level(r);
  std::vector<RatPoly> a(order + 1);
  for (unsigned m = 1; m <= order; ++m) {
    RatPoly base = RatPoly::monomial(1, m);
    base -= RatPoly::constant(m % 2 ? Rat(-1) : Rat(1));
    a[m] = base.pow(r - 1);
    if (m % 2 == 0) a[m].scale(Rat(-1));
  }
  return TruncSeries::exp_from_log_derivative(a, order);
}

std::vector<IntPoly> chi_gu_recursion(unsigned r, unsigned nmax) {
  require_level(r);
  // The convolution below builds h_n with 1 + sum h_n x^n = FGL_r(-q; x),
  // i.e. the GL series with q negated. The unitary values follow from
  // u_r(n)(q) = (-1)^{nr} h_n(q).
  std::vector<RatPoly> h(nmax + 1);
  h[0] = RatPoly::constant(1);
  std::vector<RatPoly> w(nmax + 1);
  for (unsigned j = 1; j <= nmax; ++j) {
    RatPoly base = RatPoly::monomial(j % 2 ? Rat(-1) : Rat(1), j);  // (-q)^j
    base -= RatPoly::constant(1);
    w[j] = base.pow(r - 1);
  }
  for (unsigned n = 1; n <= nmax; ++n) {
    RatPoly acc;
    for (unsigned j = 1; j <= n; ++j) acc += w[j] * h[n - j];
    acc.scale(Rat(-1) / Rat(n));
    h[n] = acc;
  }
  std::vector<IntPoly> out(nmax + 1);
  out[0] = IntPoly(std::vector<Int>{1});
  for (unsigned n = 1; n <= nmax; ++n) {
    RatPoly v = h[n];
    if ((n * r) % 2) v.scale(Rat(-1));
    out[n] = IntPoly::from_ratpoly(v, "chi_gu_recursion");
  }
  return out;
}

TruncSeries chi_gu_infprod(unsigned r, unsigned order) {
  require_level(r);
  int sign = (r % 2) ? -1 : 1;
  TruncSeries out = TruncSeries::one(order);
  for (unsigned n = 1; n <= order; ++n) {
    RatPoly b = infprod_exponent(r - 1, n);
    if (b.is_zero()) continue;
    TruncSeries factor(order);
    factor.set_coeff(0, RatPoly::constant(1));
    int sn = (n % 2) ? sign : 1;
    factor.set_coeff(n, RatPoly::constant(-sn));
    out = out * TruncSeries::pow_poly_exponent(factor, b, order);
  }
  return out;
}

const IntPoly& EulerTable::chi(Family f, unsigned n, unsigned r) {
  require_level(r);
  auto key = std::make_tuple(f, n, r);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  IntPoly value;
  if (n == 0) {
    value = IntPoly(std::vector<Int>{1});
  } else if (f == Family::GL) {
    value = IntPoly::from_ratpoly(fgl_closed(r, n).coeff(n), "fgl_closed");
  } else if (r == 1) {
    if (n == 1) value = IntPoly(std::vector<Int>{1});
  } else {
    RatPoly acc;
    for (const auto& t : enumerate_class_types(n)) {
      RatPoly term = class_type_multiplier(t);
      for (const auto& b : t.minus)
        term *= chi(Family::GU, b.m, r - 1).to_ratpoly().compose_power(b.d).pow(b.e);
      for (const auto& b : t.plus)
        term *= chi(Family::GL, b.m, r - 1).to_ratpoly().compose_power(2 * b.d).pow(b.e);
      acc += term;
    }
    value = IntPoly::from_ratpoly(acc, "chi_gu_classtype");
  }
  return cache_.emplace(key, std::move(value)).first->second;
}

IntPoly chi_gu_classtype(unsigned n, unsigned r) {
  EulerTable table;
  return table.chi(Family::GU, n, r);
}

TruncSeries transform_step(const TruncSeries& f, bool plus_variant, unsigned order,
                           const CountFns& fns) {
  if (f.coeff(0) != RatPoly::constant(1))
    throw std::domain_error("transform input must have constant term 1");
  TruncSeries out = TruncSeries::one(order);
  for (unsigned d = 1; d <= order; d += 2) {
    RatPoly expo = fns.minus_count(d);
    if (expo.is_zero()) continue;
    TruncSeries factor =
        f.truncate(std::min(f.order(), order))
            .map_coeffs([d](const RatPoly& p) { return p.compose_power(d); })
            .substitute(RatPoly::constant(1), d)
            .truncate(order);
    out = out * TruncSeries::pow_poly_exponent(factor, expo, order);
  }
  for (unsigned d = 1; 2 * d <= order; ++d) {
    RatPoly expo = fns.plus_count(d);
    if (expo.is_zero()) continue;
    TruncSeries factor =
        f.truncate(std::min(f.order(), order))
            .map_coeffs([d](const RatPoly& p) { return p.negate_variable().compose_power(2 * d); })
            .substitute(RatPoly::constant(plus_variant ? 1 : -1), 2 * d)
            .truncate(order);
    out = out * TruncSeries::pow_poly_exponent(factor, expo, order);
  }
  return out;
}

TruncSeries chi_gu_transform(unsigned r, unsigned order, const CountFns& fns) {
  require_level(r);
  TruncSeries f = TruncSeries::one(order);
  if (order >= 1) f.set_coeff(1, RatPoly::constant(1));
  for (unsigned level = 1; level < r; ++level)
    f = transform_step(f, level % 2 == 0, order, fns);
  return f;
}

std::vector<Int> p_primary_sequence(unsigned p, const Int& q, unsigned r, unsigned nmax) {
  require_level(r);
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (abs(q) < 2) throw std::domain_error("|q| must be at least 2");
  std::vector<Rat> a(nmax + 1), c(nmax + 1);
  for (unsigned m = 1; m <= nmax; ++m) {
    Int delta = int_pow(q, m) - (m % 2 ? Int(-1) : Int(1));
    Int v = int_pow(p_part(delta, p), r - 1);
    a[m] = Rat(m % 2 ? v : -v);
  }
  c[0] = 1;
  std::vector<Int> out(nmax + 1);
  out[0] = 1;
  for (unsigned n = 1; n <= nmax; ++n) {
    Rat acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += c[n - k] * a[k];
    c[n] = acc / n;
    if (denominator(c[n]) != 1)
      throw NonIntegralError("p_primary_sequence: fractional value " + rat_str(c[n]) + " at n=" +
                             std::to_string(n));
    out[n] = numerator(c[n]);
  }
  return out;
}

namespace {

CheckResult pass(const std::string& name) { return {name, true, ""}; }
CheckResult fail(const std::string& name, const std::string& detail) {
  return {name, false, detail};
}

std::string describe_mismatch(unsigned n, unsigned r, const std::string& what, const std::string& got,
                     const std::string& want) {
  std::ostringstream os;
  os << "n=" << n << " r=" << r << ": " << what << " gives " << got << ", expected " << want;
  return os.str();
}

}  // namespace

CheckResult verify_pipeline_agreement(unsigned nmax, unsigned rmax) {
  const std::string name = "pipeline-agreement";
  TruncSeries f = TruncSeries::one(nmax);
  if (nmax >= 1) f.set_coeff(1, RatPoly::constant(1));
  for (unsigned r = 1; r <= rmax; ++r) {
    if (r > 1) f = transform_step(f, r % 2 == 1, nmax);
    TruncSeries closed = fgu_closed(r, nmax);
    TruncSeries expf = chi_gu_exp(r, nmax);
    TruncSeries infprod = chi_gu_infprod(r, nmax);
    std::vector<IntPoly> rec = chi_gu_recursion(r, nmax);
    EulerTable table;
    for (unsigned n = 1; n <= nmax; ++n) {
      IntPoly ref = chi_gu_direct(n, r);
      const RatPoly refq = ref.to_ratpoly();
      const std::string want = ref.to_string();
      if (closed.coeff(n) != refq)
        return fail(name, describe_mismatch(n, r, "closed", closed.coeff(n).to_string(), want));
      if (expf.coeff(n) != refq)
        return fail(name, describe_mismatch(n, r, "exp", expf.coeff(n).to_string(), want));
      if (infprod.coeff(n) != refq)
        return fail(name, describe_mismatch(n, r, "infprod", infprod.coeff(n).to_string(), want));
      if (rec[n] != ref)
        return fail(name, describe_mismatch(n, r, "recursion", rec[n].to_string(), want));
      if (f.coeff(n) != refq)
        return fail(name, describe_mismatch(n, r, "transform", f.coeff(n).to_string(), want));
      const IntPoly& ct = table.chi(Family::GU, n, r);
      if (ct != ref) return fail(name, describe_mismatch(n, r, "classtype", ct.to_string(), want));
    }
  }
  return pass(name);
}

CheckResult verify_gu_gl_sign(unsigned nmax, unsigned rmax) {
  const std::string name = "gu-gl-sign";
  for (unsigned r = 1; r <= rmax; ++r)
    for (unsigned n = 1; n <= nmax; ++n) {
      RatPoly lhs = chi_gu_direct(n, r).to_ratpoly();
      RatPoly rhs = chi_gl_direct(n, r).to_ratpoly().negate_variable();
      if ((n * r) % 2) rhs.scale(Rat(-1));
      if (lhs != rhs)
        return fail(name, describe_mismatch(n, r, "sign relation", lhs.to_string(), rhs.to_string()));
    }
  return pass(name);
}

CheckResult verify_irreducible_zeta(unsigned order) {
  const std::string name = "irreducible-zeta";
  TruncSeries lhs = TruncSeries::one(order);
  for (unsigned d = 1; d <= order; ++d) {
    RatPoly expo = -count_irreducible(d);
    TruncSeries factor(order);
    factor.set_coeff(0, RatPoly::constant(1));
    factor.set_coeff(d, RatPoly::constant(-1));
    lhs = lhs * TruncSeries::pow_poly_exponent(factor, expo, order);
  }
  TruncSeries rhs = TruncSeries::binomial_factor(RatPoly::constant(-1), 1, order) *
                    TruncSeries::binomial_factor(RatPoly::monomial(-1, 1), -1, order);
  for (unsigned k = 0; k <= order; ++k)
    if (lhs.coeff(k) != rhs.coeff(k))
      return fail(name, describe_mismatch(k, 0, "zeta product coefficient", lhs.coeff(k).to_string(),
                                 rhs.coeff(k).to_string()));
  return pass(name);
}

CheckResult verify_selfdual_factorization(unsigned order) {
  const std::string name = "selfdual-factorization";
  TruncSeries lhs = TruncSeries::one(order);
  for (unsigned d = 1; d <= order; d += 2) {
    RatPoly expo = count_selfdual_irreducible(d);
    if (expo.is_zero()) continue;
    TruncSeries plus(order), minus(order);
    plus.set_coeff(0, RatPoly::constant(1));
    plus.set_coeff(d, RatPoly::constant(1));
    minus.set_coeff(0, RatPoly::constant(1));
    minus.set_coeff(d, RatPoly::constant(-1));
    TruncSeries base = plus * minus.inverse();
    lhs = lhs * TruncSeries::pow_poly_exponent(base, expo, order);
  }
  TruncSeries rhs = TruncSeries::binomial_factor(RatPoly::constant(1), 1, order) *
                    TruncSeries::binomial_factor(RatPoly::monomial(1, 1), 1, order) *
                    TruncSeries::binomial_factor(RatPoly::constant(-1), -1, order) *
                    TruncSeries::binomial_factor(RatPoly::monomial(-1, 1), -1, order);
  for (unsigned k = 0; k <= order; ++k)
    if (lhs.coeff(k) != rhs.coeff(k))
      return fail(name, describe_mismatch(k, 0, "self-dual product coefficient", lhs.coeff(k).to_string(),
                                 rhs.coeff(k).to_string()));
  return pass(name);
}

CheckResult verify_count_relations(unsigned dmax) {
  const std::string name = "count-relations";
  for (unsigned d = 2; d <= dmax; ++d) {
    if (d % 2) {
      if (count_selfdual_irreducible(d) != count_irreducible(d))
        return fail(name, "A^-(d) != A(d) at odd d=" + std::to_string(d));
    } else {
      if (!count_selfdual_irreducible(d).is_zero())
        return fail(name, "A^-(d) != 0 at even d=" + std::to_string(d));
    }
    if (count_dual_pairs(d) != count_irreducible(2 * d))
      return fail(name, "A^+(d) != A(2d) at d=" + std::to_string(d));
  }
  RatPoly a1(std::vector<Rat>{Rat(-1), Rat(-1, 2), Rat(1, 2)});
  if (count_dual_pairs(1) != a1)
    return fail(name, "A^+(1) != (q^2-q-2)/2, got " + count_dual_pairs(1).to_string());
  return pass(name);
}

CheckResult verify_variant_recursion(unsigned nmax) {
  const std::string name = "variant-recursion";
  for (Int q = 2; q <= 4; ++q)
    for (unsigned n = 1; n <= nmax; ++n) {
      Int lhs = 0;
      for (unsigned d : divisors(n)) {
        if (d % 2 == 0) continue;
        unsigned k = n / d;
        Int weight = (k % 2) ? 2 : 0;
        lhs += weight * d * count_selfdual_irreducible(d).eval_int(q);
      }
      Int rhs = (n % 2) ? 2 * (int_pow(q, n) + 1) : Int(0);
      if (lhs != rhs)
        return fail(name, "log-derivative sum at q=" + int_str(q) + " n=" + std::to_string(n) +
                              ": " + int_str(lhs) + " != " + int_str(rhs));
    }
  return pass(name);
}

CheckResult verify_qregular_identity(unsigned nmax, const CountFns& fns) {
  const std::string name = "qregular-identity";
  for (unsigned n = 1; n <= nmax; ++n) {
    RatPoly acc;
    for (const auto& t : enumerate_class_types(n)) acc += class_type_multiplier(t, fns);
    RatPoly want = selfdual_monic_count(n).to_ratpoly();
    if (acc != want)
      return fail(name, describe_mismatch(n, 0, "class-type multiplier sum", acc.to_string(),
                                 want.to_string()));
  }
  return pass(name);
}

CheckResult verify_master_identity(unsigned nmax, unsigned rmax, const CountFns& fns) {
  const std::string name = "master-identity";
  for (unsigned r = 1; r <= rmax; ++r)
    for (unsigned n = 1; n <= nmax; ++n) {
      RatPoly lhs = chi_gu_direct(n, r + 1).to_ratpoly();
      RatPoly rhs;
      for (const auto& t : enumerate_class_types(n)) {
        RatPoly term = class_type_multiplier(t, fns);
        for (const auto& b : t.minus)
          term *= chi_gu_direct(b.m, r).to_ratpoly().compose_power(b.d).pow(b.e);
        for (const auto& b : t.plus)
          term *= chi_gl_direct(b.m, r).to_ratpoly().compose_power(2 * b.d).pow(b.e);
        rhs += term;
      }
      if (lhs != rhs)
        return fail(name, describe_mismatch(n, r, "class-type expansion", rhs.to_string(),
                                   lhs.to_string()));
    }
  return pass(name);
}

CheckResult verify_divisibility(unsigned nmax, unsigned rmax) {
  const std::string name = "divisibility";
  for (unsigned r = 1; r <= rmax; ++r)
    for (unsigned n = 1; n <= nmax; ++n) {
      RatPoly u = chi_gu_direct(n, r).to_ratpoly();
      RatPoly divisor = RatPoly(std::vector<Rat>{1, 1}).pow(r - 1);
      if (r % 2) divisor *= RatPoly::monomial(1, n - 1);
      if (!u.divide_exact(divisor))
        return fail(name, describe_mismatch(n, r, "u_r(n) mod " + divisor.to_string(), u.to_string(),
                                   "a multiple"));
    }
  return pass(name);
}

CheckResult verify_transform_base(unsigned order, const CountFns& fns) {
  const std::string name = "transform-base";
  TruncSeries onepx = TruncSeries::one(order);
  onepx.set_coeff(1, RatPoly::constant(1));
  TruncSeries onemx = TruncSeries::one(order);
  onemx.set_coeff(1, RatPoly::constant(-1));
  TruncSeries lhs_minus = transform_step(onepx, false, order, fns);
  TruncSeries rhs_minus = TruncSeries::binomial_factor(RatPoly::monomial(1, 1), 1, order) *
                          TruncSeries::binomial_factor(RatPoly::constant(-1), -1, order);
  TruncSeries lhs_plus = transform_step(onemx, true, order, fns);
  TruncSeries rhs_plus = TruncSeries::binomial_factor(RatPoly::monomial(-1, 1), 1, order) *
                         TruncSeries::binomial_factor(RatPoly::constant(1), -1, order);
  for (unsigned k = 0; k <= order; ++k) {
    if (lhs_minus.coeff(k) != rhs_minus.coeff(k))
      return fail(name, describe_mismatch(k, 0, "minus-variant base case", lhs_minus.coeff(k).to_string(),
                                 rhs_minus.coeff(k).to_string()));
    if (lhs_plus.coeff(k) != rhs_plus.coeff(k))
      return fail(name, describe_mismatch(k, 0, "plus-variant base case", lhs_plus.coeff(k).to_string(),
                                 rhs_plus.coeff(k).to_string()));
  }
  return pass(name);
}

std::vector<CheckResult> verify_all(unsigned nmax, unsigned rmax, unsigned order,
                                    const CountFns& fns) {
  std::vector<CheckResult> out;
  out.push_back(verify_pipeline_agreement(nmax, rmax));
  out.push_back(verify_gu_gl_sign(nmax, rmax));
  out.push_back(verify_irreducible_zeta(order));
  out.push_back(verify_selfdual_factorization(order));
  out.push_back(verify_count_relations(order));
  out.push_back(verify_variant_recursion(order));
  out.push_back(verify_qregular_identity(nmax, fns));
  out.push_back(verify_master_identity(nmax, rmax, fns));
  out.push_back(verify_divisibility(nmax, rmax));
  out.push_back(verify_transform_base(order, fns));
  return out;
}

}  // namespace guchar
