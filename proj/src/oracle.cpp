#include "guchar/oracle.hpp"

#include "guchar/arith.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace guchar {

namespace {

struct DescentTicker {
  Int left;
  void spend(const Int& amount) {
    left -= amount;
    if (left < 0) throw OracleBudgetExceeded("oracle budget exhausted during descent");
  }
};

// Sum over tuples by iterated centralizers. H is a sorted index set into the
// group, A an index set into the subspace poset. Every level except the
// outermost skips elements flagged 0 in p_power (all flags are 1 when no
// p-primary filter applies).
struct Descent {
  const UnitaryGroup& group;
  std::vector<std::vector<char>> commuting;
  std::vector<char> p_power;
  DescentTicker ticker;

  Int sum(const std::vector<uint32_t>& h, const std::vector<uint32_t>& a, unsigned depth,
          bool outermost) {
    if (depth == 0) {
      ticker.spend(1);
      return Int(group.poset().reduced_euler(a));
    }
    ticker.spend(static_cast<long long>(h.size()));
    Int acc = 0;
    for (uint32_t gi : h) {
      if (!outermost && !p_power[gi]) continue;
      std::vector<uint32_t> hg;
      if (depth > 1) {
        hg.reserve(h.size());
        for (uint32_t hi : h)
          if (commuting[gi][hi]) hg.push_back(hi);
      }
      std::vector<uint32_t> ag;
      ag.reserve(a.size());
      for (uint32_t ui : a)
        if (group.act(gi, ui) == ui) ag.push_back(ui);
      acc += sum(hg, ag, depth - 1, false);
    }
    return acc;
  }
};

Int descent_total(const UnitaryGroup& group, unsigned r, unsigned p, const Int& budget) {
  Descent d{group, {}, {}, DescentTicker{budget}};
  size_t m = group.elements().size();
  if (r >= 2) {
    d.commuting.assign(m, std::vector<char>(m, 0));
    d.ticker.spend(static_cast<long long>(m * (m + 1) / 2));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i; j < m; ++j) {
        char c = group.commute(group.elements()[i], group.elements()[j]) ? 1 : 0;
        d.commuting[i][j] = c;
        d.commuting[j][i] = c;
      }
  }
  d.p_power.assign(m, 1);
  if (p) {
    d.ticker.spend(static_cast<long long>(m));
    for (size_t i = 0; i < m; ++i) {
      unsigned order = group.element_order(group.elements()[i]);
      d.p_power[i] = (Int(order) == p_part(Int(order), p)) ? 1 : 0;
    }
  }
  std::vector<uint32_t> all_g(m);
  for (size_t i = 0; i < m; ++i) all_g[i] = static_cast<uint32_t>(i);
  std::vector<uint32_t> all_u(group.subspaces().size());
  for (size_t i = 0; i < all_u.size(); ++i) all_u[i] = static_cast<uint32_t>(i);
  return d.sum(all_g, all_u, r, true);
}

Int normalized_negation(const Int& total, const Int& order) {
  if (total % order != 0)
    throw std::logic_error("tuple sum " + int_str(total) + " is not divisible by the group order " +
                           int_str(order));
  return -(total / order);
}

}  // namespace

Int chi_gu_bruteforce(unsigned n, unsigned q, unsigned r, const Int& budget) {
  if (r == 0) throw std::domain_error("level r must be >= 1");
  Int order = gu_order(n, Int(q));
  if (order > budget)
    throw OracleBudgetExceeded("group order " + int_str(order) + " exceeds the oracle budget");
  UnitaryGroup group(n, q, budget);
  Int total = descent_total(group, r, 0, budget);
  return normalized_negation(total, order);
}

Int chi_gu_p_primary_bruteforce(unsigned n, unsigned q, unsigned r, unsigned p,
                                const Int& budget) {
  if (r == 0) throw std::domain_error("level r must be >= 1");
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  Int order = gu_order(n, Int(q));
  if (order > budget)
    throw OracleBudgetExceeded("group order " + int_str(order) + " exceeds the oracle budget");
  UnitaryGroup group(n, q, budget);
  Int total = descent_total(group, r, p, budget);
  return normalized_negation(total, order);
}

Int count_polys(unsigned q, unsigned m, PolyFilter filter, const Int& budget) {
  if (m == 0) throw std::domain_error("degree m must be >= 1");
  auto pp = prime_power(Int(q));
  if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  FieldTable field(pp->first, 2 * pp->second);
  const unsigned fs = field.size();
  std::vector<unsigned> conj(fs);
  for (unsigned x = 0; x < fs; ++x) conj[x] = field.pow(x, q);

  DescentTicker ticker{budget};
  // coefficients a_0 .. a_{m-1}, a_m = 1 implicit; a_0 != 0
  std::vector<uint16_t> a(m + 1, 0);
  a[m] = 1;

  auto self_dual = [&]() {
    // constant term of norm 1 and conjugate-reversed coefficients
    if (field.pow(a[0], q + 1) != 1) return false;
    unsigned scale = field.inv(conj[a[0]]);
    for (unsigned j = 0; j <= m; ++j)
      if (a[j] != field.mul(conj[a[m - j]], scale)) return false;
    return true;
  };

  auto divides = [&](const std::vector<uint16_t>& div, unsigned deg) {
    std::vector<uint16_t> rem(a);
    for (unsigned d = m; d >= deg; --d) {
      uint16_t c = rem[d];
      if (c) {
        for (unsigned i = 0; i <= deg; ++i)
          rem[d - deg + i] =
              static_cast<uint16_t>(field.sub(rem[d - deg + i], field.mul(c, div[i])));
      }
      if (d == deg) break;
    }
    for (unsigned i = 0; i < deg; ++i)
      if (rem[i]) return false;
    return true;
  };

  auto irreducible = [&]() {
    for (unsigned deg = 1; 2 * deg <= m; ++deg) {
      unsigned long long count = 1;
      for (unsigned i = 0; i < deg; ++i) count *= fs;
      std::vector<uint16_t> div(deg + 1, 0);
      div[deg] = 1;
      for (unsigned long long idx = 0; idx < count; ++idx) {
        unsigned long long t = idx;
        for (unsigned i = 0; i < deg; ++i) {
          div[i] = static_cast<uint16_t>(t % fs);
          t /= fs;
        }
        if (divides(div, deg)) return false;
      }
    }
    return true;
  };

  Int out = 0;
  unsigned long long total = 1;
  for (unsigned i = 0; i < m; ++i) total *= fs;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    ticker.spend(1);
    unsigned long long t = idx;
    for (unsigned i = 0; i < m; ++i) {
      a[i] = static_cast<uint16_t>(t % fs);
      t /= fs;
    }
    if (a[0] == 0) continue;
    bool keep = false;
    switch (filter) {
      case PolyFilter::All:
        keep = true;
        break;
      case PolyFilter::SelfDual:
        keep = self_dual();
        break;
      case PolyFilter::Irreducible:
        keep = irreducible();
        break;
      case PolyFilter::IrreducibleSelfDual:
        keep = self_dual() && irreducible();
        break;
      case PolyFilter::IrreducibleDualPairs:
        keep = !self_dual() && irreducible();
        break;
    }
    if (keep) ++out;
  }
  if (filter == PolyFilter::IrreducibleDualPairs) {
    if (out % 2 != 0) throw std::logic_error("non-self-dual irreducibles did not pair up");
    out /= 2;
  }
  return out;
}

Int count_qregular_classes(unsigned n, unsigned q, const Int& budget) {
  Int order = gu_order(n, Int(q));
  if (order > budget)
    throw OracleBudgetExceeded("group order " + int_str(order) + " exceeds the oracle budget");
  UnitaryGroup group(n, q, budget);
  unsigned p = prime_power(Int(q))->first;
  DescentTicker ticker{budget};
  std::set<std::vector<uint16_t>> seen;
  for (const Mat& g : group.elements()) {
    ticker.spend(1);
    if (group.element_order(g) % p == 0) continue;
    seen.insert(group.char_poly(g));
  }
  return Int(seen.size());
}

}  // namespace guchar
