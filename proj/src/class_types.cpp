#include "guchar/class_types.hpp"

#include "guchar/arith.hpp"

#include <map>

namespace guchar {

unsigned ClassType::weight() const {
  unsigned w = 0;
  for (const auto& b : minus) w += b.m * b.d * b.e;
  for (const auto& b : plus) w += 2 * b.m * b.d * b.e;
  return w;
}

namespace {

// Candidate (m, d) pairs with m*d*unit <= n, sorted by (m, d); unit is 1 on
// the minus side and 2 on the plus side, and the minus side takes odd d only.
std::vector<std::pair<unsigned, unsigned>> candidates(unsigned n, unsigned unit, bool odd_only) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned m = 1; m * unit <= n; ++m)
    for (unsigned d = 1; m * d * unit <= n; ++d) {
      if (odd_only && d % 2 == 0) continue;
      out.emplace_back(m, d);
    }
  return out;
}

void assign_side(const std::vector<std::pair<unsigned, unsigned>>& cand, unsigned idx,
                 unsigned unit, unsigned remaining, std::vector<ClassEntry>& side,
                 const std::function<void(unsigned)>& done) {
  if (remaining == 0) {
    // later candidates all get multiplicity zero
    done(0);
    return;
  }
  if (idx == cand.size()) {
    done(remaining);
    return;
  }
  auto [m, d] = cand[idx];
  unsigned step = m * d * unit;
  for (unsigned e = 0; e * step <= remaining; ++e) {
    if (e > 0) {
      if (e == 1)
        side.push_back({m, d, 1});
      else
        side.back().e = e;
    }
    assign_side(cand, idx + 1, unit, remaining - e * step, side, done);
  }
  if (!side.empty() && side.back().m == m && side.back().d == d) side.pop_back();
}

}  // namespace

std::vector<ClassType> enumerate_class_types(unsigned n) {
  std::vector<ClassType> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  auto cminus = candidates(n, 1, true);
  auto cplus = candidates(n, 2, false);
  ClassType cur;
  std::function<void(unsigned)> finish_plus = [&](unsigned rem) {
    if (rem == 0) out.push_back(cur);
  };
  std::function<void(unsigned)> finish_minus = [&](unsigned rem) {
    if (rem % 2) return;  // plus blocks cover an even remainder
    assign_side(cplus, 0, 2, rem, cur.plus, finish_plus);
  };
  assign_side(cminus, 0, 1, n, cur.minus, finish_minus);
  return out;
}

std::vector<std::vector<unsigned>> weak_compositions(unsigned n, unsigned parts) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<unsigned> cur(parts);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned idx, unsigned remaining) {
    if (idx + 1 == parts) {
      cur[idx] = remaining;
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      cur[idx] = v;
      rec(idx + 1, remaining - v);
    }
  };
  rec(0, n);
  return out;
}

const CountFns& CountFns::standard() {
  static const CountFns fns{
      [](unsigned d) { return count_selfdual_irreducible(d); },
      [](unsigned d) { return count_dual_pairs(d); },
  };
  return fns;
}

RatPoly class_type_multiplier(const ClassType& t, const CountFns& fns) {
  RatPoly out = RatPoly::constant(1);
  auto side = [&](const std::vector<ClassEntry>& blocks,
                  const std::function<RatPoly(unsigned)>& count) {
    std::map<unsigned, std::vector<unsigned>> by_degree;
    for (const auto& b : blocks) by_degree[b.d].push_back(b.e);
    for (const auto& [d, exps] : by_degree) out *= poly_multinomial(count(d), exps);
  };
  side(t.minus, fns.minus_count);
  side(t.plus, fns.plus_count);
  return out;
}

}  // namespace guchar
