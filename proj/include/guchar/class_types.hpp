#pragma once

#include "guchar/poly.hpp"

#include <functional>
#include <vector>

namespace guchar {

// One block of a class type: a dimension m over a degree-d extension,
// occurring with multiplicity e >= 1.
struct ClassEntry {
  unsigned m = 0;
  unsigned d = 0;
  unsigned e = 0;
  bool operator==(const ClassEntry&) const = default;
  auto operator<=>(const ClassEntry&) const = default;
};

// A pair of multisets of (m, d) blocks with multiplicities. Both sides carry
// distinct (m, d) pairs sorted by (m, d); the minus side has odd d only. A
// plus block counts twice toward the weight:
//   sum_minus m d e + 2 sum_plus m d e = n.
struct ClassType {
  std::vector<ClassEntry> minus;
  std::vector<ClassEntry> plus;
  unsigned weight() const;
  bool operator==(const ClassType&) const = default;
};

// all class types of weight n, in a fixed deterministic order
std::vector<ClassType> enumerate_class_types(unsigned n);

// all tuples of `parts` nonnegative integers summing to n, lexicographic
std::vector<std::vector<unsigned>> weak_compositions(unsigned n, unsigned parts);

// The degree-indexed count polynomials entering class-type multipliers.
// Replaceable so the verification harness can inject faults and prove the
// identity checks are able to fail.
struct CountFns {
  std::function<RatPoly(unsigned)> minus_count;  // default: count_selfdual_irreducible
  std::function<RatPoly(unsigned)> plus_count;   // default: count_dual_pairs
  static const CountFns& standard();
};

// Product over the degrees d appearing on each side of the multinomial
// C(count(d); [multiplicities of the blocks of degree d]).
RatPoly class_type_multiplier(const ClassType& t, const CountFns& fns = CountFns::standard());

}  // namespace guchar
