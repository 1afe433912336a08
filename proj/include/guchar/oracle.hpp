#pragma once

#include "guchar/unitary.hpp"

namespace guchar {

inline const Int kDefaultOracleBudget = 1000000;

// -chi_r(GU(n,q)) summed over commuting r-tuples by centralizer descent:
// the outer coordinate runs over the group, inner coordinates over iterated
// centralizers, and each tuple contributes the reduced Euler characteristic
// of its common fixed subposet. The normalized sum is checked to be an
// integer. Throws OracleBudgetExceeded when |GU(n,q)| exceeds the budget.
Int chi_gu_bruteforce(unsigned n, unsigned q, unsigned r, const Int& budget = kDefaultOracleBudget);

// p-primary variant: the first coordinate is unrestricted, the remaining
// r-1 coordinates range over elements of p-power order.
Int chi_gu_p_primary_bruteforce(unsigned n, unsigned q, unsigned r, unsigned p,
                                const Int& budget = kDefaultOracleBudget);

enum class PolyFilter { All, SelfDual, Irreducible, IrreducibleSelfDual, IrreducibleDualPairs };

// Count monic degree-m polynomials with nonzero constant term over F_{q^2}
// matching the filter, by direct enumeration. Self-duality is decided by the
// coefficient test (norm-1 constant term and conjugate-reversal symmetry),
// irreducibility by trial division. Dual pairs are counted once per pair.
Int count_polys(unsigned q, unsigned m, PolyFilter filter, const Int& budget = kDefaultOracleBudget);

// number of distinct characteristic polynomials of elements of GU(n,q) whose
// order is prime to the characteristic
Int count_qregular_classes(unsigned n, unsigned q, const Int& budget = kDefaultOracleBudget);

}  // namespace guchar
