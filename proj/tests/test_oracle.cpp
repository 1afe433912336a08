#include "doctest.h"

#include "guchar/arith.hpp"
#include "guchar/euler.hpp"
#include "guchar/oracle.hpp"

using namespace guchar;

TEST_CASE("group orders") {
  CHECK(gu_order(1, Int(2)) == 3);
  CHECK(gu_order(1, Int(3)) == 4);
  CHECK(gu_order(2, Int(2)) == 18);
  CHECK(gu_order(2, Int(3)) == 96);
  CHECK(gu_order(3, Int(2)) == 648);
  CHECK(gu_order(3, Int(3)) == 24192);
  // the enumerated groups match the closed formula by construction,
  // independently recounted here
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned q : {2u, 3u}) {
      UnitaryGroup g(n, q, kDefaultOracleBudget);
      CHECK(Int(g.elements().size()) == gu_order(n, Int(q)));
    }
  UnitaryGroup g32(3, 2, kDefaultOracleBudget);
  CHECK(Int(g32.elements().size()) == 648);
}

TEST_CASE("groups behave as matrix groups") {
  UnitaryGroup g(2, 2, kDefaultOracleBudget);
  const Mat id = g.identity();
  CHECK(g.element_order(id) == 1);
  CHECK(g.det(id) == 1);
  // closure and unitarity of a few products
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) {
      Mat prod = g.multiply(g.elements()[i], g.elements()[j]);
      bool found = false;
      for (const Mat& e : g.elements())
        if (e == prod) {
          found = true;
          break;
        }
      CHECK(found);
    }
  // char poly of the identity over F_4 is (x + 1)^2 = x^2 + 1
  CHECK(g.char_poly(id) == std::vector<uint16_t>{1, 0, 1});
  // every group element preserves the form on the standard basis
  const Mat& e5 = g.elements()[5];
  Vec r0 = {e5.at(0, 0), e5.at(0, 1)};
  Vec r1 = {e5.at(1, 0), e5.at(1, 1)};
  CHECK(g.form(r0, r0) == g.gram().at(0, 0));
  CHECK(g.form(r0, r1) == g.gram().at(0, 1));
  CHECK(g.form(r1, r1) == g.gram().at(1, 1));
}

TEST_CASE("isotropic subspace posets") {
  UnitaryGroup g22(2, 2, kDefaultOracleBudget);
  CHECK(g22.subspaces().size() == 3);  // q + 1 isotropic lines
  CHECK(g22.poset().reduced_euler() == 2);

  UnitaryGroup g23(2, 3, kDefaultOracleBudget);
  CHECK(g23.subspaces().size() == 4);

  UnitaryGroup g32(3, 2, kDefaultOracleBudget);
  CHECK(g32.subspaces().size() == 9);  // q^3 + 1 lines, Witt index 1
  for (const auto& s : g32.subspaces()) CHECK(s.dim == 1);
  CHECK(g32.poset().reduced_euler() == 8);

  // the action permutes subspaces and respects the group operation
  for (uint32_t gi : {1u, 7u, 17u})
    for (uint32_t ui = 0; ui < 3; ++ui) CHECK(g22.act(gi, ui) < 3);
}

TEST_CASE("descent sums match the polynomial pipelines") {
  struct Case {
    unsigned n, q, rmax;
  };
  for (const Case& c : {Case{1, 2, 4}, Case{1, 3, 4}, Case{2, 2, 3}, Case{2, 3, 2}}) {
    for (unsigned r = 1; r <= c.rmax; ++r) {
      Int brute = chi_gu_bruteforce(c.n, c.q, r);
      Int formula = chi_gu_direct(c.n, r).eval(Int(c.q));
      CHECK_MESSAGE(brute == formula, "n=" << c.n << " q=" << c.q << " r=" << r);
    }
  }
  CHECK(chi_gu_bruteforce(3, 2, 2) == chi_gu_direct(3, 2).eval(Int(2)));
}

TEST_CASE("first level is the delta sequence") {
  CHECK(chi_gu_bruteforce(1, 2, 1) == 1);
  CHECK(chi_gu_bruteforce(2, 2, 1) == 0);
  CHECK(chi_gu_bruteforce(3, 2, 1) == 0);
  CHECK(chi_gu_bruteforce(1, 3, 1) == 1);
  CHECK(chi_gu_bruteforce(2, 3, 1) == 0);
}

TEST_CASE("p-primary descent matches the series") {
  CHECK(chi_gu_p_primary_bruteforce(1, 3, 2, 2) == p_primary_sequence(2, Int(3), 2, 1)[1]);
  CHECK(chi_gu_p_primary_bruteforce(2, 2, 2, 2) == p_primary_sequence(2, Int(2), 2, 2)[2]);
  CHECK(chi_gu_p_primary_bruteforce(1, 2, 2, 3) == p_primary_sequence(3, Int(2), 2, 1)[1]);
  CHECK(chi_gu_p_primary_bruteforce(1, 3, 2, 2) == 4);
  CHECK(chi_gu_p_primary_bruteforce(1, 2, 2, 3) == 3);
}

TEST_CASE("budget limits are enforced") {
  CHECK_THROWS_AS(chi_gu_bruteforce(3, 2, 2, Int(100)), OracleBudgetExceeded);
  CHECK_THROWS_AS(chi_gu_bruteforce(4, 3, 1), OracleBudgetExceeded);  // order 3 * 10^9
  CHECK_THROWS_AS((UnitaryGroup{3, 2, Int(700)}), OracleBudgetExceeded);
  CHECK_THROWS_AS(count_polys(2, 3, PolyFilter::All, Int(5)), OracleBudgetExceeded);
}

TEST_CASE("polynomial counting oracle") {
  for (unsigned q : {2u, 3u}) {
    Int qq = Int(q) * Int(q);
    for (unsigned m = 1; m <= 4; ++m) {
      // monic, nonzero constant term: (q^2 - 1) q^{2(m-1)}
      CHECK(count_polys(q, m, PolyFilter::All) == (qq - 1) * int_pow(qq, m - 1));
      CHECK(count_polys(q, m, PolyFilter::SelfDual) == selfdual_monic_count(m).eval(Int(q)));
      CHECK(count_polys(q, m, PolyFilter::Irreducible) ==
            count_irreducible(m).eval_int(qq));
      CHECK(count_polys(q, m, PolyFilter::IrreducibleDualPairs) ==
            count_dual_pairs(m).eval_int(Int(q)));
    }
    for (unsigned m = 1; m <= 5; ++m) {
      Int want = m % 2 ? count_selfdual_irreducible(m).eval_int(Int(q)) : Int(0);
      CHECK(count_polys(q, m, PolyFilter::IrreducibleSelfDual) == want);
    }
  }
}

TEST_CASE("q-regular class counting oracle") {
  CHECK(count_qregular_classes(1, 2) == 3);
  CHECK(count_qregular_classes(2, 2) == 6);
  CHECK(count_qregular_classes(2, 3) == 12);
  CHECK(count_qregular_classes(3, 2) == 12);
  for (unsigned n = 1; n <= 2; ++n)
    for (unsigned q : {2u, 3u})
      CHECK(count_qregular_classes(n, q) == selfdual_monic_count(n).eval(Int(q)));
}
