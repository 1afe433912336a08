#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "guchar/arith.hpp"
#include "guchar/class_types.hpp"
#include "guchar/euler.hpp"
#include "guchar/oracle.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace guchar;

namespace {

// arbitrary-precision integers cross the boundary as python ints
py::object to_pyint(const Int& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(int_str(v).c_str(), nullptr, 10));
}

Int from_pyint(const py::int_& v) { return int_parse(py::str(v)); }

py::list intpoly_coeffs(const IntPoly& p) {
  py::list out;
  for (const Int& c : p.coeffs()) out.append(to_pyint(c));
  return out;
}

PolyFilter filter_from_name(const std::string& name) {
  if (name == "all") return PolyFilter::All;
  if (name == "selfdual") return PolyFilter::SelfDual;
  if (name == "irreducible") return PolyFilter::Irreducible;
  if (name == "irreducible-selfdual") return PolyFilter::IrreducibleSelfDual;
  if (name == "irreducible-dual-pairs") return PolyFilter::IrreducibleDualPairs;
  throw std::invalid_argument("unknown polynomial filter: " + name);
}

py::dict classtype_dict(const ClassType& t) {
  auto side = [](const std::vector<ClassEntry>& s) {
    py::list out;
    for (const ClassEntry& e : s) out.append(py::make_tuple(e.m, e.d, e.e));
    return out;
  };
  py::dict d;
  d["minus"] = side(t.minus);
  d["plus"] = side(t.plus);
  return d;
}

}  // namespace

PYBIND11_MODULE(_guchar, m) {
  m.doc() = "exact equivariant reduced Euler characteristics of unitary groups";

  m.def(
      "chi_gu", [](unsigned n, unsigned r) { return intpoly_coeffs(chi_gu_direct(n, r)); },
      py::arg("n"), py::arg("r"),
      "coefficients of -chi_r(GU(n,q)) as a polynomial in q, low degree first");
  m.def(
      "chi_gl", [](unsigned n, unsigned r) { return intpoly_coeffs(chi_gl_direct(n, r)); },
      py::arg("n"), py::arg("r"),
      "coefficients of chi_r(GL(n,q)) as a polynomial in q, low degree first");
  m.def(
      "chi_gu_at",
      [](unsigned n, unsigned r, const py::int_& q) {
        return to_pyint(chi_gu_direct(n, r).eval(from_pyint(q)));
      },
      py::arg("n"), py::arg("r"), py::arg("q"), "-chi_r(GU(n,q)) at an integer q");
  m.def(
      "p_primary",
      [](unsigned p, const py::int_& q, unsigned r, unsigned nmax) {
        py::list out;
        for (const Int& v : p_primary_sequence(p, from_pyint(q), r, nmax)) out.append(to_pyint(v));
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("nmax"),
      "p-primary sequence -chi^p_r(GU(n,q)) for n = 0..nmax (entry 0 is 1)");
  m.def(
      "gu_order",
      [](unsigned n, const py::int_& q) { return to_pyint(gu_order(n, from_pyint(q))); },
      py::arg("n"), py::arg("q"), "|GU(n,q)|");
  m.def(
      "selfdual_monic_count",
      [](unsigned m_) { return intpoly_coeffs(selfdual_monic_count(m_)); }, py::arg("m"),
      "coefficients of the self-dual monic count q^m + q^{m-1}");
  m.def(
      "class_types",
      [](unsigned n) {
        py::list out;
        for (const ClassType& t : enumerate_class_types(n)) out.append(classtype_dict(t));
        return out;
      },
      py::arg("n"), "all class types of weight n as {'minus': [(m,d,e)], 'plus': [...]}");
  m.def(
      "verify",
      [](unsigned n_max, unsigned r_max, unsigned order) {
        py::list out;
        for (const CheckResult& c : verify_all(n_max, r_max, order)) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("n_max") = 6, py::arg("r_max") = 5, py::arg("order") = 8,
      "run every consistency check, returning one record per check");
  m.def(
      "chi_gu_bruteforce",
      [](unsigned n, unsigned q, unsigned r, const py::int_& budget) {
        return to_pyint(chi_gu_bruteforce(n, q, r, from_pyint(budget)));
      },
      py::arg("n"), py::arg("q"), py::arg("r"), py::arg("budget") = py::int_(1000000),
      "-chi_r(GU(n,q)) by explicit descent over the matrix group");
  m.def(
      "chi_gu_p_primary_bruteforce",
      [](unsigned n, unsigned q, unsigned r, unsigned p, const py::int_& budget) {
        return to_pyint(chi_gu_p_primary_bruteforce(n, q, r, p, from_pyint(budget)));
      },
      py::arg("n"), py::arg("q"), py::arg("r"), py::arg("p"),
      py::arg("budget") = py::int_(1000000));
  m.def(
      "count_polys",
      [](unsigned q, unsigned m_, const std::string& filter, const py::int_& budget) {
        return to_pyint(count_polys(q, m_, filter_from_name(filter), from_pyint(budget)));
      },
      py::arg("q"), py::arg("m"), py::arg("filter") = "all",
      py::arg("budget") = py::int_(1000000),
      "count monic polynomials with nonzero constant term over the quadratic extension");
  m.def(
      "count_qregular_classes",
      [](unsigned n, unsigned q, const py::int_& budget) {
        return to_pyint(count_qregular_classes(n, q, from_pyint(budget)));
      },
      py::arg("n"), py::arg("q"), py::arg("budget") = py::int_(1000000));

  py::register_exception<NonIntegralError>(m, "NonIntegralError");
  py::register_exception<OracleBudgetExceeded>(m, "OracleBudgetExceeded");
}
