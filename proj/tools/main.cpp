#include "guchar/arith.hpp"
#include "guchar/euler.hpp"
#include "guchar/oracle.hpp"
#include "guchar/serialize.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace guchar;
using nlohmann::json;

struct Range {
  unsigned lo = 1, hi = 1;
};

Range parse_range(const std::string& s) {
  auto bad = [&]() { throw std::invalid_argument("bad range '" + s + "', expected A or A..B"); };
  Range r;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = static_cast<unsigned>(std::stoul(s));
    } else {
      r.lo = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
      r.hi = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    bad();
  }
  if (r.lo < 1 || r.hi < r.lo) bad();
  return r;
}

Int default_budget() {
  if (const char* env = std::getenv("GUCHAR_ORACLE_BUDGET")) return int_parse(env);
  return kDefaultOracleBudget;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output path " + out_path);
  f << text;
}

struct Grid {
  std::string corner;
  std::vector<std::string> col_names;
  std::vector<std::string> row_names;
  std::vector<std::vector<std::string>> cells;
  size_t rows() const { return cells.size(); }
};

std::string render_markdown(const Grid& g) {
  std::ostringstream os;
  os << "| " << g.corner;
  for (const auto& c : g.col_names) os << " | " << c;
  os << " |\n|";
  for (size_t i = 0; i <= g.col_names.size(); ++i) os << " --- |";
  os << "\n";
  for (size_t r = 0; r < g.rows(); ++r) {
    os << "| " << g.row_names[r];
    for (const auto& cell : g.cells[r]) os << " | " << cell;
    os << " |\n";
  }
  return os.str();
}

std::string render_csv(const Grid& g) {
  std::ostringstream os;
  os << g.corner;
  for (const auto& c : g.col_names) os << "," << c;
  os << "\n";
  for (size_t r = 0; r < g.rows(); ++r) {
    os << g.row_names[r];
    for (const auto& cell : g.cells[r]) os << "," << cell;
    os << "\n";
  }
  return os.str();
}

struct TableConfig {
  std::string q_str;
  std::string r_range = "1..6";
  std::string n_range = "1..6";
  bool poly = false;
  bool reduced = false;
};

struct PprimaryConfig {
  unsigned p = 2;
  std::string q_str;
  std::string r_range = "2";
  std::string n_range = "1..6";
};

struct VerifyConfig {
  unsigned n_max = 6;
  unsigned r_max = 5;
  unsigned order = 8;
  bool mutate = false;
};

struct OracleConfig {
  unsigned n = 0, r = 0, p = 0, m = 0;
  std::string q_str;
  bool selfdual = false;
  bool qregular = false;
  std::string budget_str;
};

struct Common {
  std::string format = "markdown";
  std::string out;
  bool timings = false;
};

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

const CountFns& mutated_counts() {
  static const CountFns fns{
      [](unsigned d) { return count_selfdual_irreducible(d); },
      [](unsigned d) {
        RatPoly p = count_dual_pairs(d);
        if (d == 1) p += RatPoly::constant(1);
        return p;
      },
  };
  return fns;
}

int cmd_table(const TableConfig& cfg, const Common& common) {
  Range rr = parse_range(cfg.r_range);
  Range nr = parse_range(cfg.n_range);
  if (!cfg.poly && cfg.q_str.empty())
    throw std::invalid_argument("numeric tables need --q; use --poly for polynomial output");
  Int q = 0;
  if (!cfg.q_str.empty()) q = int_parse(cfg.q_str);

  Grid g;
  g.corner = "r";
  for (unsigned n = nr.lo; n <= nr.hi; ++n) g.col_names.push_back("n=" + std::to_string(n));
  json jrows = json::array();
  for (unsigned r = rr.lo; r <= rr.hi; ++r) {
    g.row_names.push_back(std::to_string(r));
    std::vector<std::string> row;
    json jrow = json::array();
    for (unsigned n = nr.lo; n <= nr.hi; ++n) {
      RatPoly value = chi_gu_direct(n, r).to_ratpoly();
      if (cfg.reduced) {
        RatPoly divisor = RatPoly(std::vector<Rat>{1, 1}).pow(r - 1);
        auto quotient = value.divide_exact(divisor);
        if (!quotient)
          throw std::logic_error("value at n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                                 " is not divisible by (q+1)^" + std::to_string(r - 1));
        value = *quotient;
      }
      IntPoly cell = IntPoly::from_ratpoly(value, "table cell");
      if (cfg.poly) {
        row.push_back(cell.to_string());
        jrow.push_back(poly_to_json(cell));
      } else {
        row.push_back(int_str(cell.eval(q)));
        jrow.push_back(int_str(cell.eval(q)));
      }
    }
    g.cells.push_back(row);
    jrows.push_back({{"r", r}, {"cells", jrow}});
  }

  std::string text;
  if (common.format == "json") {
    json j{{"command", "table"},
           {"poly", cfg.poly},
           {"reduced", cfg.reduced},
           {"r", {rr.lo, rr.hi}},
           {"n", {nr.lo, nr.hi}},
           {"rows", jrows}};
    if (!cfg.q_str.empty()) j["q"] = int_str(q);
    text = j.dump(2) + "\n";
  } else if (common.format == "csv") {
    text = render_csv(g);
  } else {
    text = render_markdown(g);
  }
  emit(text, common.out);
  return 0;
}

int cmd_pprimary(const PprimaryConfig& cfg, const Common& common) {
  Range rr = parse_range(cfg.r_range);
  Range nr = parse_range(cfg.n_range);
  if (cfg.q_str.empty()) throw std::invalid_argument("pprimary needs --q");
  Int q = int_parse(cfg.q_str);

  Grid g;
  g.corner = "r";
  for (unsigned n = nr.lo; n <= nr.hi; ++n) g.col_names.push_back("n=" + std::to_string(n));
  json jrows = json::array();
  for (unsigned r = rr.lo; r <= rr.hi; ++r) {
    std::vector<Int> seq = p_primary_sequence(cfg.p, q, r, nr.hi);
    g.row_names.push_back(std::to_string(r));
    std::vector<std::string> row;
    json jrow = json::array();
    for (unsigned n = nr.lo; n <= nr.hi; ++n) {
      row.push_back(int_str(seq[n]));
      jrow.push_back(int_str(seq[n]));
    }
    g.cells.push_back(row);
    jrows.push_back({{"r", r}, {"cells", jrow}});
  }

  std::string text;
  if (common.format == "json") {
    json j{{"command", "pprimary"}, {"p", cfg.p},           {"q", int_str(q)},
           {"r", {rr.lo, rr.hi}},   {"n", {nr.lo, nr.hi}},  {"rows", jrows}};
    text = j.dump(2) + "\n";
  } else if (common.format == "csv") {
    text = render_csv(g);
  } else {
    text = render_markdown(g);
  }
  emit(text, common.out);
  return 0;
}

int cmd_verify(const VerifyConfig& cfg, const Common& common) {
  auto start = std::chrono::steady_clock::now();
  const CountFns& fns = cfg.mutate ? mutated_counts() : CountFns::standard();
  std::vector<CheckResult> checks = verify_all(cfg.n_max, cfg.r_max, cfg.order, fns);
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;

  std::string text;
  if (common.format == "json") {
    json jchecks = json::array();
    for (const auto& c : checks)
      jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json j{{"command", "verify"}, {"n_max", cfg.n_max}, {"r_max", cfg.r_max},
           {"order", cfg.order},  {"mutate", cfg.mutate}, {"pass", all},
           {"checks", jchecks}};
    if (common.timings) j["elapsed_ms"] = elapsed_ms(start);
    text = j.dump(2) + "\n";
  } else if (common.format == "csv") {
    std::ostringstream os;
    os << "name,pass,detail\n";
    for (const auto& c : checks)
      os << c.name << "," << (c.pass ? "pass" : "FAIL") << "," << c.detail << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    os << "| check | status | detail |\n| --- | --- | --- |\n";
    for (const auto& c : checks)
      os << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.detail
         << " |\n";
    os << "\n" << (all ? "all checks passed" : "some checks FAILED") << "\n";
    if (common.timings) os << "elapsed: " << elapsed_ms(start) << " ms\n";
    text = os.str();
  }
  emit(text, common.out);
  return all ? 0 : 1;
}

int cmd_oracle(const OracleConfig& cfg, const Common& common) {
  auto start = std::chrono::steady_clock::now();
  Int budget = cfg.budget_str.empty() ? default_budget() : int_parse(cfg.budget_str);
  json report{{"command", "oracle"}};
  bool all = true;
  auto record = [&](const std::string& name, const Int& brute, const Int& formula, json& into) {
    bool ok = brute == formula;
    all = all && ok;
    into.push_back({{"check", name},
                    {"brute", int_str(brute)},
                    {"formula", int_str(formula)},
                    {"pass", ok}});
  };
  json comparisons = json::array();

  if (cfg.selfdual) {
    if (cfg.q_str.empty() || cfg.m == 0)
      throw std::invalid_argument("oracle --selfdual needs --q and --m");
    Int q = int_parse(cfg.q_str);
    if (q < 2) throw std::invalid_argument("oracle --selfdual needs an actual prime power q");
    unsigned qu = static_cast<unsigned>(q);
    unsigned m = cfg.m;
    report["q"] = int_str(q);
    report["m"] = m;
    record("monic-nonzero-constant", count_polys(qu, m, PolyFilter::All, budget),
           int_pow(q, 2 * m) - int_pow(q, 2 * m - 2), comparisons);
    record("selfdual-monic", count_polys(qu, m, PolyFilter::SelfDual, budget),
           selfdual_monic_count(m).eval(q), comparisons);
    record("irreducible-selfdual", count_polys(qu, m, PolyFilter::IrreducibleSelfDual, budget),
           count_selfdual_irreducible(m).is_zero() ? Int(0)
                                                   : count_selfdual_irreducible(m).eval_int(q),
           comparisons);
    record("irreducible-dual-pairs", count_polys(qu, m, PolyFilter::IrreducibleDualPairs, budget),
           count_dual_pairs(m).eval_int(q), comparisons);
  } else if (cfg.qregular) {
    if (cfg.q_str.empty() || cfg.n == 0)
      throw std::invalid_argument("oracle --qregular needs --q and --n");
    Int q = int_parse(cfg.q_str);
    if (q < 2) throw std::invalid_argument("oracle --qregular needs an actual prime power q");
    unsigned qu = static_cast<unsigned>(q);
    report["q"] = int_str(q);
    report["n"] = cfg.n;
    record("qregular-classes", count_qregular_classes(cfg.n, qu, budget),
           selfdual_monic_count(cfg.n).eval(q), comparisons);
  } else {
    if (cfg.q_str.empty() || cfg.n == 0)
      throw std::invalid_argument("oracle needs --q and --n");
    Int q = int_parse(cfg.q_str);
    if (q < 2) throw std::invalid_argument("the oracle needs an actual prime power q");
    unsigned qu = static_cast<unsigned>(q);
    report["q"] = int_str(q);
    report["n"] = cfg.n;
    if (cfg.r == 0) {
      UnitaryGroup group(cfg.n, qu, budget);
      record("group-order", Int(group.elements().size()), gu_order(cfg.n, q), comparisons);
      report["isotropic_subspaces"] = group.subspaces().size();
    } else if (cfg.p == 0) {
      report["r"] = cfg.r;
      record("chi", chi_gu_bruteforce(cfg.n, qu, cfg.r, budget),
             chi_gu_direct(cfg.n, cfg.r).eval(q), comparisons);
    } else {
      report["r"] = cfg.r;
      report["p"] = cfg.p;
      record("chi-p-primary", chi_gu_p_primary_bruteforce(cfg.n, qu, cfg.r, cfg.p, budget),
             p_primary_sequence(cfg.p, q, cfg.r, cfg.n)[cfg.n], comparisons);
    }
  }
  report["comparisons"] = comparisons;
  report["pass"] = all;
  if (common.timings) report["elapsed_ms"] = elapsed_ms(start);

  std::string text;
  if (common.format == "json") {
    text = report.dump(2) + "\n";
  } else if (common.format == "csv") {
    std::ostringstream os;
    os << "check,brute,formula,pass\n";
    for (const auto& c : comparisons)
      os << c["check"].get<std::string>() << "," << c["brute"].get<std::string>() << ","
         << c["formula"].get<std::string>() << "," << (c["pass"].get<bool>() ? "pass" : "FAIL")
         << "\n";
    text = os.str();
  } else {
    std::ostringstream os;
    os << "| check | brute | formula | status |\n| --- | --- | --- | --- |\n";
    for (const auto& c : comparisons)
      os << "| " << c["check"].get<std::string>() << " | " << c["brute"].get<std::string>()
         << " | " << c["formula"].get<std::string>() << " | "
         << (c["pass"].get<bool>() ? "pass" : "FAIL") << " |\n";
    os << "\n" << (all ? "oracle agrees" : "oracle MISMATCH") << "\n";
    if (common.timings) os << "elapsed: " << elapsed_ms(start) << " ms\n";
    text = os.str();
  }
  emit(text, common.out);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant Euler characteristics for unitary groups"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"markdown", "csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", common.out, "write output to a file instead of stdout");
    sub->add_flag("--timings", common.timings, "include wall-clock timings in reports");
  };

  TableConfig table_cfg;
  CLI::App* table = app.add_subcommand("table", "tables of -chi_r(GU(n,q))");
  add_common(table);
  table->add_option("--q", table_cfg.q_str, "prime power (or any integer, formally)");
  table->add_option("--r", table_cfg.r_range, "level or range A..B")->capture_default_str();
  table->add_option("--n", table_cfg.n_range, "dimension or range A..B")->capture_default_str();
  table->add_flag("--poly", table_cfg.poly, "print polynomials in q instead of values");
  table->add_flag("--reduced", table_cfg.reduced, "divide by (q+1)^{r-1}");

  PprimaryConfig pp_cfg;
  CLI::App* pprimary = app.add_subcommand("pprimary", "p-primary tables -chi^p_r(GU(n,q))");
  add_common(pprimary);
  pprimary->add_option("--p", pp_cfg.p, "prime")->required();
  pprimary->add_option("--q", pp_cfg.q_str, "integer with |q| >= 2")->required();
  pprimary->add_option("--r", pp_cfg.r_range, "level or range A..B")->capture_default_str();
  pprimary->add_option("--n", pp_cfg.n_range, "dimension or range A..B")->capture_default_str();

  VerifyConfig verify_cfg;
  CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
  add_common(verify);
  verify->add_option("--n-max", verify_cfg.n_max, "largest dimension")->capture_default_str();
  verify->add_option("--r-max", verify_cfg.r_max, "largest level")->capture_default_str();
  verify->add_option("--order", verify_cfg.order, "series truncation order")
      ->capture_default_str();
  verify->add_flag("--mutate", verify_cfg.mutate,
                   "perturb the dual-pair count to demonstrate failure detection");

  OracleConfig oracle_cfg;
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  add_common(oracle);
  oracle->add_option("--n", oracle_cfg.n, "dimension");
  oracle->add_option("--q", oracle_cfg.q_str, "prime power");
  oracle->add_option("--r", oracle_cfg.r, "level (omit to only check the group order)");
  oracle->add_option("--p", oracle_cfg.p, "prime for the p-primary variant");
  oracle->add_option("--m", oracle_cfg.m, "polynomial degree for --selfdual");
  oracle->add_flag("--selfdual", oracle_cfg.selfdual, "count polynomials over F_{q^2}");
  oracle->add_flag("--qregular", oracle_cfg.qregular, "count q-regular classes");
  oracle->add_option("--budget", oracle_cfg.budget_str,
                     "work budget (default: GUCHAR_ORACLE_BUDGET or 1000000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return cmd_table(table_cfg, common);
    if (pprimary->parsed()) return cmd_pprimary(pp_cfg, common);
    if (verify->parsed()) return cmd_verify(verify_cfg, common);
    if (oracle->parsed()) return cmd_oracle(oracle_cfg, common);
  } catch (const guchar::OracleBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
