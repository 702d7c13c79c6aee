#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clsum/clcheck.hpp"
#include "clsum/errors.hpp"
#include "clsum/expr.hpp"
#include "clsum/identities.hpp"
#include "clsum/oracle.hpp"
#include "clsum/posets.hpp"
#include "clsum/report.hpp"
#include "clsum/table.hpp"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kGuard = 2, kInvariant = 3 };

struct Common {
  std::string format = "md";
  std::string out;
  long max_degree = clsum::kDefaultMaxDegree;
  unsigned jobs = 0;
};

clsum::Format parse_format(const std::string& f) {
  if (f == "csv") return clsum::Format::Csv;
  if (f == "json") return clsum::Format::Json;
  return clsum::Format::Markdown;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open " + c.out + " for writing");
  f << text;
}

// "Adual:0..20"
clsum::Axis parse_axis(const std::string& text, const std::string& label) {
  const auto colon = text.find(':');
  const auto dots = text.find("..");
  if (colon == std::string::npos || dots == std::string::npos || dots < colon) {
    throw std::invalid_argument("axis must look like FAMILY:FIRST..LAST, got '" + text + "'");
  }
  const auto family = clsum::family_from_name(text.substr(0, colon));
  if (!family) throw std::invalid_argument("unknown family in axis '" + text + "'");
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw std::invalid_argument("bad integer in axis '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  return clsum::Axis{*family, to_int(sv.substr(colon + 1, dots - colon - 1)), to_int(sv.substr(dots + 2)),
                     label};
}

int run_eval(const Common& c, const std::string& text) {
  const clsum::Report r = clsum::evaluate(clsum::parse(text), c.max_degree);
  emit(c, c.format == "json" ? clsum::to_json(r) + "\n" : clsum::to_text(r));
  return kOk;
}

struct TableArgs {
  std::string preset;
  std::string rows, cols, prefix;
  std::string row_label = "row", col_label = "col";
  bool column_first = false;
  long max_cells = 10000;
};

int run_table(const Common& c, const TableArgs& a) {
  clsum::TableSpec spec;
  if (a.preset == "table1") {
    spec = clsum::table1_spec();
  } else if (a.preset == "table2") {
    spec = clsum::table2_spec();
  } else if (!a.preset.empty()) {
    throw std::invalid_argument("unknown preset '" + a.preset + "' (table1, table2)");
  } else {
    if (a.rows.empty()) throw std::invalid_argument("table needs --preset or --rows");
    spec.rows = parse_axis(a.rows, a.row_label);
    if (!a.cols.empty()) spec.cols = parse_axis(a.cols, a.col_label);
    if (!a.prefix.empty()) spec.prefix = clsum::parse(a.prefix);
    spec.column_first = a.column_first;
    spec.title = "CL-ness sweep";
  }
  spec.max_cells = a.max_cells;
  spec.max_degree = c.max_degree;
  spec.jobs = c.jobs;
  emit(c, clsum::render(clsum::compute_table(spec), parse_format(c.format)));
  return kOk;
}

int run_identities(const Common& c, const std::vector<std::string>& names, int from, int to, int series_k) {
  std::vector<clsum::IdentityId> ids;
  if (names.empty() || (names.size() == 1 && names.front() == "all")) {
    ids.assign(clsum::kAllIdentities.begin(), clsum::kAllIdentities.end());
  } else {
    for (const auto& n : names) {
      const auto id = clsum::identity_from_name(n);
      if (!id) throw std::invalid_argument("unknown identity '" + n + "'");
      ids.push_back(*id);
    }
  }
  if (from < 1 || to < from) throw std::invalid_argument("need 1 <= --from <= --to");

  bool all_ok = true;
  Json j = Json::array();
  std::ostringstream text;
  for (const auto id : ids) {
    int passed = 0;
    std::vector<int> failed;
    for (int n = from; n <= to; ++n) {
      bool ok = clsum::verify(id, n).holds;
      if (ok && series_k > 0) ok = clsum::verify_series_form(id, n, series_k);
      ok ? ++passed : (failed.push_back(n), 0);
    }
    all_ok = all_ok && failed.empty();
    j.push_back(Json{{"id", clsum::identity_name(id)},
                     {"formula", clsum::identity_formula(id)},
                     {"from", from},
                     {"to", to},
                     {"passed", passed},
                     {"failed", failed}});
    text << (failed.empty() ? "PASS " : "FAIL ") << clsum::identity_name(id) << "  n=" << from << ".." << to
         << "  " << passed << "/" << (to - from + 1) << "  " << clsum::identity_formula(id) << '\n';
  }
  emit(c, c.format == "json" ? j.dump(2) + "\n" : text.str());
  return all_ok ? kOk : kInvariant;
}

int run_oracle(const Common& c, const std::string& text, int k_max) {
  const clsum::Expr e = clsum::parse(text);
  const auto rows = clsum::oracle_compare(e, k_max);
  bool ok = true;
  Json j = Json::array();
  std::ostringstream os;
  os << "expr: " << clsum::to_string(e) << '\n' << "k  counted  predicted\n";
  for (const auto& r : rows) {
    const bool match = r.counted == r.predicted;
    ok = ok && match;
    j.push_back(Json{{"k", r.k},
                     {"counted", r.counted.get_str()},
                     {"predicted", r.predicted.get_str()},
                     {"match", match}});
    os << r.k << "  " << r.counted << "  " << r.predicted << (match ? "" : "  MISMATCH") << '\n';
  }
  emit(c, c.format == "json" ? j.dump(2) + "\n" : os.str());
  return ok ? kOk : kInvariant;
}

int run_interlace(const Common& c, const std::string& f, const std::string& g) {
  const auto rf = clsum::evaluate(clsum::parse(f), c.max_degree, false);
  const auto rg = clsum::evaluate(clsum::parse(g), c.max_degree, false);
  const bool v = clsum::r_interlacing(rf.ehrhart, rg.ehrhart);
  if (c.format == "json") {
    emit(c, Json{{"f", rf.expr}, {"g", rg.expr}, {"r_interlacing", v}}.dump(2) + "\n");
  } else {
    emit(c, rf.expr + " vs " + rg.expr + ": " + (v ? "R-interlacing" : "not R-interlacing") + "\n");
  }
  return kOk;
}

int run_posets(const Common& c, const std::string& file, int k_max) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open " + file);
  const clsum::Poset p = clsum::parse_poset(in);
  Json j;
  std::ostringstream os;
  j["size"] = p.size();
  j["naturally_labelled"] = p.is_naturally_labelled();
  os << "size: " << p.size() << "\nnaturally labelled: " << (p.is_naturally_labelled() ? "yes" : "no") << '\n';
  if (p.is_naturally_labelled()) {
    const auto w = clsum::w_polynomial(p);
    j["w_polynomial"] = w.to_string("t");
    os << "W(P): " << w.to_string("t") << '\n';
  }
  Json counts = Json::array();
  os << "k  order  chain\n";
  for (int k = 0; k <= k_max; ++k) {
    const auto o = clsum::order_polytope_count(p, k);
    const auto ch = clsum::chain_polytope_count(p, k);
    counts.push_back(Json{{"k", k}, {"order", o.get_str()}, {"chain", ch.get_str()}});
    os << k << "  " << o << "  " << ch << '\n';
  }
  j["counts"] = counts;
  emit(c, c.format == "json" ? j.dump(2) + "\n" : os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehrhart polynomials and canonical-line checks for free sums of reflexive polytopes"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
    sub->add_option("--out", common.out, "Write output to FILE instead of stdout");
    sub->add_option("--max-degree", common.max_degree, "Dimension guard")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", common.jobs, "Worker threads (0 = all cores)");
  };

  std::string expr_text;
  auto* eval = app.add_subcommand("eval", "δ-vector, Ehrhart polynomial and CL verdict of an expression");
  eval->add_option("expr", expr_text, "e.g. \"Adual(2) (+) Adual(1)^3\"")->required();
  add_common(eval);

  TableArgs targs;
  auto* table = app.add_subcommand("table", "CL grid over one or two swept summands");
  table->add_option("--preset", targs.preset, "table1 (Adual x Adual) or table2 (A x A)");
  table->add_option("--rows", targs.rows, "Row axis FAMILY:FIRST..LAST (0 omits the summand)");
  table->add_option("--cols", targs.cols, "Column axis FAMILY:FIRST..LAST");
  table->add_option("--row-label", targs.row_label);
  table->add_option("--col-label", targs.col_label);
  table->add_option("--prefix", targs.prefix, "Fixed summands placed before the swept ones");
  table->add_flag("--column-first", targs.column_first, "Place the column summand before the row summand");
  table->add_option("--max-cells", targs.max_cells, "Cell-count guard");
  add_common(table);

  std::vector<std::string> id_names;
  int id_from = 1, id_to = 30, series_k = 20;
  auto* idents = app.add_subcommand("identities", "Verify the polynomial identities");
  idents->add_option("names", id_names, "Identity names or 'all'");
  idents->add_option("--from", id_from);
  idents->add_option("--to", id_to);
  idents->add_option("--series-k", series_k, "Series coefficients to compare (0 skips)");
  add_common(idents);

  int oracle_k = 3;
  auto* oracle = app.add_subcommand("oracle", "Brute-force lattice counts against the δ prediction");
  oracle->add_option("expr", expr_text)->required();
  oracle->add_option("--k-max", oracle_k);
  add_common(oracle);

  std::string g_text;
  auto* inter = app.add_subcommand("interlace", "R-interlacing of E_f and E_g (dim f = dim g + 1)");
  inter->add_option("f", expr_text)->required();
  inter->add_option("g", g_text)->required();
  add_common(inter);

  std::string poset_file;
  int poset_k = 3;
  auto* posets = app.add_subcommand("posets", "W(P) and order/chain polytope counts of a poset file");
  posets->add_option("file", poset_file)->required();
  posets->add_option("--k-max", poset_k);
  add_common(posets);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return run_eval(common, expr_text);
    if (*table) return run_table(common, targs);
    if (*idents) return run_identities(common, id_names, id_from, id_to, series_k);
    if (*oracle) return run_oracle(common, expr_text, oracle_k);
    if (*inter) return run_interlace(common, expr_text, g_text);
    if (*posets) return run_posets(common, poset_file, poset_k);
  } catch (const clsum::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const clsum::SymmetryViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::logic_error& e) {
    // ParseError is a runtime_error; invalid_argument, domain errors from bad input land here.
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const clsum::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
