// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clsum/clcheck.hpp"
#include "clsum/delta.hpp"
#include "clsum/ehrhart.hpp"
#include "clsum/expr.hpp"
#include "clsum/identities.hpp"
#include "clsum/lattice.hpp"
#include "clsum/oracle.hpp"
#include "clsum/posets.hpp"
#include "clsum/report.hpp"
#include "clsum/table.hpp"
#include "fixtures.hpp"
#include "float_roots.hpp"
#include "generators.hpp"

using namespace clsum;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 20) notes.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

std::string run_command(const std::string& cmd, int* status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  *status = pclose(pipe);
  return out;
}

bool cl(const std::string& text) { return evaluate_cl(parse(text)); }

// ---------------------------------------------------------------------------

Outcome table1() {
  Outcome o;
  const auto t0 = Clock::now();
  const TableResult t = compute_table(table1_spec());
  const double elapsed = seconds_since(t0);
  for (int m = 0; m <= 20; ++m) {
    for (int n = 0; n <= 20; ++n) {
      const bool want = std::min(m, n) <= 1 || m + n <= 7;
      o.require(t.at(m, n).cl == want, "cell (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  }
  o.require(elapsed <= 300, "runtime " + std::to_string(elapsed) + " s");
  o.notes.insert(o.notes.begin(), "441 cells in " + std::to_string(elapsed) + " s");
  return o;
}

Outcome table2() {
  Outcome o;
  const TableResult t = compute_table(table2_spec());
  const auto fixture = fixtures::table2();
  o.require(fixture.size() == 21, "fixture rows");
  int mismatches = 0;
  for (int n = 0; n <= 20; ++n) {
    for (int m = 0; m <= 20; ++m) {
      const bool want = fixture[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
      if (t.at(n, m).cl != want) {
        ++mismatches;
        o.require(false, "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
      }
    }
  }
  o.require(!t.at(2, 14).cl, "anchor (14,2) should be not CL");
  o.require(t.at(3, 20).cl, "anchor (20,3) should be CL");
  for (int m = 9; m <= 19; ++m) o.require(!t.at(3, m).cl, "anchor (" + std::to_string(m) + ",3)");
  o.notes.insert(o.notes.begin(), std::to_string(441 - mismatches) + "/441 cells match");
  return o;
}

Outcome table3() {
  Outcome o;
  const auto rows = fixtures::table3();
  o.require(rows.size() == 21, "expected 21 fixture rows");
  for (const auto& row : rows) {
    const std::string label = "(" + std::to_string(row.m) + "," + std::to_string(row.n) + ")";
    const DeltaVector d = free_sum(delta_A_dual(row.m), delta_A_dual(row.n));
    const EhrhartPolynomial e = from_delta(d);
    if (d.coefficients() != row.delta) {
      o.require(false, label + " delta printed " + join(row.delta) + " computed " + join(d.coefficients()));
    }
    const Polynomial printed(row.ehrhart);
    if (e.polynomial() != printed) {
      o.require(false, label + " E printed " + printed.to_string("x") + " computed " + e.polynomial().to_string("x"));
    }
    o.require(e(Rational(1)) == Rational(Integer(d.dimension() + 1) + d[1]), label + " E(1) consistency");
    o.require(is_cl(e).is_cl == row.cl, label + " CL verdict");
  }
  const auto e77 = from_delta(free_sum(delta_A_dual(7), delta_A_dual(7)));
  o.require(e77(Rational(1)) == 509, "(7,7): E(1) = 509");
  return o;
}

Outcome identities() {
  Outcome o;
  const auto t0 = Clock::now();
  int checked = 0;
  for (const auto id : kAllIdentities) {
    for (int n = 1; n <= 30; ++n) {
      const auto r = verify(id, n);
      o.require(r.holds && r.residual.is_zero(),
                std::string(identity_name(id)) + " n=" + std::to_string(n) + " residual " + r.residual.to_string("k"));
      o.require(verify_series_form(id, n, 20),
                std::string(identity_name(id)) + " n=" + std::to_string(n) + " series form");
      ++checked;
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed <= 60, "runtime " + std::to_string(elapsed) + " s");
  o.notes.insert(o.notes.begin(), std::to_string(checked) + " instances in " + std::to_string(elapsed) + " s");
  return o;
}

HRep dual_hrep(const VRep& q) {
  HRep h;
  h.dimension = q.dimension;
  h.normals = q.vertices;
  for (const auto& v : dual_vertices(q).vertices) {
    for (long c : v) h.box = std::max(h.box, std::labs(c));
  }
  return h;
}

Outcome oracle() {
  Outcome o;
  for (int d = 1; d <= 4; ++d) {
    const HRep a = dualize(vertices_A(d));
    const HRep a_dual = dual_hrep(vertices_A(d));
    for (int k = 0; k <= 3; ++k) {
      const Integer kk(k), k1(k + 1);
      Integer p1, p2;
      mpz_pow_ui(p1.get_mpz_t(), k1.get_mpz_t(), static_cast<unsigned long>(d + 1));
      mpz_pow_ui(p2.get_mpz_t(), kk.get_mpz_t(), static_cast<unsigned long>(d + 1));
      o.require(count(a_dual, k) == p1 - p2, "Adual(" + std::to_string(d) + ") k=" + std::to_string(k));
      o.require(Rational(count(a, k)) == closed_A(d)(Rational(k)), "A(" + std::to_string(d) + ") k=" + std::to_string(k));
    }
  }
  const char* pairs[] = {
      "Cr(1) (+) Cr(1)",   "Adual(1) (+) Adual(2)", "Adual(2) (+) Adual(2)", "A(2) (+) A(3)",
      "A(3) (+) Cr(2)",    "T(2) (+) T(3)",         "Adual(3) (+) T(2)",     "Cr(3) (+) Adual(2)",
      "A(4) (+) A(1)",     "T(4) (+) Cr(3)",        "Adual(4) (+) A(2)",     "A(2) (+) Adual(2)",
      "T(1) (+) Adual(3)", "Cr(2) (+) T(2)",
  };
  int pairs_ok = 0;
  for (const char* text : pairs) {
    bool ok = true;
    for (const auto& row : oracle_compare(parse(text), 3)) ok = ok && row.counted == row.predicted;
    o.require(ok, std::string(text));
    pairs_ok += ok;
  }
  o.notes.insert(o.notes.begin(), std::to_string(pairs_ok) + " free-sum pairs agree for k <= 3");
  return o;
}

// Ordered rank tuples with entries >= 1 and total <= max_total.
std::vector<std::vector<int>> rank_tuples(int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (!cur.empty()) out.push_back(cur);
    for (int part = 1; part <= left; ++part) {
      cur.push_back(part);
      rec(left - part);
      cur.pop_back();
    }
  };
  rec(max_total);
  return out;
}

std::string tuple_name(const std::vector<int>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

Outcome section2() {
  Outcome o;
  for (const auto& ranks : rank_tuples(8)) {
    Polynomial expected{Rational(1)};
    for (int n : ranks) expected *= Polynomial::from_integers(eulerian_row(n));
    o.require(w_polynomial(Poset::complete_graded(ranks)) == expected, "W " + tuple_name(ranks));
  }
  for (const auto& ranks : rank_tuples(7)) {
    const Poset p = Poset::complete_graded(ranks);
    const auto e = from_delta(delta_complete_graded(ranks));
    for (int k = 0; k <= 4; ++k) {
      const Integer order = order_polytope_count(p, k);
      o.require(order == chain_polytope_count(p, k), "order/chain " + tuple_name(ranks));
      o.require(Rational(order) == e(Rational(k)), "count vs delta " + tuple_name(ranks));
    }
  }
  for (const auto& ranks : rank_tuples(14)) {
    bool small = true;
    for (int n : ranks) small = small && n <= 6;
    if (!small) continue;
    DeltaVector d = DeltaVector::point();
    for (int n : ranks) {
      if (n >= 2) d = free_sum(d, delta_A_dual(n - 1));
    }
    o.require(equatorial_ehrhart(ranks) == from_delta(d), "equatorial " + tuple_name(ranks));
  }
  for (int n = 2; n <= 6; ++n) {
    std::set<std::vector<long>> expected;
    for (unsigned s = 0; s < (1u << (n - 1)); ++s) {
      std::vector<long> v(static_cast<std::size_t>(n - 1)), w(v.size());
      for (int i = 0; i < n - 1; ++i) {
        v[static_cast<std::size_t>(i)] = (s >> i) & 1u;
        w[static_cast<std::size_t>(i)] = -v[static_cast<std::size_t>(i)];
      }
      expected.insert(v);
      expected.insert(w);
    }
    o.require(equatorial_vertices(n) == expected, "equatorial vertices n=" + std::to_string(n));
  }
  return o;
}

Outcome cl_theorems() {
  Outcome o;
  for (int n = 1; n <= 25; ++n) {
    const std::string ones = " (+) Adual(1)^" + std::to_string(n);
    o.require(cl("Adual(2)" + ones), "Adual(2)" + ones);
    o.require(cl("Adual(3)" + ones), "Adual(3)" + ones);
    o.require(cl("A(1) (+) A(" + std::to_string(n) + ")"), "A(1) (+) A(" + std::to_string(n) + ")");
    o.require(cl("A(3) (+) A(1)^" + std::to_string(n)), "A(3) (+) A(1)^" + std::to_string(n));
  }
  for (int n = 1; n <= 12; ++n) {
    const std::string e = "Adual(6) (+) Adual(1)^" + std::to_string(n);
    o.require(cl(e) == (n % 2 == 1), e);
  }
  return o;
}

std::string adual_prefix(const std::vector<int>& fixed) {
  std::string s;
  for (std::size_t i = 0; i < fixed.size(); ++i) s += (i ? " (+) " : "") + ("Adual(" + std::to_string(fixed[i]) + ")");
  return s;
}

// Verdict string for n = first..last, read from the CLI's CSV output.
std::string cli_sweep(const std::string& cli, const std::string& prefix, int first, int last, bool* ok) {
  const std::string cmd = "'" + cli + "' table --prefix '" + prefix + "' --rows Adual:" + std::to_string(first) +
                          ".." + std::to_string(last) + " --format csv";
  int status = 0;
  const std::string out = run_command(cmd, &status);
  *ok = status == 0;
  std::string verdicts;
  std::istringstream in(out);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) verdicts += line.ends_with(",true") ? 'C' : 'n';
  return verdicts;
}

Outcome appendix(const std::string& cli) {
  Outcome o;
  int lists = 0;
  std::set<std::vector<int>> listed_cl;
  for (const auto& list : fixtures::appendix_lists()) {
    bool ok = false;
    const std::string got = cli_sweep(cli, adual_prefix(list.fixed), list.first, 20, &ok);
    o.require(ok, "CLI failed for " + adual_prefix(list.fixed));
    o.require(got == list.verdicts, adual_prefix(list.fixed) + ": got " + got + " want " + list.verdicts);
    ++lists;
    for (int n = list.first; n <= 20; ++n) {
      if (list.verdicts[static_cast<std::size_t>(n - list.first)] == 'C') {
        auto key = list.fixed;
        key.push_back(n);
        std::sort(key.begin(), key.end());
        listed_cl.insert(key);
      }
    }
  }
  // Statements made in the running text next to the lists.
  bool ok = false;
  o.require(cli_sweep(cli, "Adual(1) (+) Adual(4)", 1, 3, &ok) == "CCC" && ok, "Adual(1) (+) Adual(4) (+) Adual(n), n <= 3");
  o.require(cli_sweep(cli, "Adual(1) (+) Adual(5)", 2, 20, &ok) == "nnC" + std::string(16, 'n') && ok,
            "Adual(1) (+) Adual(m) (+) Adual(5), m = 2..20");

  // Parameters not covered by a list are not CL (up to permutation).
  int tuples = 0;
  std::vector<int> key;
  std::function<void(int, int)> sweep = [&](int from, int left) {
    if (left == 0) {
      const bool want = listed_cl.contains(key);
      const bool got = cl(adual_prefix(key));
      o.require(got == want, adual_prefix(key) + (got ? " is CL" : " is not CL"));
      ++tuples;
      return;
    }
    for (int p = from; p <= 20; ++p) {
      key.push_back(p);
      sweep(p, left - 1);
      key.pop_back();
    }
  };
  sweep(1, 3);
  sweep(1, 4);
  o.notes.insert(o.notes.begin(), std::to_string(lists) + " lists via CLI, " + std::to_string(tuples) +
                                      " sorted 3- and 4-summand tuples checked exhaustively");
  return o;
}

// Every multiset of reflexive catalog atoms with total dimension <= max_dim, deduplicated by δ.
std::map<std::vector<Integer>, std::string> all_compositions(int max_dim) {
  std::vector<std::pair<std::string, DeltaVector>> atoms;
  for (int d = 1; d <= max_dim; ++d) {
    atoms.emplace_back("A(" + std::to_string(d) + ")", delta_A(d));
    atoms.emplace_back("Adual(" + std::to_string(d) + ")", delta_A_dual(d));
    atoms.emplace_back("Cr(" + std::to_string(d) + ")", delta_cross(d));
    atoms.emplace_back("T(" + std::to_string(d) + ")", delta_simplex(d));
  }
  std::map<std::vector<Integer>, std::string> out;
  std::function<void(std::size_t, int, const DeltaVector&, const std::string&)> rec =
      [&](std::size_t from, int budget, const DeltaVector& acc, const std::string& name) {
        if (!name.empty()) out.emplace(acc.coefficients(), name);
        for (std::size_t i = from; i < atoms.size(); ++i) {
          const int d = atoms[i].second.dimension();
          if (d > budget) continue;
          rec(i, budget - d, free_sum(acc, atoms[i].second), name.empty() ? atoms[i].first : name + " (+) " + atoms[i].first);
        }
      };
  rec(0, max_dim, DeltaVector::point(), "");
  return out;
}

Outcome properties() {
  Outcome o;
  gen::Rng rng(20240601);
  int palindromic = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Expr e = gen::any_composition(rng, 20);
    const DeltaVector d = delta(e);
    palindromic += is_palindromic(d);
    o.require(check_canonical_symmetry(from_delta(d)) == is_palindromic(d), "symmetry " + to_string(e));
  }

  const auto comps = all_compositions(12);
  int agree = 0;
  double worst_cl = 0, closest_non_cl = 1e300;
  for (const auto& [coeffs, name] : comps) {
    const auto e = from_delta(DeltaVector(coeffs));
    const bool exact = is_cl(e).is_cl;
    const double dist = float_oracle::max_distance_from_line(e);
    const bool floating = dist < 1e-6;
    if (exact) {
      worst_cl = std::max(worst_cl, dist);
    } else {
      closest_non_cl = std::min(closest_non_cl, dist);
    }
    o.require(exact == floating, name + ": exact " + (exact ? "CL" : "not CL") + ", float distance " + std::to_string(dist));
    agree += exact == floating;
  }

  for (int n = 1; n <= 15; ++n) {
    o.require(r_interlacing(from_delta(delta_cross(n + 1)), from_delta(delta_cross(n))),
              "Cr(" + std::to_string(n + 1) + "), Cr(" + std::to_string(n) + ")");
  }
  for (int n = 1; n <= 10; ++n) {
    const auto g = n == 1 ? from_delta(DeltaVector::point()) : closed_A(n - 1);
    o.require(r_interlacing(closed_A(n), g), "A(" + std::to_string(n) + "), A(" + std::to_string(n - 1) + ")");
  }
  std::ostringstream note;
  note << palindromic << "/200 random compositions palindromic; " << agree << "/" << comps.size()
       << " distinct compositions agree with the float oracle (max CL distance " << worst_cl
       << ", min non-CL distance " << closest_non_cl << ")";
  o.notes.insert(o.notes.begin(), note.str());
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : CLSUM_CLI_PATH;
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Table 1 reproduction (Adual x Adual, 0..20)", table1},
      {2, "Table 2 reproduction (A x A, 0..20)", table2},
      {3, "Table 3 reproduction (delta, Ehrhart, verdicts for 2 <= m <= n <= 7)", table3},
      {4, "Identity suite (14 identities, n = 1..30, series K = 20)", identities},
      {5, "Lattice-point oracle equivalence", oracle},
      {6, "Poset suite (W(P), order/chain counts, equatorial polynomials and vertices)", section2},
      {7, "CL theorem instances", cl_theorems},
      {8, "Multi-summand verdict lists via the CLI", [&] { return appendix(cli); }},
      {9, "Property suite (symmetry, float oracle, interlacing)", properties},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = Clock::now();
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    all = all && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " ("
              << static_cast<int>(seconds_since(t0) * 1000) << " ms)";
    for (const auto& n : out.notes) std::cout << "\n       " << n;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
