#include "clsum/oracle.hpp"

#include <algorithm>
#include <cstdlib>

#include "clsum/ehrhart.hpp"
#include "clsum/errors.hpp"

namespace clsum {

namespace {

HRep from_vertices(const VRep& polar, const VRep& self) {
  HRep h;
  h.dimension = self.dimension;
  h.normals = polar.vertices;
  for (const auto& v : self.vertices) {
    for (long c : v) h.box = std::max(h.box, std::labs(c));
  }
  return h;
}

// H-representation of Q^∨ given the vertices of Q.
HRep dual_hrep(const VRep& q) { return from_vertices(q, dual_vertices(q)); }

}  // namespace

std::vector<HRep> oracle_hreps(const Atom& a) {
  switch (a.family) {
    case Family::A:
      return {dualize(vertices_A(a.params.front()))};
    case Family::Adual:
      return {dual_hrep(vertices_A(a.params.front()))};
    case Family::Cr:
      return {dualize(vertices_cross(a.params.front()))};
    case Family::T:
      return {dualize(vertices_simplex(a.params.front()))};
    case Family::Cube:
      throw NonReflexive("Cube(n) does not contain the origin in its interior");
    case Family::Peq: {
      std::vector<HRep> out;
      for (int n : a.params) {
        if (n >= 2) out.push_back(dual_hrep(vertices_A(n - 1)));
      }
      return out;
    }
  }
  return {};
}

std::vector<OracleRow> oracle_compare(const Expr& e, int k_max) {
  std::vector<HRep> hs;
  for (const auto& atom : summands(e)) {
    auto part = oracle_hreps(atom);
    hs.insert(hs.end(), part.begin(), part.end());
  }
  const EhrhartPolynomial poly = from_delta(delta(e));
  std::vector<OracleRow> rows;
  for (int k = 0; k <= k_max; ++k) {
    OracleRow r;
    r.k = k;
    r.counted = hs.size() == 1 ? count(hs.front(), k) : count_free_sum(hs, k);
    const Rational p = poly(Rational(k));
    r.predicted = p.get_num();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace clsum
