#pragma once

#include <vector>

#include "clsum/exact.hpp"
#include "clsum/expr.hpp"
#include "clsum/lattice.hpp"

namespace clsum {

/// H-representation of a reflexive catalog atom; Peq expands into its
/// Adual summands, so the result may hold several (or no) entries.
/// Throws NonReflexive for Cube and GuardExceeded past the dualize guard.
std::vector<HRep> oracle_hreps(const Atom& a);

struct OracleRow {
  int k = 0;
  Integer counted;
  Integer predicted;  // from_delta(delta(expr))(k)
};

/// Brute-force counts against the δ prediction for k = 0..k_max.
/// A single summand uses count(), several use count_free_sum().
std::vector<OracleRow> oracle_compare(const Expr& e, int k_max);

}  // namespace clsum
