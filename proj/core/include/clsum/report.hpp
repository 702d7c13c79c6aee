#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clsum/clcheck.hpp"
#include "clsum/delta.hpp"
#include "clsum/ehrhart.hpp"
#include "clsum/expr.hpp"
#include "clsum/roots.hpp"

namespace clsum {

inline constexpr long kDefaultMaxDegree = 100;

struct Report {
  std::string expr;
  long dimension = 0;
  DeltaVector delta = DeltaVector::point();
  EhrhartPolynomial ehrhart = from_delta(DeltaVector::point());
  bool palindromic = false;
  /// Present only for palindromic δ (reflexive polytopes).
  std::optional<SymmetricFactorization> symmetric;
  std::optional<CLVerdict> cl;
  /// Real roots of q, filled when with_roots is requested.
  std::vector<IsolatingInterval> q_real_roots;
};

/// Throws GuardExceeded when the dimension exceeds max_degree.
Report evaluate(const Expr& e, long max_degree = kDefaultMaxDegree, bool with_roots = true);

/// Just the CL verdict; false for non-palindromic δ.
bool evaluate_cl(const Expr& e, long max_degree = kDefaultMaxDegree);

/// Deterministic JSON document; Ehrhart coefficients are listed by
/// ascending power of k as [numerator, denominator] decimal strings.
std::string to_json(const Report& r);

/// Human-readable report, Ehrhart polynomial in descending powers.
std::string to_text(const Report& r);

}  // namespace clsum
