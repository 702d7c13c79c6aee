#pragma once

#include <optional>
#include <vector>

#include "clsum/exact.hpp"
#include "clsum/polynomial.hpp"

namespace clsum {

/// A real root isolated in [lo, hi]; lo == hi means the root is exactly lo.
/// When lo < hi neither endpoint is a root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree
  int multiplicity = 1;
};

/// p = scalar * prod factor_i^multiplicity_i with pairwise coprime factors.
struct SquarefreeDecomposition {
  Rational scalar;
  std::vector<SquarefreeFactor> factors;
};

/// Yun's algorithm. Throws std::invalid_argument on the zero polynomial.
SquarefreeDecomposition squarefree_decompose(const Polynomial& p);

/// Product of the distinct monic squarefree factors.
Polynomial squarefree_part(const Polynomial& p);

/// 1 + max |a_i / a_d|; every complex root has modulus strictly below it.
Rational cauchy_bound(const Polynomial& p);

/// Sturm sequence of a squarefree polynomial, stored as primitive integer
/// polynomials built with sign-corrected pseudo-remainders.
class SturmSequence {
 public:
  /// Throws std::invalid_argument if p is zero or not squarefree.
  explicit SturmSequence(const Polynomial& p);

  /// Distinct real roots in (lo, hi]; std::nullopt stands for -inf / +inf.
  int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

  int variations_at(const Rational& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;

  std::size_t length() const { return chain_.size(); }

 private:
  std::vector<std::vector<Integer>> chain_;
};

/// Number of distinct real roots of the squarefree p in (lo, hi].
int sturm_count(const Polynomial& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);

/// Disjoint isolating intervals, sorted ascending, one per distinct real root.
/// Throws std::invalid_argument on the zero polynomial.
std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p);

/// Bisects until hi - lo <= max_width. The interval must isolate a root of p.
IsolatingInterval refine(const IsolatingInterval& interval, const Polynomial& p,
                         const Rational& max_width);

}  // namespace clsum
