#pragma once

#include <vector>

#include "clsum/delta.hpp"
#include "clsum/exact.hpp"
#include "clsum/polynomial.hpp"

namespace clsum {

/// Ehrhart polynomial E(k) of a d-dimensional lattice polytope.
/// Degree equals the stored dimension, leading coefficient is positive and E(0) = 1.
class EhrhartPolynomial {
 public:
  /// Throws std::invalid_argument when the invariants above do not hold.
  EhrhartPolynomial(Polynomial poly, int dimension);

  const Polynomial& polynomial() const { return poly_; }
  int dimension() const { return dimension_; }
  Rational operator()(const Rational& k) const { return poly_(k); }

  friend bool operator==(const EhrhartPolynomial& a, const EhrhartPolynomial& b) {
    return a.dimension_ == b.dimension_ && a.poly_ == b.poly_;
  }

 private:
  Polynomial poly_;
  int dimension_;
};

/// E(k) = sum_j δ_j C(d + k - j, d), expanded symbolically.
EhrhartPolynomial from_delta(const DeltaVector& delta);

/// (k+1)^(d+1) - k^(d+1).
EhrhartPolynomial closed_A_dual(int d);

/// sum_j C(d,j)^2 C(k + d - j, d).
EhrhartPolynomial closed_A(int d);

/// E(-1/2 + s) == (-1)^d E(-1/2 - s) as polynomials in s.
bool check_canonical_symmetry(const EhrhartPolynomial& e);

/// First K+1 coefficients of δ(t) / (1 - t)^(d+1), by power-series division.
std::vector<Integer> series_coefficients(const DeltaVector& delta, int K);

}  // namespace clsum
