#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clsum/exact.hpp"
#include "clsum/polynomial.hpp"

namespace clsum {

/// δ-vector (h*-vector) of a lattice polytope containing the origin.
///
/// The dimension is stored explicitly, so trailing zeros (cubes, order
/// polytopes) are kept: coefficients().size() == dimension() + 1 always.
class DeltaVector {
 public:
  /// Dimension = coeffs.size() - 1. Requires coeffs nonempty, δ_0 = 1,
  /// all entries nonnegative; throws std::invalid_argument otherwise.
  explicit DeltaVector(std::vector<Integer> coeffs);
  /// Pads with zeros up to length dimension + 1.
  DeltaVector(std::vector<Integer> coeffs, int dimension);

  /// The 0-dimensional point, δ = (1). Identity for free_sum.
  static DeltaVector point();

  int dimension() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer sum() const;

  Polynomial polynomial() const { return Polynomial::from_integers(coeffs_); }

  /// "(1,8,18,8,1)"
  std::string to_string() const;

  friend bool operator==(const DeltaVector& a, const DeltaVector& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

/// Dual root polytope A_d^∨: Eulerian row <d+1, j>.
DeltaVector delta_A_dual(int d);
/// Root polytope A_d: C(d, j)^2.
DeltaVector delta_A(int d);
/// Cross polytope Cr_d: (1 + t)^d.
DeltaVector delta_cross(int d);
/// Simplex T_d: 1 + t + ... + t^d.
DeltaVector delta_simplex(int d);
/// Unit cube [0,1]^n: Eulerian polynomial S_n padded with one zero (not reflexive).
DeltaVector delta_cube(int n);

/// δ of the free sum: product of δ-polynomials, dimensions add.
DeltaVector free_sum(const DeltaVector& a, const DeltaVector& b);
/// times-fold free sum of a with itself; times == 0 gives the point.
DeltaVector free_sum_power(const DeltaVector& a, int times);

bool is_palindromic(const DeltaVector& a);

}  // namespace clsum
