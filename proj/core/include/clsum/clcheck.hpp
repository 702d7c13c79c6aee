#pragma once

#include <vector>

#include "clsum/ehrhart.hpp"
#include "clsum/polynomial.hpp"
#include "clsum/roots.hpp"

namespace clsum {

/// E(-1/2 + s) = s^parity * q(s^2), with q = even_part in the variable u = s^2.
struct SymmetricFactorization {
  int parity = 0;
  Polynomial even_part;
};

/// Throws SymmetryViolation if a coefficient of the wrong parity is nonzero.
SymmetricFactorization symmetric_factorize(const EhrhartPolynomial& e);

/// Counts refer to distinct roots of q. A root -1/2 + iy of E corresponds to
/// u = -y^2, so E is CL iff q has only real roots, none of them positive.
struct CLVerdict {
  bool is_cl = false;
  int nonreal_roots_of_q = 0;
  int positive_roots_of_q = 0;
};

CLVerdict is_cl(const EhrhartPolynomial& e);

/// Same decision on an already computed q (no symmetry check).
CLVerdict is_cl_even_part(const Polynomial& q);

/// Whether the roots of f and g lie on Re(z) = -1/2 and strictly alternate
/// along it. Requires dim f = dim g + 1 (DegreeMismatch) and both CL (NotCL).
///
/// Decided in u-space: every root of q_f and q_g must be simple and strictly
/// negative, and the merged roots, read from the most negative end, must
/// alternate f, g, f, g, ... The zero imaginary part forced by odd parity
/// then falls between the innermost pair automatically.
bool r_interlacing(const EhrhartPolynomial& f, const EhrhartPolynomial& g);

}  // namespace clsum
