#pragma once

#include <span>
#include <vector>

#include "clsum/exact.hpp"

namespace clsum {

using IntVector = std::vector<long>;

struct VRep {
  int dimension = 0;
  std::vector<IntVector> vertices;
};

/// Polytope {x : <a_i, x> >= -1 for every normal a_i}. `box` bounds every
/// vertex coordinate in absolute value and sizes the enumeration box.
struct HRep {
  int dimension = 0;
  std::vector<IntVector> normals;
  long box = 0;
};

inline constexpr int kMaxCatalogDimension = 6;
inline constexpr int kMaxDualizeDimension = 5;
inline constexpr int kMaxLatticeCountDimension = 5;
inline constexpr int kMaxLatticeCountDilation = 4;
inline constexpr int kMaxFreeSumDimension = 7;
inline constexpr int kMaxFreeSumDilation = 3;

/// conv{±(e_i + ... + e_j) : 1 <= i <= j <= d}
VRep vertices_A(int d);
/// conv{±e_i}
VRep vertices_cross(int d);
/// conv{e_1, ..., e_d, -(e_1 + ... + e_d)}
VRep vertices_simplex(int d);

/// Facets by exhaustive d-subsets of points. Each facet normal is scaled to
/// level -1; a non-integral normal throws NonReflexive. Extra non-vertex
/// points (for example the origin) are harmless.
HRep dualize(const VRep& v);

/// Vertices of the polar dual: the facet normals of dualize(v).
VRep dual_vertices(const VRep& v);

/// max(0, max_i -<a_i, x>); x lies in tQ iff gauge(x) <= t.
Rational gauge(const HRep& h, std::span<const Rational> x);

/// #(kQ ∩ Z^d) by enumerating the box [-k*box, k*box]^d.
Integer count(const HRep& h, int k);

/// #((Q_1 ⊕ ... ⊕ Q_r) k-dilate ∩ Z^*): tuples with gauges summing to at most k.
Integer count_free_sum(const HRep& h1, const HRep& h2, int k);
Integer count_free_sum(std::span<const HRep> summands, int k);

}  // namespace clsum
