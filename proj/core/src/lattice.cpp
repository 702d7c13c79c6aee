#include "clsum/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "clsum/errors.hpp"

namespace clsum {

namespace {

void check_catalog(int d, const char* what) {
  if (d < 1) throw std::invalid_argument(std::string(what) + ": need d >= 1");
  if (d > kMaxCatalogDimension) {
    throw GuardExceeded(std::string(what) + ": need d <= " + std::to_string(kMaxCatalogDimension));
  }
}

long max_abs_coordinate(const std::vector<IntVector>& pts) {
  long m = 0;
  for (const auto& p : pts) {
    for (long c : p) m = std::max(m, c < 0 ? -c : c);
  }
  return m;
}

// Solves M a = rhs over Q; returns false when M is singular.
bool solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs, std::vector<Rational>& out) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
  return true;
}

long dot(const IntVector& a, const IntVector& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
}

// Gauge of an integer point; integral because the normals are.
long integral_gauge(const HRep& h, const IntVector& x) {
  long g = 0;
  for (const auto& a : h.normals) g = std::max(g, -dot(a, x));
  return g;
}

// histogram[g] = #{x in Z^d : gauge(x) == g}, for g = 0..k.
std::vector<Integer> gauge_histogram(const HRep& h, int k) {
  const int d = h.dimension;
  const long r = static_cast<long>(k) * h.box;
  std::vector<Integer> hist(static_cast<std::size_t>(k) + 1, Integer(0));
  std::vector<unsigned long> local(hist.size(), 0);
  IntVector x(static_cast<std::size_t>(d), -r);
  if (d == 0) {
    hist[0] = 1;
    return hist;
  }
  while (true) {
    const long g = integral_gauge(h, x);
    if (g <= k) ++local[static_cast<std::size_t>(g)];
    std::size_t i = 0;
    while (i < x.size() && x[i] == r) x[i++] = -r;
    if (i == x.size()) break;
    ++x[i];
  }
  for (std::size_t g = 0; g < hist.size(); ++g) hist[g] = local[g];
  return hist;
}

}  // namespace

VRep vertices_A(int d) {
  check_catalog(d, "vertices_A");
  VRep v{d, {}};
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      IntVector p(static_cast<std::size_t>(d), 0);
      for (int t = i; t <= j; ++t) p[static_cast<std::size_t>(t)] = 1;
      IntVector m = p;
      for (auto& c : m) c = -c;
      v.vertices.push_back(std::move(p));
      v.vertices.push_back(std::move(m));
    }
  }
  return v;
}

VRep vertices_cross(int d) {
  check_catalog(d, "vertices_cross");
  VRep v{d, {}};
  for (int i = 0; i < d; ++i) {
    for (long s : {1L, -1L}) {
      IntVector p(static_cast<std::size_t>(d), 0);
      p[static_cast<std::size_t>(i)] = s;
      v.vertices.push_back(std::move(p));
    }
  }
  return v;
}

VRep vertices_simplex(int d) {
  check_catalog(d, "vertices_simplex");
  VRep v{d, {}};
  for (int i = 0; i < d; ++i) {
    IntVector p(static_cast<std::size_t>(d), 0);
    p[static_cast<std::size_t>(i)] = 1;
    v.vertices.push_back(std::move(p));
  }
  v.vertices.emplace_back(static_cast<std::size_t>(d), -1L);
  return v;
}

HRep dualize(const VRep& v) {
  const int d = v.dimension;
  if (d < 1 || d > kMaxDualizeDimension) {
    throw GuardExceeded("dualize: need 1 <= d <= " + std::to_string(kMaxDualizeDimension));
  }
  const auto& pts = v.vertices;
  const std::size_t n = pts.size();
  std::set<IntVector> normals;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d));
  std::vector<Rational> a;

  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
    if (depth == pick.size()) {
      std::vector<std::vector<Rational>> m;
      for (std::size_t idx : pick) {
        std::vector<Rational> row;
        for (long c : pts[idx]) row.emplace_back(c);
        m.push_back(std::move(row));
      }
      if (!solve(std::move(m), std::vector<Rational>(pick.size(), Rational(-1)), a)) return;
      for (const auto& p : pts) {
        Rational s = 0;
        for (std::size_t i = 0; i < p.size(); ++i) s += a[i] * p[i];
        if (s < -1) return;
      }
      IntVector normal;
      for (const auto& c : a) {
        if (c.get_den() != 1) {
          throw NonReflexive("dualize: facet normal is not integral; the polytope is not reflexive");
        }
        normal.push_back(c.get_num().get_si());
      }
      normals.insert(std::move(normal));
      return;
    }
    for (std::size_t i = from; i + (pick.size() - depth) <= n; ++i) {
      pick[depth] = i;
      choose(depth + 1, i + 1);
    }
  };
  choose(0, 0);
  if (normals.empty()) throw NonReflexive("dualize: no facets found; origin is not interior");
  return HRep{d, {normals.begin(), normals.end()}, max_abs_coordinate(pts)};
}

VRep dual_vertices(const VRep& v) {
  HRep h = dualize(v);
  return VRep{h.dimension, std::move(h.normals)};
}

Rational gauge(const HRep& h, std::span<const Rational> x) {
  if (h.normals.empty()) throw std::invalid_argument("gauge: empty H-representation");
  Rational g = 0;
  for (const auto& a : h.normals) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s -= a[i] * x[i];
    if (s > g) g = s;
  }
  return g;
}

Integer count(const HRep& h, int k) {
  if (k < 0) throw std::invalid_argument("count: k must be >= 0");
  if (h.dimension > kMaxLatticeCountDimension || k > kMaxLatticeCountDilation) {
    throw GuardExceeded("count: limits are d <= " + std::to_string(kMaxLatticeCountDimension) +
                        ", k <= " + std::to_string(kMaxLatticeCountDilation));
  }
  Integer total = 0;
  for (const auto& c : gauge_histogram(h, k)) total += c;
  return total;
}

Integer count_free_sum(const HRep& h1, const HRep& h2, int k) {
  const HRep both[] = {h1, h2};
  return count_free_sum(both, k);
}

Integer count_free_sum(std::span<const HRep> summands, int k) {
  if (k < 0) throw std::invalid_argument("count_free_sum: k must be >= 0");
  int total_dim = 0;
  for (const auto& h : summands) total_dim += h.dimension;
  if (total_dim > kMaxFreeSumDimension || k > kMaxFreeSumDilation) {
    throw GuardExceeded("count_free_sum: limits are combined d <= " + std::to_string(kMaxFreeSumDimension) +
                        ", k <= " + std::to_string(kMaxFreeSumDilation));
  }
  // conv = convolution of gauge histograms; ways[g] counts tuples with gauge sum g.
  std::vector<Integer> ways(static_cast<std::size_t>(k) + 1, Integer(0));
  ways[0] = 1;
  for (const auto& h : summands) {
    const auto hist = gauge_histogram(h, k);
    std::vector<Integer> next(ways.size(), Integer(0));
    for (std::size_t a = 0; a < ways.size(); ++a) {
      for (std::size_t b = 0; a + b < ways.size(); ++b) next[a + b] += ways[a] * hist[b];
    }
    ways = std::move(next);
  }
  Integer total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

}  // namespace clsum
