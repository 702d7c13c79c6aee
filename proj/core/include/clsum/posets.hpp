#pragma once

#include <functional>
#include <istream>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "clsum/delta.hpp"
#include "clsum/ehrhart.hpp"
#include "clsum/exact.hpp"
#include "clsum/polynomial.hpp"

namespace clsum {

/// Finite poset on elements 0..size-1, given by relations (lower, upper)
/// meaning lower ≺ upper. The transitive closure is computed on construction.
class Poset {
 public:
  /// Throws std::invalid_argument on out-of-range labels or a cycle.
  Poset(int size, std::vector<std::pair<int, int>> relations);

  static Poset antichain(int n);
  static Poset chain(int n);
  /// Complete graded poset P_{n_1,...,n_r}: rank i holds n_i elements, every
  /// element of a lower rank precedes every element of a higher rank.
  /// Elements are labelled rank by rank, which is a natural labelling.
  static Poset complete_graded(std::span<const int> ranks);

  int size() const { return size_; }
  /// a ≺ b (strict).
  bool less(int a, int b) const { return less_[static_cast<std::size_t>(a * size_ + b)]; }
  /// Cover pairs (lower, upper) of the Hasse diagram.
  std::vector<std::pair<int, int>> covers() const;
  /// Maximal chains, each listed bottom to top.
  std::vector<std::vector<int>> maximal_chains() const;
  /// True when a ≺ b implies a < b as labels.
  bool is_naturally_labelled() const;

 private:
  int size_;
  std::vector<bool> less_;
};

/// Text format: first non-comment line is the element count n, then one
/// relation "a<b" per line with labels 1..n. '#' starts a comment.
Poset parse_poset(std::istream& in);

inline constexpr int kMaxLinearExtensionSize = 10;
inline constexpr int kMaxPosetCountSize = 8;
inline constexpr int kMaxPosetCountDilation = 6;

/// Calls visit(w) for every linear extension w (w_i ≺ w_j implies i < j).
/// Throws GuardExceeded when size > kMaxLinearExtensionSize.
void for_each_linear_extension(const Poset& p, const std::function<void(std::span<const int>)>& visit);
std::vector<std::vector<int>> linear_extensions(const Poset& p);

/// sum over linear extensions of t^des(w). Needs a natural labelling, under
/// which this equals the δ-polynomial of the order polytope.
Polynomial w_polynomial(const Poset& p);

/// #{x : P -> {0..k} with x_a <= x_b whenever b ≺ a} = E_{O_P}(k).
Integer order_polytope_count(const Poset& p, int k);

/// #{x in Z_{>=0}^P : every maximal chain sums to at most k} = E_{C_P}(k).
Integer chain_polytope_count(const Poset& p, int k);

/// prod S_{n_i}(t), padded with r trailing zeros; dimension sum n_i.
DeltaVector delta_complete_graded(std::span<const int> ranks);

/// f^Ehr of the unpadded product prod S_{n_i}, dimension sum (n_i - 1).
EhrhartPolynomial equatorial_ehrhart(std::span<const int> ranks);

/// Images of the 0/1 cube vertices under x -> (x_1 - x_n, ..., x_{n-1} - x_n),
/// the quotient by the all-ones direction. 2 <= n <= 8.
std::set<std::vector<long>> equatorial_vertices(int n);

}  // namespace clsum
