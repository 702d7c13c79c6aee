#include "clsum/posets.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "clsum/errors.hpp"

namespace clsum {

Poset::Poset(int size, std::vector<std::pair<int, int>> relations)
    : size_(size), less_(static_cast<std::size_t>(size) * static_cast<std::size_t>(std::max(size, 0)), false) {
  if (size < 0) throw std::invalid_argument("poset size must be nonnegative");
  for (const auto& [a, b] : relations) {
    if (a < 0 || b < 0 || a >= size || b >= size) throw std::invalid_argument("poset relation label out of range");
    if (a == b) throw std::invalid_argument("poset relation a<a is not strict");
    less_[static_cast<std::size_t>(a * size + b)] = true;
  }
  // Warshall closure.
  for (int m = 0; m < size; ++m) {
    for (int a = 0; a < size; ++a) {
      if (!less(a, m)) continue;
      for (int b = 0; b < size; ++b) {
        if (less(m, b)) less_[static_cast<std::size_t>(a * size + b)] = true;
      }
    }
  }
  for (int a = 0; a < size; ++a) {
    if (less(a, a)) throw std::invalid_argument("poset relations contain a cycle");
  }
}

Poset Poset::antichain(int n) { return Poset(n, {}); }

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset(n, std::move(rel));
}

Poset Poset::complete_graded(std::span<const int> ranks) {
  std::vector<std::pair<int, int>> rel;
  int start = 0;
  int prev_start = 0;
  int prev_size = 0;
  for (int n : ranks) {
    if (n < 1) throw std::invalid_argument("complete graded poset ranks must be >= 1");
    for (int a = prev_start; a < prev_start + prev_size; ++a) {
      for (int b = start; b < start + n; ++b) rel.emplace_back(a, b);
    }
    prev_start = start;
    prev_size = n;
    start += n;
  }
  return Poset(start, std::move(rel));
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (int m = 0; m < size_ && !between; ++m) between = less(a, m) && less(m, b);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::vector<int>> Poset::maximal_chains() const {
  const auto cov = covers();
  std::vector<std::vector<int>> up(static_cast<std::size_t>(size_));
  std::vector<bool> has_lower(static_cast<std::size_t>(size_), false);
  for (const auto& [a, b] : cov) {
    up[static_cast<std::size_t>(a)].push_back(b);
    has_lower[static_cast<std::size_t>(b)] = true;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::function<void(int)> walk = [&](int v) {
    path.push_back(v);
    if (up[static_cast<std::size_t>(v)].empty()) {
      out.push_back(path);
    } else {
      for (int w : up[static_cast<std::size_t>(v)]) walk(w);
    }
    path.pop_back();
  };
  for (int v = 0; v < size_; ++v) {
    if (!has_lower[static_cast<std::size_t>(v)]) walk(v);
  }
  return out;
}

bool Poset::is_naturally_labelled() const {
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < a; ++b) {
      if (less(a, b)) return false;
    }
  }
  return true;
}

Poset parse_poset(std::istream& in) {
  std::string line;
  int size = -1;
  std::vector<std::pair<int, int>> rel;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
               line.end());
    if (line.empty()) continue;
    const auto where = " on line " + std::to_string(line_no);
    if (size < 0) {
      try {
        std::size_t used = 0;
        size = std::stoi(line, &used);
        if (used != line.size() || size < 0) throw std::invalid_argument(line);
      } catch (const std::exception&) {
        throw std::invalid_argument("poset file: expected element count" + where);
      }
      continue;
    }
    const auto lt = line.find('<');
    if (lt == std::string::npos) throw std::invalid_argument("poset file: expected 'a<b'" + where);
    try {
      std::size_t ua = 0;
      std::size_t ub = 0;
      const std::string sa = line.substr(0, lt);
      const std::string sb = line.substr(lt + 1);
      const int a = std::stoi(sa, &ua);
      const int b = std::stoi(sb, &ub);
      if (ua != sa.size() || ub != sb.size()) throw std::invalid_argument(line);
      if (a < 1 || b < 1 || a > size || b > size) throw std::out_of_range(line);
      rel.emplace_back(a - 1, b - 1);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("poset file: label out of range 1.." + std::to_string(size) + where);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("poset file: expected 'a<b'" + where);
    }
  }
  if (size < 0) throw std::invalid_argument("poset file: missing element count");
  return Poset(size, std::move(rel));
}

void for_each_linear_extension(const Poset& p, const std::function<void(std::span<const int>)>& visit) {
  const int n = p.size();
  if (n > kMaxLinearExtensionSize) {
    throw GuardExceeded("linear_extensions: poset has " + std::to_string(n) + " elements, limit is " +
                        std::to_string(kMaxLinearExtensionSize));
  }
  std::vector<int> word;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void()> extend = [&]() {
    if (static_cast<int>(word.size()) == n) {
      visit(word);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ready = true;
      for (int u = 0; u < n && ready; ++u) ready = !(p.less(u, v) && !used[static_cast<std::size_t>(u)]);
      if (!ready) continue;
      used[static_cast<std::size_t>(v)] = true;
      word.push_back(v);
      extend();
      word.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  extend();
}

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  std::vector<std::vector<int>> out;
  for_each_linear_extension(p, [&](std::span<const int> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

Polynomial w_polynomial(const Poset& p) {
  if (!p.is_naturally_labelled()) {
    throw std::invalid_argument("w_polynomial: labelling is not natural (need a < b whenever a precedes b)");
  }
  std::vector<Integer> counts(static_cast<std::size_t>(std::max(p.size(), 1)), Integer(0));
  for_each_linear_extension(p, [&](std::span<const int> w) {
    std::size_t des = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) des += w[i] > w[i + 1] ? 1 : 0;
    counts[des] += 1;
  });
  return Polynomial::from_integers(counts);
}

namespace {

void check_count_guards(const Poset& p, int k, const char* what) {
  if (k < 0) throw std::invalid_argument(std::string(what) + ": k must be >= 0");
  if (p.size() > kMaxPosetCountSize || k > kMaxPosetCountDilation) {
    throw GuardExceeded(std::string(what) + ": limits are |P| <= " + std::to_string(kMaxPosetCountSize) +
                        ", k <= " + std::to_string(kMaxPosetCountDilation));
  }
}

// A linear extension order, so every element's predecessors are placed first.
std::vector<int> topological_order(const Poset& p) {
  std::vector<int> order(static_cast<std::size_t>(p.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int below_a = 0;
    int below_b = 0;
    for (int u = 0; u < p.size(); ++u) {
      below_a += p.less(u, a) ? 1 : 0;
      below_b += p.less(u, b) ? 1 : 0;
    }
    return below_a < below_b;
  });
  return order;
}

}  // namespace

Integer order_polytope_count(const Poset& p, int k) {
  check_count_guards(p, k, "order_polytope_count");
  const int n = p.size();
  const auto order = topological_order(p);
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  Integer total = 0;
  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == order.size()) {
      total += 1;
      return;
    }
    const int a = order[idx];
    // b ≺ a forces x_a <= x_b; all such b are already placed.
    int hi = k;
    for (int b = 0; b < n; ++b) {
      if (p.less(b, a)) hi = std::min(hi, x[static_cast<std::size_t>(b)]);
    }
    for (int v = 0; v <= hi; ++v) {
      x[static_cast<std::size_t>(a)] = v;
      place(idx + 1);
    }
  };
  place(0);
  return total;
}

Integer chain_polytope_count(const Poset& p, int k) {
  check_count_guards(p, k, "chain_polytope_count");
  const auto chains = p.maximal_chains();
  const int n = p.size();
  // Every maximal chain is a set; track remaining budget per chain.
  std::vector<std::vector<std::size_t>> chains_of(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (int v : chains[c]) chains_of[static_cast<std::size_t>(v)].push_back(c);
  }
  std::vector<int> budget(chains.size(), k);
  Integer total = 0;
  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      total += 1;
      return;
    }
    int hi = k;
    for (std::size_t c : chains_of[static_cast<std::size_t>(v)]) hi = std::min(hi, budget[c]);
    for (int value = 0; value <= hi; ++value) {
      for (std::size_t c : chains_of[static_cast<std::size_t>(v)]) budget[c] -= value;
      place(v + 1);
      for (std::size_t c : chains_of[static_cast<std::size_t>(v)]) budget[c] += value;
    }
  };
  place(0);
  return total;
}

namespace {

Polynomial eulerian_product(std::span<const int> ranks) {
  Polynomial prod = Polynomial::constant(1);
  for (int n : ranks) {
    if (n < 1) throw std::invalid_argument("complete graded poset ranks must be >= 1");
    prod *= Polynomial::from_integers(eulerian_row(n));
  }
  return prod;
}

std::vector<Integer> integer_coefficients(const Polynomial& p) {
  std::vector<Integer> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_num());
  return out;
}

}  // namespace

DeltaVector delta_complete_graded(std::span<const int> ranks) {
  if (ranks.empty()) throw std::invalid_argument("complete graded poset needs at least one rank");
  const Polynomial prod = eulerian_product(ranks);
  const int dimension = std::accumulate(ranks.begin(), ranks.end(), 0);
  return DeltaVector(integer_coefficients(prod), dimension);
}

EhrhartPolynomial equatorial_ehrhart(std::span<const int> ranks) {
  if (ranks.empty()) throw std::invalid_argument("complete graded poset needs at least one rank");
  const Polynomial prod = eulerian_product(ranks);
  int dimension = 0;
  for (int n : ranks) dimension += n - 1;
  return from_delta(DeltaVector(integer_coefficients(prod), dimension));
}

std::set<std::vector<long>> equatorial_vertices(int n) {
  if (n < 2) throw std::invalid_argument("equatorial_vertices: need n >= 2");
  if (n > 8) throw GuardExceeded("equatorial_vertices: need n <= 8");
  std::set<std::vector<long>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const long last = (mask >> (n - 1)) & 1U;
    std::vector<long> image(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) image[static_cast<std::size_t>(i)] = static_cast<long>((mask >> i) & 1U) - last;
    out.insert(std::move(image));
  }
  return out;
}

}  // namespace clsum
