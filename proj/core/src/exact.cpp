#include "clsum/exact.hpp"

#include <mutex>
#include <stdexcept>

namespace clsum {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

namespace {

// Rows grow monotonically and are never modified after being appended.
std::mutex eulerian_mutex;
std::vector<std::vector<Integer>> eulerian_rows{{Integer(1)}, {Integer(1)}};

const std::vector<Integer>& eulerian_row_locked(int n) {
  while (static_cast<int>(eulerian_rows.size()) <= n) {
    const int m = static_cast<int>(eulerian_rows.size());
    const auto& prev = eulerian_rows.back();
    std::vector<Integer> row(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      Integer v = 0;
      if (j < m - 1) v += (j + 1) * prev[static_cast<std::size_t>(j)];
      if (j >= 1) v += (m - j) * prev[static_cast<std::size_t>(j - 1)];
      row[static_cast<std::size_t>(j)] = v;
    }
    eulerian_rows.push_back(std::move(row));
  }
  return eulerian_rows[static_cast<std::size_t>(n)];
}

}  // namespace

std::vector<Integer> eulerian_row(int n) {
  if (n < 0) throw std::invalid_argument("eulerian: n must be nonnegative");
  std::lock_guard lock(eulerian_mutex);
  return eulerian_row_locked(n);
}

Integer eulerian(int n, int j) {
  if (n < 0) throw std::invalid_argument("eulerian: n must be nonnegative");
  if (j < 0) return 0;
  if (n == 0) return j == 0 ? 1 : 0;
  if (j >= n) return 0;
  std::lock_guard lock(eulerian_mutex);
  return eulerian_row_locked(n)[static_cast<std::size_t>(j)];
}

}  // namespace clsum
