#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace clsum {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

Integer factorial(long n);

/// Eulerian number <n, j>: permutations of [n] with exactly j descents.
/// Zero outside 0 <= j < n. Row 0 is taken to be (1).
Integer eulerian(int n, int j);

/// <n,0>, ..., <n,n-1> (length max(n, 1)). Rows are memoized.
std::vector<Integer> eulerian_row(int n);

}  // namespace clsum
