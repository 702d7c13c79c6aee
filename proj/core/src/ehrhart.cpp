#include "clsum/ehrhart.hpp"

#include <stdexcept>

namespace clsum {

EhrhartPolynomial::EhrhartPolynomial(Polynomial poly, int dimension)
    : poly_(std::move(poly)), dimension_(dimension) {
  if (dimension_ < 0) throw std::invalid_argument("Ehrhart polynomial: negative dimension");
  if (poly_.degree() != dimension_) {
    throw std::invalid_argument("Ehrhart polynomial: degree differs from dimension");
  }
  if (poly_.leading() <= 0) throw std::invalid_argument("Ehrhart polynomial: leading coefficient must be positive");
  if (poly_.coefficient(0) != 1) throw std::invalid_argument("Ehrhart polynomial: constant term must be 1");
}

namespace {

using IntCoeffs = std::vector<Integer>;

// Integer Taylor shift q(x) = p(x + c).
IntCoeffs shift(IntCoeffs a, long c) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += c * a[j + 1];
  }
  return a;
}

}  // namespace

EhrhartPolynomial from_delta(const DeltaVector& delta) {
  const int d = delta.dimension();
  // rising(k) = (k+1)(k+2)...(k+d), so C(d + k - j, d) = rising(k - j) / d!.
  IntCoeffs rising{Integer(1)};
  for (int i = 1; i <= d; ++i) {
    IntCoeffs next(rising.size() + 1);
    for (std::size_t t = 0; t < rising.size(); ++t) {
      next[t] += i * rising[t];
      next[t + 1] += rising[t];
    }
    rising = std::move(next);
  }
  IntCoeffs acc(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    const Integer& w = delta[static_cast<std::size_t>(j)];
    if (w == 0) continue;
    const IntCoeffs shifted = shift(rising, -j);
    for (std::size_t t = 0; t < shifted.size(); ++t) acc[t] += w * shifted[t];
  }
  const Integer dfact = factorial(d);
  std::vector<Rational> coeffs;
  coeffs.reserve(acc.size());
  for (const auto& c : acc) coeffs.push_back(make_rational(c, dfact));
  return EhrhartPolynomial(Polynomial(std::move(coeffs)), d);
}

EhrhartPolynomial closed_A_dual(int d) {
  if (d < 1) throw std::invalid_argument("closed_A_dual: d must be >= 1");
  const auto e = static_cast<unsigned>(d + 1);
  return EhrhartPolynomial(pow(Polynomial::linear(1, 1), e) - Polynomial::monomial(1, e), d);
}

EhrhartPolynomial closed_A(int d) {
  if (d < 1) throw std::invalid_argument("closed_A: d must be >= 1");
  Polynomial sum;
  for (int j = 0; j <= d; ++j) {
    // C(k + d - j, d) = prod_{i=1..d} (k - j + i) / d!
    Polynomial term = Polynomial::constant(1);
    for (int i = 1; i <= d; ++i) term *= Polynomial::linear(i - j, 1);
    const Integer c = binomial(d, j);
    sum += term * Rational(c * c);
  }
  sum *= make_rational(Integer(1), factorial(d));
  return EhrhartPolynomial(std::move(sum), d);
}

bool check_canonical_symmetry(const EhrhartPolynomial& e) {
  const Polynomial p = taylor_shift(e.polynomial(), make_rational(-1, 2));
  const int parity = e.dimension() % 2;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (static_cast<int>(i % 2) != parity && c[i] != 0) return false;
  }
  return true;
}

std::vector<Integer> series_coefficients(const DeltaVector& delta, int K) {
  if (K < 0) throw std::invalid_argument("series_coefficients: K must be >= 0");
  const int d = delta.dimension();
  // denominator (1 - t)^(d+1); its constant term is 1 so division needs no inverses.
  std::vector<Integer> denom;
  for (int i = 0; i <= d + 1; ++i) denom.push_back(binomial(d + 1, i) * (i % 2 == 0 ? 1 : -1));
  std::vector<Integer> out(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    Integer v = k <= d ? delta[static_cast<std::size_t>(k)] : Integer(0);
    for (int i = 1; i <= d + 1 && i <= k; ++i) v -= denom[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
    out[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

}  // namespace clsum
