#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "clsum/exact.hpp"

namespace clsum {

/// Dense univariate polynomial with exact rational coefficients.
/// coefficients()[i] multiplies x^i; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// c0 + c1 x
  static Polynomial linear(const Rational& c0, const Rational& c1);
  static Polynomial from_integers(const std::vector<Integer>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  /// Precondition: nonzero.
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Descending powers, e.g. "3/2*x^4 + 3*x^3 - x + 1".
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over Q. Throws std::domain_error when b is zero.
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& p, unsigned exponent);

/// p(x + c).
Polynomial taylor_shift(const Polynomial& p, const Rational& c);

}  // namespace clsum
