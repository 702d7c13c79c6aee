#include "clsum/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "intpoly.hpp"

namespace clsum {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

Polynomial Polynomial::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lc = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational t = rem[static_cast<std::size_t>(i)] / lc;
    quot[static_cast<std::size_t>(i - db)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto g = detail::gcd(detail::primitive_integer(a), detail::primitive_integer(b));
  return Polynomial::from_integers(g).monic();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial taylor_shift(const Polynomial& p, const Rational& c) {
  // Repeated synthetic division by (x - c) in place (Horner's scheme).
  std::vector<Rational> a = p.coefficients();
  const int n = p.degree();
  if (n <= 0 || c == 0) return p;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[static_cast<std::size_t>(j)] += c * a[static_cast<std::size_t>(j + 1)];
  }
  return Polynomial(std::move(a));
}

}  // namespace clsum
