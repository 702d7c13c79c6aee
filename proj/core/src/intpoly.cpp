#include "intpoly.hpp"

#include <cstdlib>

namespace clsum::detail {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void make_primitive(IntPoly& p) {
  Integer content = 0;
  for (const auto& c : p) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) return;
  }
  if (content > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  }
}

IntPoly primitive_integer(const Polynomial& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer v = den_lcm / c.get_den();
    out.push_back(v * c.get_num());
  }
  make_primitive(out);
  return out;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b, int& scale_sign) {
  const int db = degree(b);
  const int delta = degree(a) - db;
  const Integer& lc = b.back();
  scale_sign = (sgn(lc) < 0 && (delta + 1) % 2 != 0) ? -1 : 1;
  if (delta < 0) return a;

  IntPoly r = a;
  int steps = 0;
  while (degree(r) >= db) {
    const Integer t = r.back();
    const int shift = degree(r) - db;
    for (auto& c : r) c *= lc;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= t * b[static_cast<std::size_t>(i)];
    trim(r);
    ++steps;
  }
  // Bring the scaling up to lc^(delta+1) so the result is the textbook prem.
  if (steps < delta + 1) {
    Integer extra;
    mpz_pow_ui(extra.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(delta + 1 - steps));
    for (auto& c : r) c *= extra;
  }
  return r;
}

int sign_at(const IntPoly& p, const Integer& num, const Integer& den) {
  if (p.empty()) return 0;
  // Homogeneous Horner: den^deg * p(num/den), same sign because den > 0.
  Integer acc = p.back();
  Integer den_pow = 1;
  for (int i = degree(p) - 1; i >= 0; --i) {
    den_pow *= den;
    acc *= num;
    acc += p[static_cast<std::size_t>(i)] * den_pow;
  }
  return sgn(acc);
}

IntPoly gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (degree(a) < degree(b)) std::swap(a, b);
  if (b.empty()) {
    make_primitive(a);
    return a;
  }
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    int ignored = 1;
    IntPoly r = pseudo_remainder(a, b, ignored);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

}  // namespace clsum::detail
