#include "clsum/clcheck.hpp"

#include <algorithm>
#include <optional>

#include "clsum/errors.hpp"

namespace clsum {

SymmetricFactorization symmetric_factorize(const EhrhartPolynomial& e) {
  const Polynomial p = taylor_shift(e.polynomial(), make_rational(-1, 2));
  const int parity = e.dimension() % 2;
  const auto& c = p.coefficients();
  std::vector<Rational> q;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (static_cast<int>(i % 2) != parity) {
      if (c[i] != 0) {
        throw SymmetryViolation("E(s - 1/2) has a nonzero coefficient of s^" + std::to_string(i) +
                                "; not the Ehrhart polynomial of a reflexive polytope");
      }
      continue;
    }
    q.push_back(c[i]);
  }
  return {parity, Polynomial(std::move(q))};
}

CLVerdict is_cl_even_part(const Polynomial& q) {
  CLVerdict v;
  if (q.degree() <= 0) {
    v.is_cl = true;
    return v;
  }
  for (const auto& f : squarefree_decompose(q).factors) {
    const SturmSequence sturm(f.factor);
    const int real = sturm.count(std::nullopt, std::nullopt);
    v.nonreal_roots_of_q += f.factor.degree() - real;
    v.positive_roots_of_q += sturm.count(Rational(0), std::nullopt);
  }
  v.is_cl = v.nonreal_roots_of_q == 0 && v.positive_roots_of_q == 0;
  return v;
}

CLVerdict is_cl(const EhrhartPolynomial& e) { return is_cl_even_part(symmetric_factorize(e).even_part); }

namespace {

struct Root {
  IsolatingInterval interval;
  bool from_f;
};

}  // namespace

bool r_interlacing(const EhrhartPolynomial& f, const EhrhartPolynomial& g) {
  if (f.dimension() != g.dimension() + 1) {
    throw DegreeMismatch("r_interlacing: need dim f = dim g + 1, got " + std::to_string(f.dimension()) +
                         " and " + std::to_string(g.dimension()));
  }
  const auto qf = symmetric_factorize(f).even_part;
  const auto qg = symmetric_factorize(g).even_part;
  if (!is_cl_even_part(qf).is_cl) throw NotCL("r_interlacing: first polynomial is not CL");
  if (!is_cl_even_part(qg).is_cl) throw NotCL("r_interlacing: second polynomial is not CL");

  // A zero root of q duplicates the imaginary part 0.
  if (qf(0) == 0 || qg(0) == 0) return false;
  if (qf.degree() > 0 && qg.degree() > 0 && gcd(qf, qg).degree() > 0) return false;

  std::vector<Root> roots;
  auto collect = [&roots](const Polynomial& q, bool from_f) {
    if (q.degree() <= 0) return true;
    for (auto& iv : isolate_real_roots(q)) {
      if (iv.multiplicity != 1) return false;
      roots.push_back({std::move(iv), from_f});
    }
    return true;
  };
  if (!collect(qf, true) || !collect(qg, false)) return false;

  // Separate intervals coming from different polynomials.
  const Polynomial sf = squarefree_part(qf);
  const Polynomial sg = qg.degree() > 0 ? squarefree_part(qg) : Polynomial::constant(1);
  while (true) {
    std::sort(roots.begin(), roots.end(),
              [](const Root& a, const Root& b) { return a.interval.lo < b.interval.lo; });
    bool overlap = false;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      auto& a = roots[i];
      auto& b = roots[i + 1];
      if (a.interval.hi < b.interval.lo) continue;
      overlap = true;
      for (Root* r : {&a, &b}) {
        if (r->interval.is_exact()) continue;
        r->interval = refine(r->interval, r->from_f ? sf : sg, r->interval.width() / 2);
      }
    }
    if (!overlap) break;
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].from_f != (i % 2 == 0)) return false;
  }
  return true;
}

}  // namespace clsum
