#include "clsum/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "intpoly.hpp"

namespace clsum {

SquarefreeDecomposition squarefree_decompose(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
  SquarefreeDecomposition out{p.leading(), {}};
  if (p.degree() == 0) return out;

  const Polynomial dp = p.derivative();
  const Polynomial b = gcd(p, dp);
  Polynomial c = divmod(p, b).quotient.monic();
  Polynomial d = divmod(dp, b).quotient * (Rational(1) / p.leading()) - c.derivative();
  for (int multiplicity = 1; c.degree() > 0; ++multiplicity) {
    const Polynomial a = gcd(c, d);
    if (a.degree() > 0) out.factors.push_back({a, multiplicity});
    c = divmod(c, a).quotient;
    d = divmod(d, a).quotient - c.derivative();
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& f : squarefree_decompose(p).factors) out *= f.factor;
  return out;
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coefficients()[static_cast<std::size_t>(i)]) / lc));
  return m + 1;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm: zero polynomial");
  chain_.push_back(detail::primitive_integer(p));
  if (p.degree() == 0) return;
  chain_.push_back(detail::primitive_integer(p.derivative()));
  while (true) {
    const auto& prev = chain_[chain_.size() - 2];
    const auto& cur = chain_.back();
    if (detail::degree(cur) == 0) break;
    int scale_sign = 1;
    detail::IntPoly r = detail::pseudo_remainder(prev, cur, scale_sign);
    if (r.empty()) {
      throw std::invalid_argument("sturm: polynomial is not squarefree (gcd(p, p') is not constant)");
    }
    // prem = lc^(delta+1) * rem, so -rem has sign -scale_sign * prem.
    if (scale_sign > 0) {
      for (auto& c : r) c = -c;
    }
    detail::make_primitive(r);
    chain_.push_back(std::move(r));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(detail::sign_at(p, x.get_num(), x.get_den()));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) {
    const int s = sgn(p.back());
    signs.push_back(detail::degree(p) % 2 == 0 ? s : -s);
  }
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sgn(p.back()));
  return count_variations(signs);
}

int SturmSequence::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
  const int vlo = lo ? variations_at(*lo) : variations_at_neg_infinity();
  const int vhi = hi ? variations_at(*hi) : variations_at_pos_infinity();
  return vlo - vhi;
}

int sturm_count(const Polynomial& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  return SturmSequence(p).count(lo, hi);
}

namespace {

struct FactorRoots {
  const Polynomial* factor;
  SturmSequence sturm;
  int multiplicity;
};

struct Tagged {
  IsolatingInterval interval;
  std::size_t owner;
};

// Invariant: f(lo) != 0, f(hi) != 0, `roots` distinct roots of f in (lo, hi).
void bisect(const Polynomial& f, const SturmSequence& sturm, Rational lo, Rational hi, int roots,
            int multiplicity, std::vector<IsolatingInterval>& out) {
  while (roots > 0) {
    if (roots == 1) {
      out.push_back({lo, hi, multiplicity});
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (f(mid) == 0) {
      out.push_back({mid, mid, multiplicity});
      Rational delta = (hi - lo) / 4;
      Rational a;
      Rational b;
      while (true) {
        a = mid - delta;
        b = mid + delta;
        if (f(a) != 0 && f(b) != 0 && sturm.count(a, b) == 1) break;
        delta /= 2;
      }
      const int left = sturm.count(lo, a);
      bisect(f, sturm, lo, a, left, multiplicity, out);
      lo = b;
      roots = roots - left - 1;
      continue;
    }
    const int left = sturm.count(lo, mid);
    bisect(f, sturm, lo, mid, left, multiplicity, out);
    lo = mid;
    roots -= left;
  }
}

IsolatingInterval bisect_once(const IsolatingInterval& iv, const Polynomial& f, const SturmSequence& sturm) {
  if (iv.is_exact()) return iv;
  const Rational mid = (iv.lo + iv.hi) / 2;
  if (f(mid) == 0) return {mid, mid, iv.multiplicity};
  if (sturm.count(iv.lo, mid) == 1) return {iv.lo, mid, iv.multiplicity};
  return {mid, iv.hi, iv.multiplicity};
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  const auto decomposition = squarefree_decompose(p);

  std::vector<FactorRoots> factors;
  factors.reserve(decomposition.factors.size());
  for (const auto& f : decomposition.factors) {
    factors.push_back({&f.factor, SturmSequence(f.factor), f.multiplicity});
  }

  std::vector<Tagged> tagged;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (f.factor->degree() == 1) {
      const Rational r = -f.factor->coefficient(0) / f.factor->coefficient(1);
      tagged.push_back({IsolatingInterval{r, r, f.multiplicity}, i});
      continue;
    }
    const Rational bound = cauchy_bound(*f.factor);
    const int total = f.sturm.count(-bound, bound);
    std::vector<IsolatingInterval> found;
    bisect(*f.factor, f.sturm, -bound, bound, total, f.multiplicity, found);
    for (auto& iv : found) tagged.push_back({std::move(iv), i});
  }

  // Roots of different factors are distinct; refine until the closed intervals separate.
  while (true) {
    std::sort(tagged.begin(), tagged.end(),
              [](const Tagged& a, const Tagged& b) { return a.interval.lo < b.interval.lo; });
    bool overlap = false;
    for (std::size_t i = 0; i + 1 < tagged.size(); ++i) {
      auto& a = tagged[i];
      auto& b = tagged[i + 1];
      if (a.interval.hi < b.interval.lo) continue;
      overlap = true;
      if (!a.interval.is_exact()) {
        a.interval = bisect_once(a.interval, *factors[a.owner].factor, factors[a.owner].sturm);
      }
      if (!b.interval.is_exact()) {
        b.interval = bisect_once(b.interval, *factors[b.owner].factor, factors[b.owner].sturm);
      }
    }
    if (!overlap) break;
  }

  std::vector<IsolatingInterval> out;
  out.reserve(tagged.size());
  for (auto& t : tagged) out.push_back(std::move(t.interval));
  return out;
}

IsolatingInterval refine(const IsolatingInterval& interval, const Polynomial& p, const Rational& max_width) {
  if (interval.is_exact()) return interval;
  const Polynomial f = squarefree_part(p);
  if (f(interval.lo) == 0) return {interval.lo, interval.lo, interval.multiplicity};
  if (f(interval.hi) == 0) return {interval.hi, interval.hi, interval.multiplicity};
  const SturmSequence sturm(f);
  IsolatingInterval iv = interval;
  while (!iv.is_exact() && iv.width() > max_width) iv = bisect_once(iv, f, sturm);
  return iv;
}

}  // namespace clsum
