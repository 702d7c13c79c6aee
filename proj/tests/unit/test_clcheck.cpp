#include <doctest.h>

#include "clsum/clcheck.hpp"
#include "clsum/delta.hpp"
#include "clsum/ehrhart.hpp"
#include "clsum/errors.hpp"
#include "clsum/expr.hpp"
#include "clsum/identities.hpp"
#include "float_roots.hpp"
#include "generators.hpp"

using namespace clsum;

namespace {

EhrhartPolynomial E(std::initializer_list<Rational> c) {
  Polynomial p(c);
  return EhrhartPolynomial(p, p.degree());
}

EhrhartPolynomial of(const std::string& expr) { return from_delta(delta(parse(expr))); }

Rational Q(long n, long d) { return make_rational(n, d); }

// E with E(s - 1/2) proportional to s^parity * prod (s^2 - r), scaled so E(0) = 1.
EhrhartPolynomial with_q_roots(std::initializer_list<long> u_roots, int parity) {
  Polynomial p = Polynomial::monomial(Rational(1), static_cast<std::size_t>(parity));
  for (long r : u_roots) p *= Polynomial{Rational(-r), Rational(0), Rational(1)};
  Polynomial e = taylor_shift(p, Q(1, 2));
  e *= Rational(1) / e(Rational(0));
  return EhrhartPolynomial(e, e.degree());
}

}  // namespace

TEST_CASE("symmetric factorization") {
  {
    const auto f = symmetric_factorize(E({Rational(1), Rational(2)}));
    CHECK(f.parity == 1);
    CHECK(f.even_part == Polynomial{Rational(2)});
  }
  {
    const auto f = symmetric_factorize(E({Rational(1), Rational(3), Rational(3)}));
    CHECK(f.parity == 0);
    CHECK(f.even_part == Polynomial{Q(1, 4), Rational(3)});
  }
  {
    const auto f = symmetric_factorize(of("Adual(2) (+) Adual(2)"));
    CHECK(f.parity == 0);
    CHECK(f.even_part.degree() == 2);
  }
  CHECK_THROWS_AS(symmetric_factorize(from_delta(DeltaVector({Integer(1), Integer(2), Integer(0)}))),
                  SymmetryViolation);

  gen::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto e = from_delta(delta(gen::reflexive_composition(rng, 16)));
    const auto f = symmetric_factorize(e);
    CHECK(f.parity == e.dimension() % 2);
    CHECK(f.even_part.degree() == e.dimension() / 2);
    // E(s - 1/2) == s^parity q(s^2)
    Polynomial rebuilt;
    for (int i = 0; i <= f.even_part.degree(); ++i) {
      rebuilt += Polynomial::monomial(f.even_part.coefficient(static_cast<std::size_t>(i)),
                                      static_cast<std::size_t>(2 * i + f.parity));
    }
    CHECK(rebuilt == taylor_shift(e.polynomial(), Q(-1, 2)));
  }
}

TEST_CASE("CL verdicts") {
  CHECK(is_cl(of("Adual(2) (+) Adual(2)")).is_cl);
  CHECK_FALSE(is_cl(of("Adual(2) (+) Adual(6)")).is_cl);
  CHECK(is_cl(E({Rational(1), Rational(2)})).is_cl);
  CHECK(is_cl(of("Cr(5)")).is_cl);
  CHECK_THROWS_AS(is_cl(of("Cube(3)")), SymmetryViolation);

  const auto v = is_cl(of("Adual(2) (+) Adual(6)"));
  CHECK(v.nonreal_roots_of_q + v.positive_roots_of_q > 0);

  // q(u) = u^2 - 1: one positive root.
  const auto pos = is_cl_even_part(Polynomial{Rational(-1), Rational(0), Rational(1)});
  CHECK_FALSE(pos.is_cl);
  CHECK(pos.positive_roots_of_q == 1);
  CHECK(pos.nonreal_roots_of_q == 0);
  // q(u) = u^2 + 1: two non-real roots.
  const auto nonreal = is_cl_even_part(Polynomial{Rational(1), Rational(0), Rational(1)});
  CHECK(nonreal.nonreal_roots_of_q == 2);
  // q(u) = u (u + 1)^2: a zero root and a double root are both on the line.
  CHECK(is_cl_even_part(Polynomial{Rational(0), Rational(1), Rational(2), Rational(1)}).is_cl);
  CHECK(is_cl_even_part(Polynomial{Rational(3)}).is_cl);
}

TEST_CASE("delta with roots on the unit circle gives CL") {
  for (int d = 1; d <= 15; ++d) {
    CHECK(is_cl(from_delta(delta_cross(d))).is_cl);
    CHECK(is_cl(from_delta(delta_simplex(d))).is_cl);
  }
}

TEST_CASE("verdict invariant: CL iff both counts vanish") {
  gen::Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = is_cl(from_delta(delta(gen::reflexive_composition(rng, 24))));
    CHECK(v.is_cl == (v.nonreal_roots_of_q == 0 && v.positive_roots_of_q == 0));
  }
}

TEST_CASE("exact verdict agrees with floating-point roots on small compositions") {
  gen::Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const auto e = from_delta(delta(gen::reflexive_composition(rng, 10)));
    const double dist = float_oracle::max_distance_from_line(e);
    CHECK(is_cl(e).is_cl == (dist < 1e-6));
  }
}

TEST_CASE("R-interlacing") {
  CHECK(r_interlacing(E({Rational(1), Rational(2), Rational(2)}), E({Rational(1), Rational(2)})));
  for (int n = 1; n <= 15; ++n) {
    CHECK(r_interlacing(from_delta(delta_cross(n + 1)), from_delta(delta_cross(n))));
  }
  for (int n = 2; n <= 10; ++n) CHECK(r_interlacing(closed_A(n), closed_A(n - 1)));
  // Cr_3 vs Cr_1: degrees differ by two.
  CHECK_THROWS_AS(r_interlacing(from_delta(delta_cross(3)), from_delta(delta_cross(1))), DegreeMismatch);
  CHECK_THROWS_AS(r_interlacing(of("Adual(2) (+) Adual(6) (+) Cr(1)"), of("Adual(2) (+) Adual(6)")), NotCL);
}

TEST_CASE("R-interlacing on prescribed root sets") {
  // u = -9, -1 for f means roots -1/2 ± 3i, -1/2 ± i.
  CHECK(r_interlacing(with_q_roots({-9, -1}, 0), with_q_roots({-4}, 1)));
  CHECK(r_interlacing(with_q_roots({-4}, 1), with_q_roots({-1}, 0)));
  CHECK(r_interlacing(with_q_roots({-36, -4}, 1), with_q_roots({-16, -1}, 0)));
  CHECK_FALSE(r_interlacing(with_q_roots({-36, -16}, 1), with_q_roots({-4, -1}, 0)));
  CHECK_FALSE(r_interlacing(with_q_roots({-9, -4}, 0), with_q_roots({-1}, 1)));
  CHECK_FALSE(r_interlacing(with_q_roots({-4, -1}, 0), with_q_roots({-9}, 1)));
  CHECK_FALSE(r_interlacing(with_q_roots({-4}, 1), with_q_roots({-9}, 0)));
  CHECK_FALSE(r_interlacing(with_q_roots({-9, -1}, 0), with_q_roots({-1}, 1)));
  CHECK_FALSE(r_interlacing(with_q_roots({-16, -9, -1}, 0), with_q_roots({-4, -4}, 1)));
  CHECK_FALSE(r_interlacing(with_q_roots({-16, -16, -1}, 0), with_q_roots({-9, -4}, 1)));
  CHECK(is_cl(with_q_roots({-4, -4}, 1)).is_cl);
}

TEST_CASE("interlacing transfers through the mixing identities") {
  for (const auto id : {IdentityId::EQ1, IdentityId::EQ2, IdentityId::A1N, IdentityId::A3111}) {
    for (int n = 1; n <= 12; ++n) {
      const auto form = lemma_form(id, n);
      REQUIRE(form.has_value());
      CHECK(form->alpha > 0);
      CHECK(form->alpha < 1);
      CHECK(form->alpha + form->beta == 1);
      const Polynomial two_k_plus_one = Polynomial::linear(Rational(1), Rational(2));
      CHECK(form->e1.polynomial() ==
            form->alpha * form->e2.polynomial() * two_k_plus_one + form->beta * form->e3.polynomial());
      if (r_interlacing(form->e2, form->e3)) CHECK(r_interlacing(form->e1, form->e2));
    }
  }
}
