#include "clsum/identities.hpp"

#include <stdexcept>
#include <utility>

namespace clsum {

namespace {

struct NameEntry {
  IdentityId id;
  std::string_view name;
  std::string_view formula;
};

constexpr std::array<NameEntry, 14> kNames = {{
    {IdentityId::P2N, "P2N", "E[Adual(1) (+) Adual(n)] = (k+1)^(n+1) + k^(n+1)"},
    {IdentityId::EQ1, "EQ1",
     "E[Adual(2) (+) Adual(1)^n] = 3/(2n+4) E[Adual(1)^(n+1)](2k+1) + (2n+1)/(2n+4) E[Adual(1)^n]"},
    {IdentityId::EQ2, "EQ2",
     "E[Adual(3) (+) Adual(1)^n] = 3/(n+3) E[Adual(1)^(n+2)](2k+1) + n/(n+3) E[Adual(1)^(n+1)]"},
    {IdentityId::A1N, "A1N", "E[A(1) (+) A(n)] = 1/(n+1) E[A(n)](2k+1) + n/(n+1) E[A(n-1)]"},
    {IdentityId::A3111, "A3111",
     "E[A(3) (+) A(1)^n] = 5/(2(n+3)) E[Cr(n+2)](2k+1) + (2n+1)/(2(n+3)) E[Cr(n+1)]"},
    {IdentityId::REM_A, "REM_A",
     "E[Adual(3) (+) Adual(2)^n] = 2/(2n+3) E[Adual(2)^(n+1)](2k+1) + (2n+1)/(2n+3) E[Adual(1) (+) Adual(2)^n]"},
    {IdentityId::REM_B, "REM_B",
     "E[Adual(3) (+) Adual(1)^n] = 2/(n+3) E[Adual(2) (+) Adual(1)^n](2k+1) + (2n+1)/(n+3) E[Adual(1)^(n+1)] "
     "- n/(n+3) E[Adual(1)^(n-1)]"},
    {IdentityId::REM_C, "REM_C",
     "E[Adual(4) (+) Adual(1)^n] = 5/(2n+8) E[Adual(3) (+) Adual(1)^n](2k+1) + 5(4n+2)/(3(2n+8)) "
     "E[Adual(2) (+) Adual(1)^n] - (14n+1)/(3(2n+8)) E[Adual(1)^n]"},
    {IdentityId::REM_D, "REM_D",
     "E[Adual(2)^2 (+) Adual(1)^n] = 3/(2n+8) E[Adual(2) (+) Adual(1)^(n+1)](2k+1) + (2n+3)/(2n+8) "
     "E[Adual(2) (+) Adual(1)^n] + 2/(2n+8) E[Adual(1)^n]"},
    {IdentityId::REM_E1, "REM_E1",
     "E[Adual(3) (+) Adual(1)^n] = 2/(n+3) E[Adual(2) (+) Adual(1)^n](2k+1) + (n+1)/(n+3) "
     "((2n+1)/(n+1) E[Adual(1)^(n+1)] - n/(n+1) E[Adual(1)^(n-1)])"},
    {IdentityId::REM_E2, "REM_E2",
     "(2n+1)/(n+1) E[Adual(1)^(n+1)] - n/(n+1) E[Adual(1)^(n-1)] = (2n+1)/(n+1)^2 E[Adual(1)^n](2k+1) "
     "+ n^2/(n+1)^2 E[Adual(1)^(n-1)]"},
    {IdentityId::REM_F1, "REM_F1",
     "E[Adual(4) (+) Adual(1)^n] = 5/(2n+8) E[Adual(3) (+) Adual(1)^n](2k+1) + (2n+3)/(2n+8) "
     "(5(4n+2)/(3(2n+3)) E[Adual(2) (+) Adual(1)^n] - (14n+1)/(3(2n+3)) E[Adual(1)^n])"},
    {IdentityId::REM_F2, "REM_F2",
     "5(4n+2)/(3(2n+3)) E[Adual(2) (+) Adual(1)^n] - (14n+1)/(3(2n+3)) E[Adual(1)^n] = "
     "5(2n+1)/((2n+3)(n+2)) E[Adual(1)^(n+1)](2k+1) + (n-1)(2n-1)/((2n+3)(n+2)) E[Adual(1)^n]"},
    {IdentityId::REM_FPRIME, "REM_FPRIME",
     "E[Adual(4) (+) Adual(1)^n] = 15/((2n+8)(n+3)) E[Adual(1)^(n+2)](2k+1)^2 + 15(n^2+3n+1)/(2(n+2)(n+3)(n+4)) "
     "E[Adual(1)^(n+1)](2k+1) + (2n-1)(n-1)/(2(n+2)(n+4)) E[Adual(1)^n]"},
}};

const NameEntry& entry(IdentityId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e;
  }
  throw std::invalid_argument("unknown identity");
}

Rational q(long num, long den) { return make_rational(num, den); }

// Adual(m) (+) Adual(1)^ones
DeltaVector dual_with_ones(int m, int ones) {
  const DeltaVector tail = free_sum_power(delta_A_dual(1), ones);
  return m == 0 ? tail : free_sum(delta_A_dual(m), tail);
}

DeltaVector cross(int d) { return d == 0 ? DeltaVector::point() : delta_cross(d); }

DeltaVector root_A(int d) { return d == 0 ? DeltaVector::point() : delta_A(d); }

Term t(Rational w, DeltaVector d, int odd = 0) { return {std::move(w), std::move(d), odd}; }

}  // namespace

std::string_view identity_name(IdentityId id) { return entry(id).name; }

std::string_view identity_formula(IdentityId id) { return entry(id).formula; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

IdentityInstance build_identity(IdentityId id, int n) {
  if (n < 1) throw std::out_of_range("identity parameter n must be >= 1");
  const long N = n;
  IdentityInstance inst{id, n, {}, {}};
  auto& L = inst.lhs;
  auto& R = inst.rhs;
  switch (id) {
    case IdentityId::P2N: {
      L.push_back(t(1, free_sum(delta_A_dual(1), delta_A_dual(n))));
      const auto e = static_cast<unsigned>(n + 1);
      R.push_back({1, pow(Polynomial::linear(1, 1), e) + Polynomial::monomial(1, e), 0});
      break;
    }
    case IdentityId::EQ1:
      L.push_back(t(1, dual_with_ones(2, n)));
      R.push_back(t(q(3, 2 * N + 4), cross(n + 1), 1));
      R.push_back(t(q(2 * N + 1, 2 * N + 4), cross(n)));
      break;
    case IdentityId::EQ2:
      L.push_back(t(1, dual_with_ones(3, n)));
      R.push_back(t(q(3, N + 3), cross(n + 2), 1));
      R.push_back(t(q(N, N + 3), cross(n + 1)));
      break;
    case IdentityId::A1N:
      L.push_back(t(1, free_sum(delta_A(1), delta_A(n))));
      R.push_back(t(q(1, N + 1), root_A(n), 1));
      R.push_back(t(q(N, N + 1), root_A(n - 1)));
      break;
    case IdentityId::A3111:
      L.push_back(t(1, free_sum(delta_A(3), free_sum_power(delta_A(1), n))));
      R.push_back(t(q(5, 2 * (N + 3)), cross(n + 2), 1));
      R.push_back(t(q(2 * N + 1, 2 * (N + 3)), cross(n + 1)));
      break;
    case IdentityId::REM_A:
      L.push_back(t(1, free_sum(delta_A_dual(3), free_sum_power(delta_A_dual(2), n))));
      R.push_back(t(q(2, 2 * N + 3), free_sum_power(delta_A_dual(2), n + 1), 1));
      R.push_back(t(q(2 * N + 1, 2 * N + 3), free_sum(delta_A_dual(1), free_sum_power(delta_A_dual(2), n))));
      break;
    case IdentityId::REM_B:
      L.push_back(t(1, dual_with_ones(3, n)));
      R.push_back(t(q(2, N + 3), dual_with_ones(2, n), 1));
      R.push_back(t(q(2 * N + 1, N + 3), cross(n + 1)));
      R.push_back(t(-q(N, N + 3), cross(n - 1)));
      break;
    case IdentityId::REM_C:
      L.push_back(t(1, dual_with_ones(4, n)));
      R.push_back(t(q(5, 2 * N + 8), dual_with_ones(3, n), 1));
      R.push_back(t(q(5 * (4 * N + 2), 3 * (2 * N + 8)), dual_with_ones(2, n)));
      R.push_back(t(-q(14 * N + 1, 3 * (2 * N + 8)), cross(n)));
      break;
    case IdentityId::REM_D:
      L.push_back(t(1, free_sum(delta_A_dual(2), dual_with_ones(2, n))));
      R.push_back(t(q(3, 2 * N + 8), dual_with_ones(2, n + 1), 1));
      R.push_back(t(q(2 * N + 3, 2 * N + 8), dual_with_ones(2, n)));
      R.push_back(t(q(2, 2 * N + 8), cross(n)));
      break;
    case IdentityId::REM_E1: {
      L.push_back(t(1, dual_with_ones(3, n)));
      R.push_back(t(q(2, N + 3), dual_with_ones(2, n), 1));
      const Rational outer = q(N + 1, N + 3);
      R.push_back(t(outer * q(2 * N + 1, N + 1), cross(n + 1)));
      R.push_back(t(-outer * q(N, N + 1), cross(n - 1)));
      break;
    }
    case IdentityId::REM_E2:
      L.push_back(t(q(2 * N + 1, N + 1), cross(n + 1)));
      L.push_back(t(-q(N, N + 1), cross(n - 1)));
      R.push_back(t(q(2 * N + 1, (N + 1) * (N + 1)), cross(n), 1));
      R.push_back(t(q(N * N, (N + 1) * (N + 1)), cross(n - 1)));
      break;
    case IdentityId::REM_F1: {
      L.push_back(t(1, dual_with_ones(4, n)));
      R.push_back(t(q(5, 2 * N + 8), dual_with_ones(3, n), 1));
      const Rational outer = q(2 * N + 3, 2 * N + 8);
      R.push_back(t(outer * q(5 * (4 * N + 2), 3 * (2 * N + 3)), dual_with_ones(2, n)));
      R.push_back(t(-outer * q(14 * N + 1, 3 * (2 * N + 3)), cross(n)));
      break;
    }
    case IdentityId::REM_F2:
      L.push_back(t(q(5 * (4 * N + 2), 3 * (2 * N + 3)), dual_with_ones(2, n)));
      L.push_back(t(-q(14 * N + 1, 3 * (2 * N + 3)), cross(n)));
      R.push_back(t(q(5 * (2 * N + 1), (2 * N + 3) * (N + 2)), cross(n + 1), 1));
      R.push_back(t(q((N - 1) * (2 * N - 1), (2 * N + 3) * (N + 2)), cross(n)));
      break;
    case IdentityId::REM_FPRIME:
      L.push_back(t(1, dual_with_ones(4, n)));
      R.push_back(t(q(15, (2 * N + 8) * (N + 3)), cross(n + 2), 2));
      R.push_back(t(q(15 * (N * N + 3 * N + 1), 2 * (N + 2) * (N + 3) * (N + 4)), cross(n + 1), 1));
      R.push_back(t(q((2 * N - 1) * (N - 1), 2 * (N + 2) * (N + 4)), cross(n)));
      break;
  }
  return inst;
}

namespace {

Polynomial evaluate_side(const std::vector<Term>& side) {
  const Polynomial odd = Polynomial::linear(1, 2);
  Polynomial sum;
  for (const auto& term : side) {
    Polynomial base = std::holds_alternative<DeltaVector>(term.base)
                          ? from_delta(std::get<DeltaVector>(term.base)).polynomial()
                          : std::get<Polynomial>(term.base);
    sum += base * pow(odd, static_cast<unsigned>(term.odd_power)) * term.weight;
  }
  return sum;
}

// (2t d/dt + 1) applied to a truncated power series.
std::vector<Rational> euler_operator(const std::vector<Rational>& s) {
  std::vector<Rational> t_derivative(s.size());
  for (std::size_t k = 1; k < s.size(); ++k) {
    // d/dt shifts coefficient k down to k-1 with factor k; multiplying by t shifts it back.
    t_derivative[k] = s[k] * static_cast<long>(k);
  }
  std::vector<Rational> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = 2 * t_derivative[k] + s[k];
  return out;
}

std::vector<Rational> series_side(const std::vector<Term>& side, int K) {
  std::vector<Rational> sum(static_cast<std::size_t>(K) + 1);
  for (const auto& term : side) {
    std::vector<Rational> s(static_cast<std::size_t>(K) + 1);
    if (std::holds_alternative<DeltaVector>(term.base)) {
      const auto ints = series_coefficients(std::get<DeltaVector>(term.base), K);
      for (std::size_t k = 0; k < ints.size(); ++k) s[k] = Rational(ints[k]);
    } else {
      const auto& p = std::get<Polynomial>(term.base);
      for (int k = 0; k <= K; ++k) s[static_cast<std::size_t>(k)] = p(Rational(k));
    }
    for (int i = 0; i < term.odd_power; ++i) s = euler_operator(s);
    for (std::size_t k = 0; k < s.size(); ++k) sum[k] += term.weight * s[k];
  }
  return sum;
}

}  // namespace

VerifyResult verify(IdentityId id, int n) {
  const auto inst = build_identity(id, n);
  Polynomial residual = evaluate_side(inst.lhs) - evaluate_side(inst.rhs);
  const bool holds = residual.is_zero();
  return {holds, std::move(residual)};
}

bool verify_series_form(IdentityId id, int n, int K) {
  if (K < 0) throw std::invalid_argument("verify_series_form: K must be >= 0");
  const auto inst = build_identity(id, n);
  return series_side(inst.lhs, K) == series_side(inst.rhs, K);
}

std::optional<LemmaForm> lemma_form(IdentityId id, int n) {
  switch (id) {
    case IdentityId::EQ1:
    case IdentityId::EQ2:
    case IdentityId::A1N:
    case IdentityId::A3111: {
      const auto inst = build_identity(id, n);
      const auto& lhs = std::get<DeltaVector>(inst.lhs.at(0).base);
      const auto& e2 = std::get<DeltaVector>(inst.rhs.at(0).base);
      const auto& e3 = std::get<DeltaVector>(inst.rhs.at(1).base);
      return LemmaForm{from_delta(lhs), from_delta(e2), from_delta(e3), inst.rhs[0].weight, inst.rhs[1].weight};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace clsum
