#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "clsum/delta.hpp"
#include "clsum/ehrhart.hpp"
#include "clsum/exact.hpp"
#include "clsum/polynomial.hpp"

namespace clsum {

/// Linear relations among Ehrhart polynomials of free sums of A_d^∨, A_d and
/// cross polytopes, each holding for every n >= 1.
enum class IdentityId {
  P2N,       // E[Adual(1) (+) Adual(n)] = (k+1)^(n+1) + k^(n+1)
  EQ1,       // E[Adual(2) (+) Adual(1)^n] via Cr_(n+1), Cr_n
  EQ2,       // E[Adual(3) (+) Adual(1)^n] via Cr_(n+2), Cr_(n+1)
  A1N,       // E[A(1) (+) A(n)] via A_n, A_(n-1)
  A3111,     // E[A(3) (+) A(1)^n] via Cr_(n+2), Cr_(n+1)
  REM_A,
  REM_B,
  REM_C,
  REM_D,
  REM_E1,
  REM_E2,
  REM_F1,
  REM_F2,
  REM_FPRIME,
};

inline constexpr std::array<IdentityId, 14> kAllIdentities = {
    IdentityId::P2N,   IdentityId::EQ1,   IdentityId::EQ2,   IdentityId::A1N,    IdentityId::A3111,
    IdentityId::REM_A, IdentityId::REM_B, IdentityId::REM_C, IdentityId::REM_D,  IdentityId::REM_E1,
    IdentityId::REM_E2, IdentityId::REM_F1, IdentityId::REM_F2, IdentityId::REM_FPRIME,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
/// Human-readable statement of the identity in terms of n and k.
std::string_view identity_formula(IdentityId id);

/// weight * E_base(k) * (2k+1)^odd_power. The base is either a δ-vector
/// (through f^Ehr) or an explicit polynomial in k.
struct Term {
  Rational weight;
  std::variant<DeltaVector, Polynomial> base;
  int odd_power = 0;
};

struct IdentityInstance {
  IdentityId id;
  int n;
  std::vector<Term> lhs;
  std::vector<Term> rhs;
};

/// Throws std::out_of_range for n < 1.
IdentityInstance build_identity(IdentityId id, int n);

struct VerifyResult {
  bool holds = false;
  Polynomial residual;  // lhs - rhs
};

VerifyResult verify(IdentityId id, int n);

/// Checks the generating-function form on coefficients t^0..t^K: each
/// (2k+1) factor becomes the operator 2t d/dt + 1 on the Ehrhart series,
/// and each series comes from power-series division of δ(t) by (1-t)^(d+1).
bool verify_series_form(IdentityId id, int n, int K);

/// E1 = alpha * E2 * (2k+1) + (1 - alpha) * E3, the shape that transfers
/// R-interlacing from (E2, E3) to (E1, E2).
struct LemmaForm {
  EhrhartPolynomial e1;
  EhrhartPolynomial e2;
  EhrhartPolynomial e3;
  Rational alpha;
  Rational beta;  // coefficient of E3 as stated; alpha + beta == 1 is checked by tests
};

/// Available for EQ1, EQ2, A1N and A3111; std::nullopt otherwise.
std::optional<LemmaForm> lemma_form(IdentityId id, int n);

}  // namespace clsum
