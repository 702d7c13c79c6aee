#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clsum/delta.hpp"

namespace clsum {

enum class Family { A, Adual, Cr, T, Cube, Peq };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct Atom {
  Family family;
  std::vector<int> params;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Free-sum expression over the polytope catalog.
///
///   expr := term { "(+)" term }
///   term := atom [ "^" integer ]
///   atom := name "(" integer { "," integer } ")" | "(" expr ")"
///   name := "A" | "Adual" | "Cr" | "T" | "Cube" | "Peq"
class Expr {
 public:
  enum class Kind { Atom, Sum, Power };

  static Expr atom(Family family, std::vector<int> params);
  static Expr sum(std::vector<Expr> operands);
  static Expr power(Expr base, int exponent);

  Kind kind() const { return kind_; }
  const Atom& as_atom() const { return atom_; }
  const std::vector<Expr>& operands() const { return operands_; }
  int exponent() const { return exponent_; }

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  Kind kind_ = Kind::Atom;
  Atom atom_{Family::A, {}};
  std::vector<Expr> operands_;
  int exponent_ = 1;
};

/// Throws ParseError (with the byte offset) for syntax errors, unknown
/// families, wrong arity and parameters or exponents below 1.
Expr parse(std::string_view input);

/// Canonical spelling, e.g. "Adual(2) (+) Adual(1)^3".
std::string to_string(const Expr& e);

/// Dimension without forming any δ-vector.
long dimension(const Expr& e);

DeltaVector atom_delta(const Atom& a);
DeltaVector delta(const Expr& e);

/// The summands with powers expanded and nested sums flattened.
std::vector<Atom> summands(const Expr& e);

}  // namespace clsum
