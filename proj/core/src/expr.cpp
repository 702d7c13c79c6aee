#include "clsum/expr.hpp"

#include <array>
#include <cctype>
#include <climits>
#include <utility>

#include "clsum/errors.hpp"
#include "clsum/posets.hpp"

namespace clsum {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilies = {{
    {Family::A, "A"},
    {Family::Adual, "Adual"},
    {Family::Cr, "Cr"},
    {Family::T, "T"},
    {Family::Cube, "Cube"},
    {Family::Peq, "Peq"},
}};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  // "(+)" with optional inner whitespace; consumed only on a full match.
  bool try_free_sum() {
    skip_ws();
    std::size_t p = pos_;
    auto ws = [&] {
      while (p < src_.size() && std::isspace(static_cast<unsigned char>(src_[p]))) ++p;
    };
    if (p >= src_.size() || src_[p] != '(') return false;
    ++p;
    ws();
    if (p >= src_.size() || src_[p] != '+') return false;
    ++p;
    ws();
    if (p >= src_.size() || src_[p] != ')') return false;
    pos_ = p + 1;
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != c) {
      fail(std::string("expected '") + c + "'" + (pos_ >= src_.size() ? " before end of input" : ""));
    }
    ++pos_;
  }

  int parse_integer(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      pos_ = start;
      fail(std::string("expected integer ") + what);
    }
    long value = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      value = value * 10 + (src_[pos_] - '0');
      if (value > INT_MAX) {
        pos_ = start;
        fail(std::string("integer ") + what + " is too large");
      }
      ++pos_;
    }
    if (negative) value = -value;
    if (value < 1) {
      pos_ = start;
      fail(std::string(what) + " must be >= 1");
    }
    return static_cast<int>(value);
  }

  Expr parse_expr() {
    std::vector<Expr> terms;
    terms.push_back(parse_term());
    while (try_free_sum()) terms.push_back(parse_term());
    if (terms.size() == 1) return std::move(terms.front());
    return Expr::sum(std::move(terms));
  }

  Expr parse_term() {
    Expr base = parse_atom();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      const int e = parse_integer("exponent");
      return Expr::power(std::move(base), e);
    }
    return base;
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected a polytope before end of input");
    if (src_[pos_] == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a polytope name");
    const auto family = family_from_name(name);
    if (!family) {
      pos_ = start;
      fail("unknown family '" + std::string(name) + "'");
    }
    expect('(');
    std::vector<int> params;
    params.push_back(parse_integer("parameter"));
    skip_ws();
    while (pos_ < src_.size() && src_[pos_] == ',') {
      ++pos_;
      params.push_back(parse_integer("parameter"));
      skip_ws();
    }
    if (*family != Family::Peq && params.size() != 1) {
      pos_ = start;
      fail(std::string(name) + " takes exactly one parameter");
    }
    expect(')');
    return Expr::atom(*family, std::move(params));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void collect(const Expr& e, std::vector<Atom>& out) {
  switch (e.kind()) {
    case Expr::Kind::Atom:
      out.push_back(e.as_atom());
      break;
    case Expr::Kind::Sum:
      for (const auto& op : e.operands()) collect(op, out);
      break;
    case Expr::Kind::Power:
      for (int i = 0; i < e.exponent(); ++i) collect(e.operands().front(), out);
      break;
  }
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilies) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [fam, n] : kFamilies) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

Expr Expr::atom(Family family, std::vector<int> params) {
  Expr e;
  e.kind_ = Kind::Atom;
  e.atom_ = Atom{family, std::move(params)};
  return e;
}

Expr Expr::sum(std::vector<Expr> operands) {
  Expr e;
  e.kind_ = Kind::Sum;
  e.operands_ = std::move(operands);
  return e;
}

Expr Expr::power(Expr base, int exponent) {
  Expr e;
  e.kind_ = Kind::Power;
  e.operands_.push_back(std::move(base));
  e.exponent_ = exponent;
  return e;
}

Expr parse(std::string_view input) { return Parser(input).parse_all(); }

std::string to_string(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Atom: {
      std::string s(family_name(e.as_atom().family));
      s += '(';
      for (std::size_t i = 0; i < e.as_atom().params.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e.as_atom().params[i]);
      }
      return s + ')';
    }
    case Expr::Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < e.operands().size(); ++i) {
        if (i) s += " (+) ";
        const auto& op = e.operands()[i];
        s += op.kind() == Expr::Kind::Sum ? "(" + to_string(op) + ")" : to_string(op);
      }
      return s;
    }
    case Expr::Kind::Power: {
      const auto& base = e.operands().front();
      const std::string inner = to_string(base);
      return (base.kind() == Expr::Kind::Atom ? inner : "(" + inner + ")") + "^" + std::to_string(e.exponent());
    }
  }
  return {};
}

namespace {

long atom_dimension(const Atom& a) {
  if (a.family == Family::Peq) {
    long d = 0;
    for (int n : a.params) d += n - 1;
    return d;
  }
  return a.params.front();
}

}  // namespace

long dimension(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Atom:
      return atom_dimension(e.as_atom());
    case Expr::Kind::Sum: {
      long d = 0;
      for (const auto& op : e.operands()) d += dimension(op);
      return d;
    }
    case Expr::Kind::Power:
      return dimension(e.operands().front()) * e.exponent();
  }
  return 0;
}

DeltaVector atom_delta(const Atom& a) {
  switch (a.family) {
    case Family::A:
      return delta_A(a.params.front());
    case Family::Adual:
      return delta_A_dual(a.params.front());
    case Family::Cr:
      return delta_cross(a.params.front());
    case Family::T:
      return delta_simplex(a.params.front());
    case Family::Cube:
      return delta_cube(a.params.front());
    case Family::Peq: {
      // Equatorial polytope: the palindromic part of δ(O_P), i.e. ⊕ Adual(n_i - 1).
      DeltaVector out = DeltaVector::point();
      for (int n : a.params) {
        if (n >= 2) out = free_sum(out, delta_A_dual(n - 1));
      }
      return out;
    }
  }
  return DeltaVector::point();
}

DeltaVector delta(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Atom:
      return atom_delta(e.as_atom());
    case Expr::Kind::Sum: {
      DeltaVector out = DeltaVector::point();
      for (const auto& op : e.operands()) out = free_sum(out, delta(op));
      return out;
    }
    case Expr::Kind::Power:
      return free_sum_power(delta(e.operands().front()), e.exponent());
  }
  return DeltaVector::point();
}

std::vector<Atom> summands(const Expr& e) {
  std::vector<Atom> out;
  collect(e, out);
  return out;
}

}  // namespace clsum
