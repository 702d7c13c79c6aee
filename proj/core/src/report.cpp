#include "clsum/report.hpp"

#include <sstream>

#include <json.hpp>

#include "clsum/errors.hpp"

namespace clsum {

namespace {

using Json = nlohmann::ordered_json;

void check_degree(const Expr& e, long max_degree) {
  const long d = dimension(e);
  if (d > max_degree) {
    throw GuardExceeded("dimension " + std::to_string(d) + " exceeds the degree guard " +
                        std::to_string(max_degree));
  }
}

Json rational_pair(const Rational& q) {
  return Json::array({q.get_num().get_str(), q.get_den().get_str()});
}

Json coeff_list(const Polynomial& p) {
  Json out = Json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(rational_pair(p.coefficient(i)));
  return out;
}

}  // namespace

Report evaluate(const Expr& e, long max_degree, bool with_roots) {
  check_degree(e, max_degree);
  Report r;
  r.expr = to_string(e);
  r.dimension = dimension(e);
  r.delta = delta(e);
  r.ehrhart = from_delta(r.delta);
  r.palindromic = is_palindromic(r.delta);
  if (r.palindromic) {
    r.symmetric = symmetric_factorize(r.ehrhart);
    r.cl = is_cl_even_part(r.symmetric->even_part);
    if (with_roots && r.symmetric->even_part.degree() > 0) {
      r.q_real_roots = isolate_real_roots(r.symmetric->even_part);
    }
  }
  return r;
}

bool evaluate_cl(const Expr& e, long max_degree) {
  check_degree(e, max_degree);
  const DeltaVector d = delta(e);
  if (!is_palindromic(d)) return false;
  return is_cl(from_delta(d)).is_cl;
}

std::string to_json(const Report& r) {
  Json j;
  j["expr"] = r.expr;
  j["dimension"] = r.dimension;
  Json delta = Json::array();
  for (const auto& c : r.delta.coefficients()) delta.push_back(c.get_str());
  j["delta"] = delta;
  j["ehrhart"] = Json{{"coeffs", coeff_list(r.ehrhart.polynomial())},
                      {"text", r.ehrhart.polynomial().to_string("k")}};
  j["palindromic"] = r.palindromic;
  j["cl"] = r.cl ? Json(r.cl->is_cl) : Json(nullptr);
  if (r.symmetric && r.cl) {
    Json roots = Json::array();
    for (const auto& iv : r.q_real_roots) {
      roots.push_back(Json{{"lo", rational_pair(iv.lo)},
                           {"hi", rational_pair(iv.hi)},
                           {"multiplicity", iv.multiplicity}});
    }
    j["q_diagnostics"] = Json{{"parity", r.symmetric->parity},
                              {"q_coeffs", coeff_list(r.symmetric->even_part)},
                              {"nonreal_roots", r.cl->nonreal_roots_of_q},
                              {"positive_roots", r.cl->positive_roots_of_q},
                              {"real_root_intervals", roots}};
  } else {
    j["q_diagnostics"] = nullptr;
  }
  return j.dump(2);
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "expr:        " << r.expr << '\n';
  os << "dimension:   " << r.dimension << '\n';
  os << "delta:       " << r.delta.to_string() << '\n';
  os << "ehrhart:     " << r.ehrhart.polynomial().to_string("k") << '\n';
  os << "palindromic: " << (r.palindromic ? "yes" : "no") << '\n';
  if (r.cl) {
    os << "CL:          " << (r.cl->is_cl ? "yes" : "no") << '\n';
    os << "q(u):        " << r.symmetric->even_part.to_string("u") << "  (E(s-1/2) = s^"
       << r.symmetric->parity << " q(s^2))\n";
    os << "q roots:     " << r.q_real_roots.size() << " real, " << r.cl->nonreal_roots_of_q
       << " non-real, " << r.cl->positive_roots_of_q << " positive\n";
  } else {
    os << "CL:          no (not reflexive)\n";
  }
  return os.str();
}

}  // namespace clsum
