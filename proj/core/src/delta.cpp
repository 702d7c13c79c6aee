#include "clsum/delta.hpp"

#include <sstream>
#include <stdexcept>

namespace clsum {

namespace {

void require_positive(int d, const char* what) {
  if (d < 1) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

}  // namespace

DeltaVector::DeltaVector(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("delta vector must be nonempty");
  if (coeffs_.front() != 1) throw std::invalid_argument("delta vector must have delta_0 = 1");
  for (const auto& c : coeffs_) {
    if (c < 0) throw std::invalid_argument("delta vector entries must be nonnegative");
  }
}

DeltaVector::DeltaVector(std::vector<Integer> coeffs, int dimension) : DeltaVector(std::move(coeffs)) {
  if (dimension < this->dimension()) {
    throw std::invalid_argument("delta vector longer than dimension + 1");
  }
  coeffs_.resize(static_cast<std::size_t>(dimension) + 1, Integer(0));
}

DeltaVector DeltaVector::point() { return DeltaVector({Integer(1)}); }

Integer DeltaVector::sum() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string DeltaVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].get_str();
  }
  os << ')';
  return os.str();
}

DeltaVector delta_A_dual(int d) {
  require_positive(d, "delta_A_dual");
  return DeltaVector(eulerian_row(d + 1), d);
}

DeltaVector delta_A(int d) {
  require_positive(d, "delta_A");
  std::vector<Integer> v;
  for (int j = 0; j <= d; ++j) {
    const Integer c = binomial(d, j);
    v.push_back(c * c);
  }
  return DeltaVector(std::move(v));
}

DeltaVector delta_cross(int d) {
  require_positive(d, "delta_cross");
  std::vector<Integer> v;
  for (int j = 0; j <= d; ++j) v.push_back(binomial(d, j));
  return DeltaVector(std::move(v));
}

DeltaVector delta_simplex(int d) {
  require_positive(d, "delta_simplex");
  return DeltaVector(std::vector<Integer>(static_cast<std::size_t>(d) + 1, Integer(1)));
}

DeltaVector delta_cube(int n) {
  require_positive(n, "delta_cube");
  return DeltaVector(eulerian_row(n), n);
}

DeltaVector free_sum(const DeltaVector& a, const DeltaVector& b) {
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Integer> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return DeltaVector(std::move(out));
}

DeltaVector free_sum_power(const DeltaVector& a, int times) {
  if (times < 0) throw std::invalid_argument("free_sum_power: negative exponent");
  DeltaVector out = DeltaVector::point();
  for (int i = 0; i < times; ++i) out = free_sum(out, a);
  return out;
}

bool is_palindromic(const DeltaVector& a) {
  const auto& c = a.coefficients();
  for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j) {
    if (c[i] != c[j]) return false;
  }
  return true;
}

}  // namespace clsum
