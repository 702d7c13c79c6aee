#pragma once

// Integer-coefficient helpers behind the Sturm and gcd code. Coefficients
// are stored low degree first, with no trailing zeros.

#include <vector>

#include "clsum/exact.hpp"
#include "clsum/polynomial.hpp"

namespace clsum::detail {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p);
int degree(const IntPoly& p);

/// Positive rational multiple of p with coprime integer coefficients.
IntPoly primitive_integer(const Polynomial& p);

/// Divides by the (positive) content in place.
void make_primitive(IntPoly& p);

/// lc(b)^(deg a - deg b + 1) * a mod b. Also reports sign(lc(b))^(deg a - deg b + 1).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b, int& scale_sign);

/// Sign of p(num/den) for den > 0.
int sign_at(const IntPoly& p, const Integer& num, const Integer& den);

/// Primitive gcd via the primitive polynomial remainder sequence.
IntPoly gcd(IntPoly a, IntPoly b);

}  // namespace clsum::detail
