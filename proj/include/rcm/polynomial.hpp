#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rcm {

/// Dense integer polynomial, coefficients in ascending degree order.
using PolyZ = std::vector<mpz_class>;

PolyZ poly_mul(const PolyZ& a, const PolyZ& b);
PolyZ poly_add(const PolyZ& a, const PolyZ& b);
void poly_trim(PolyZ& p);
bool poly_eq(const PolyZ& a, const PolyZ& b);

/// x^h * q(x + 1/x) for q of degree h; the polynomial whose roots are
/// r + 1/r over pairs {r, 1/r}.
PolyZ expand_reciprocal_lift(const PolyZ& q);

/// Coefficients reversed (x^deg * p(1/x)).
PolyZ poly_reverse(const PolyZ& p);

std::string poly_str(const PolyZ& p, const std::string& var = "x");

}  // namespace rcm
