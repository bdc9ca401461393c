#pragma once

#include "rcm/bigfloat.hpp"
#include "rcm/funcexpr.hpp"

namespace rcm {

/// eta(tau) for Im tau > 0, accurate to about 2^(-prec+8) relative.
/// tau is moved into the standard fundamental domain first, tracking the
/// zeta_24 multiplier exactly as an integer exponent and the sqrt(-i tau)
/// factors numerically, then the sparse pentagonal-number series is summed.
BigComplex dedekind_eta(const BigComplex& tau, long prec);

struct GValues {
  BigComplex g0, g1, g2, g3;
  const BigComplex& operator[](int i) const {
    switch (i) {
      case 0: return g0;
      case 1: return g1;
      case 2: return g2;
      default: return g3;
    }
  }
};

/// (g0, g1, g2, g3) of the eta-quotient family; g0 g1 g2 g3 = sqrt(3).
GValues g_values(const BigComplex& tau, long prec);

/// R2 = eta(3 tau) eta(tau/3 + 2/3) / eta(tau)^2 = 3^(-1/2) g2 g3,
/// R4 = eta(tau/3) eta(tau/3 + 1/3) / eta(tau)^2 = zeta_24 g0 g1.
std::pair<BigComplex, BigComplex> r2_r4(const BigComplex& tau, long prec);

/// tau_0 = (-1 + i sqrt(n)) / 2.
BigComplex tau0_of(long n, long prec);

/// t_n = (g2 g3)(tau_0); real positive for the tabulated n.
BigComplex t_value(long n, long prec);
/// H_n = 27 / t_n^12.
BigComplex h_value(long n, long prec);
/// A_n = H_n + 1/H_n.
BigComplex a_value(long n, long prec);
/// j at tau_0 through j = (t^6 - 27 t^-6 - 6)^3.
BigComplex j_value(long n, long prec);
/// j recovered from one Y = g_i^12 by the quartic Y^4+36Y^3+270Y^2+756Y+729 = jY.
BigComplex j_from_quartic(const BigComplex& y);

/// Numeric value of a formal expression at tau.
BigComplex evaluate_expr(const FunctionExpr& h, const BigComplex& tau, long prec);

}  // namespace rcm
