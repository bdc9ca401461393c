#pragma once

#include <array>
#include <string>
#include <vector>

#include "rcm/cyclotomic.hpp"

namespace rcm {

/// Element of Q(zeta_72): cyclotomic integer numerator over a positive
/// integer denominator, kept in lowest terms.
struct CycRat {
  CycInt num;
  mpz_class den{1};

  CycRat() = default;
  CycRat(CycInt n, mpz_class d) : num(std::move(n)), den(std::move(d)) { normalize(); }
  static CycRat integer(long v) { return CycRat(CycInt::integer(v), 1); }
  static CycRat of(const mpq_class& q) {
    return CycRat(CycInt::integer(q.get_num()), q.get_den());
  }

  void normalize();
  bool is_zero() const { return num.is_zero(); }
  bool operator==(const CycRat& o) const { return num == o.num && den == o.den; }

  CycRat operator+(const CycRat& o) const;
  CycRat operator*(const CycRat& o) const;
  CycRat operator-() const { return CycRat(-num, den); }
  CycRat times(const RootOfUnity& r) const { return CycRat(num * r.to_cyc(), den); }
  CycRat sigma(long d) const { return CycRat(galois_sigma(d, num), den); }
  /// Multiply by sqrt(3)^k for any integer k (odd negative powers stay exact
  /// through sqrt(3)^-1 = sqrt(3)/3).
  CycRat times_sqrt3_pow(long k) const;

  BigComplex embed(long prec) const;
  std::string str() const;
};

/// Finite formal sum of Laurent monomials c * g0^e0 g1^e1 g2^e2 g3^e3.
/// Canonical form: every exponent vector is shifted so its minimum entry is
/// zero, absorbing g0*g1*g2*g3 = sqrt(3) into the coefficient; terms are
/// merged and sorted, zero terms dropped. Equality of canonical forms is
/// used as expression equality.
struct FunctionExpr {
  struct Term {
    CycRat coeff;
    std::array<int, 4> e{};
  };
  std::vector<Term> terms;

  static FunctionExpr monomial(CycRat c, std::array<int, 4> e);
  /// g_i^k
  static FunctionExpr g_power(int i, int k);
  /// H_n as a function: 27 * (g2 g3)^-12
  static FunctionExpr H_expr();
  /// A_n as a function: 27 (g2 g3)^-12 + (g2 g3)^12 / 27
  static FunctionExpr A_expr();
  /// Parse a small set of names: "Hn", "An", "g<i>-<k>" (e.g. "g2-12").
  static FunctionExpr named(const std::string& name);

  void canonicalize();
  bool operator==(const FunctionExpr& o) const;
  std::string str() const;
};

}  // namespace rcm
