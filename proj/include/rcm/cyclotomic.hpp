#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

#include "rcm/bigfloat.hpp"

namespace rcm {

/// Element of Z[zeta_72] represented canonically in Z[x]/Phi_72(x),
/// Phi_72(x) = x^24 - x^12 + 1. Two elements are equal iff their
/// coefficient vectors are equal. Values are immutable in spirit: all
/// operations return fresh values.
class CycInt {
 public:
  static constexpr int kDegree = 24;

  CycInt() = default;

  static CycInt integer(const mpz_class& v) {
    CycInt r;
    r.c_[0] = v;
    return r;
  }
  static CycInt one() { return integer(1); }

  const mpz_class& operator[](int i) const { return c_[i]; }
  mpz_class& operator[](int i) { return c_[i]; }

  bool is_zero() const;
  bool operator==(const CycInt& o) const { return c_ == o.c_; }
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  CycInt operator-() const;
  friend CycInt operator+(const CycInt& a, const CycInt& b);
  friend CycInt operator-(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const CycInt& a, const CycInt& b);

  CycInt pow(unsigned long e) const;

  /// gcd of all coefficients (0 for the zero element).
  mpz_class content() const;
  void divexact(const mpz_class& d);

  /// Human-readable form like "-z^18+z^6" (descending exponents).
  std::string str(const std::string& var = "z") const;

 private:
  std::array<mpz_class, kDegree> c_{};
};

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_mul(const CycInt& a, const CycInt& b);

/// Canonical representative of zeta_72^k (any integer k).
CycInt zeta_power(long k);

/// sqrt(3) = zeta^6 - zeta^30; real positive embedding.
CycInt sqrt3();

/// Galois automorphism zeta -> zeta^d, gcd(d, 72) = 1.
/// Computed through per-d substitution matrices built once.
CycInt galois_sigma(long d, const CycInt& x);

/// Numeric embedding zeta -> e^{2 pi i/72}. Absolute error below
/// 2^(-prec+8) * max(1, sum |coeff|).
BigComplex embed_complex(const CycInt& x, long prec);

/// A root-of-unity coefficient sign * zeta^exp; the exact unit values that
/// appear in the S/T/sigma_d monomial actions. Closed under product,
/// inverse and Galois twist.
struct RootOfUnity {
  int sign = 1;  // +1 or -1
  int exp = 0;   // 0..71

  static RootOfUnity one() { return {1, 0}; }
  static RootOfUnity minus_one() { return {-1, 0}; }
  static RootOfUnity zeta(long e);

  bool is_one() const { return sign == 1 && exp == 0; }
  bool operator==(const RootOfUnity& o) const = default;

  RootOfUnity mul(const RootOfUnity& o) const;
  RootOfUnity inv() const;
  RootOfUnity pow(long k) const;
  RootOfUnity sigma(long d) const { return RootOfUnity{sign, static_cast<int>((static_cast<long>(exp) * d) % 72)}; }

  CycInt to_cyc() const;
  std::string str() const;
};

}  // namespace rcm
