#include "rcm/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rcm {

BigFloat BigFloat::of(long value, long prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const mpz_class& value, long prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const mpq_class& value, long prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, value.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of_double(double value, long prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt_ui(unsigned long x, long prec) {
  BigFloat r(prec);
  mpfr_sqrt_ui(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long e, long prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.v_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
  return r;
}

double BigFloat::log2_abs() const {
  if (mpfr_zero_p(v_)) return -1e300;
  long exp = static_cast<long>(mpfr_get_exp(v_));
  // mantissa in [0.5, 1): log2|x| = exp + log2(mant)
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_abs(t, v_, MPFR_RNDN);
  mpfr_set_exp(t, 0);
  double m = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return static_cast<double>(exp) + std::log2(m);
}

mpz_class BigFloat::round_to_mpz() const {
  mpz_class z;
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(v_));
  mpfr_round(t, v_);
  mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
  mpfr_clear(t);
  return z;
}

std::string BigFloat::str(size_t digits) const {
  if (digits == 0) digits = static_cast<size_t>(prec() * 0.3010) + 2;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string body = neg ? mant.substr(1) : mant;
  std::string out = (neg ? "-" : "");
  out += "0." + body + "e" + std::to_string(static_cast<long>(e));
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::min(a.prec(), b.prec()));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::min(a.prec(), b.prec()));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::min(a.prec(), b.prec()));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::min(a.prec(), b.prec()));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigComplex BigComplex::of(long r, long i, long prec) {
  return BigComplex(BigFloat::of(r, prec), BigFloat::of(i, prec));
}

BigComplex BigComplex::one(long prec) { return of(1, 0, prec); }

BigComplex BigComplex::i_unit(long prec) { return of(0, 1, prec); }

BigComplex BigComplex::cis(const BigFloat& theta) {
  long p = theta.prec();
  BigComplex r(p);
  mpfr_sin_cos(r.im.raw(), r.re.raw(), theta.raw(), MPFR_RNDN);
  return r;
}

BigComplex BigComplex::exp(const BigComplex& z) {
  long p = z.prec();
  BigFloat m(p);
  mpfr_exp(m.raw(), z.re.raw(), MPFR_RNDN);
  BigComplex r = cis(z.im);
  return BigComplex(m * r.re, m * r.im);
}

BigComplex BigComplex::sqrt() const {
  long p = prec();
  if (is_zero()) return BigComplex(p);
  // principal branch: re(result) >= 0
  BigFloat r = abs();
  BigFloat two = BigFloat::of(2, p);
  BigFloat u = ((r + re) / two).sqrt();
  BigFloat v = ((r - re) / two).sqrt();
  if (im.sign() < 0) v = -v;
  return BigComplex(u, v);
}

BigComplex BigComplex::recip() const {
  BigFloat n = norm();
  return BigComplex(re / n, -im / n);
}

BigComplex BigComplex::pow_int(long k) const {
  long p = prec();
  if (k == 0) return one(p);
  BigComplex base = (k > 0) ? *this : recip();
  unsigned long e = (k > 0) ? static_cast<unsigned long>(k)
                            : static_cast<unsigned long>(-(k + 1)) + 1;
  BigComplex acc = one(p);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string BigComplex::str(size_t digits) const {
  return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + im.abs().str(digits) + "i";
}

}  // namespace rcm
