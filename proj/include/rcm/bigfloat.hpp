#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace rcm {

/// Arbitrary-precision real number (MPFR backed, round-to-nearest).
/// Binary operations produce a result at the smaller of the two operand
/// precisions, so precision never silently inflates through a computation.
class BigFloat {
 public:
  explicit BigFloat(long prec = 64) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(prec));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(long value, long prec);
  static BigFloat of(const mpz_class& value, long prec);
  static BigFloat of(const mpq_class& value, long prec);
  static BigFloat of_double(double value, long prec);
  static BigFloat pi(long prec);
  static BigFloat sqrt_ui(unsigned long x, long prec);
  /// 2^e, exact; handy for tolerance thresholds.
  static BigFloat pow2(long e, long prec = 64);

  long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// log2(|x|); very negative for 0.
  double log2_abs() const;
  mpz_class round_to_mpz() const;
  std::string str(size_t digits = 0) const;

  BigFloat operator-() const;
  BigFloat abs() const;
  BigFloat sqrt() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend int cmp(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_);
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }

 private:
  mpfr_t v_;
};

/// Complex number over BigFloat. Principal branches throughout.
struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(long prec = 64) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  static BigComplex of(long r, long i, long prec);
  static BigComplex one(long prec);
  static BigComplex i_unit(long prec);
  /// e^{i*theta}
  static BigComplex cis(const BigFloat& theta);
  static BigComplex exp(const BigComplex& z);

  long prec() const { return std::min(re.prec(), im.prec()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  BigComplex conj() const { return BigComplex(re, -im); }
  BigFloat norm() const { return re * re + im * im; }
  BigFloat abs() const { return norm().sqrt(); }
  BigComplex sqrt() const;
  BigComplex recip() const;
  BigComplex pow_int(long k) const;
  std::string str(size_t digits = 0) const;

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re + b.re, a.im + b.im);
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re - b.re, a.im - b.im);
  }
  BigComplex operator-() const { return BigComplex(-re, -im); }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend BigComplex operator*(const BigFloat& a, const BigComplex& b) {
    return BigComplex(a * b.re, a * b.im);
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat n = b.norm();
    BigComplex num = a * b.conj();
    return BigComplex(num.re / n, num.im / n);
  }
};

}  // namespace rcm
