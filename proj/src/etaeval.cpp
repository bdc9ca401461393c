#include "rcm/etaeval.hpp"

#include <cmath>
#include <stdexcept>

namespace rcm {

namespace {

// q-series on the fundamental domain: eta = q^(1/24) * (1 + sum_k (-1)^k
// (q^(k(3k-1)/2) + q^(k(3k+1)/2))). Number of terms follows from
// |q| <= e^(-pi sqrt(3)) there.
BigComplex eta_series(const BigComplex& tau, long wp) {
  BigFloat pi = BigFloat::pi(wp);
  BigFloat two = BigFloat::of(2, wp);
  // q^(1/24) = exp(2 pi i tau / 24)
  BigFloat f12 = BigFloat::of(12, wp);
  BigComplex itau(-tau.im, tau.re);  // i * tau
  BigComplex q24 = BigComplex::exp(BigComplex(itau.re * (pi / f12), itau.im * (pi / f12)));
  BigComplex q = BigComplex::exp(BigComplex(itau.re * (two * pi), itau.im * (two * pi)));

  double bits_per_power = 2.0 * 3.141592653589793 * tau.im.to_double() / 0.6931471805599453;
  long kmax = 2;
  while (static_cast<double>(kmax) * (3 * kmax - 1) / 2.0 * bits_per_power <
         static_cast<double>(wp + 16))
    ++kmax;

  BigComplex sum = BigComplex::one(wp);
  BigComplex qk = q;            // q^k
  BigComplex qp1(wp), qp2(wp);  // q^(k(3k-1)/2), q^(k(3k+1)/2)
  qp1 = q;                      // k=1: 1
  for (long k = 1; k <= kmax; ++k) {
    qp2 = qp1 * qk;  // exponent k(3k-1)/2 + k = k(3k+1)/2
    BigComplex term = qp1 + qp2;
    if (k & 1) {
      sum = sum - term;
    } else {
      sum = sum + term;
    }
    // next pentagonal exponent: (k+1)(3k+2)/2 = k(3k+1)/2 + (2k+1)
    qp1 = qp2 * qk * q;
    qk = qk * q;
  }
  return q24 * sum;
}

}  // namespace

BigComplex dedekind_eta(const BigComplex& tau_in, long prec) {
  if (tau_in.im.sign() <= 0) throw std::invalid_argument("dedekind_eta: Im tau > 0 required");
  long wp = prec + 32;
  BigComplex tau{tau_in.re + BigFloat::of(0, wp), tau_in.im + BigFloat::of(0, wp)};

  long zeta24_exp = 0;  // exact multiplier exponent, mod 24
  BigComplex mult = BigComplex::one(wp);
  BigFloat one = BigFloat::of(1, wp);
  // stop inverting just inside the unit circle; Im tau stays near sqrt(3)/2
  BigFloat thresh = one - BigFloat::pow2(-20, wp);
  while (true) {
    mpz_class k = tau.re.round_to_mpz();
    if (k != 0) {
      tau.re = tau.re - BigFloat::of(k, wp);
      zeta24_exp = static_cast<long>(((zeta24_exp + k.get_si()) % 24 + 24) % 24);
    }
    if (tau.norm() < thresh) {
      // eta(tau) = eta(-1/tau) / sqrt(-i tau)
      BigComplex minus_i_tau(tau.im, -tau.re);
      mult = mult / minus_i_tau.sqrt();
      tau = -tau.recip();
    } else {
      break;
    }
  }
  BigComplex series = eta_series(tau, wp);
  // zeta_24^exp
  BigFloat ang = BigFloat::pi(wp) * BigFloat::of(zeta24_exp, wp) / BigFloat::of(12, wp);
  return mult * BigComplex::cis(ang) * series;
}

GValues g_values(const BigComplex& tau, long prec) {
  long wp = prec + 40;
  BigFloat three = BigFloat::of(3, wp);
  BigFloat one3 = BigFloat::of(1, wp) / three;
  BigFloat two3 = BigFloat::of(2, wp) / three;
  BigComplex t3(tau.re / three, tau.im / three);
  BigComplex eta_t = dedekind_eta(tau, wp);
  BigComplex e0 = dedekind_eta(t3, wp);
  BigComplex e1 = dedekind_eta(BigComplex(t3.re + one3, t3.im), wp);
  BigComplex e2 = dedekind_eta(BigComplex(t3.re + two3, t3.im), wp);
  BigComplex e3 = dedekind_eta(BigComplex(tau.re * three, tau.im * three), wp);
  GValues g{BigComplex(wp), BigComplex(wp), BigComplex(wp), BigComplex(wp)};
  g.g0 = e0 / eta_t;
  // zeta_24^-1
  BigFloat ang = -BigFloat::pi(wp) / BigFloat::of(12, wp);
  g.g1 = BigComplex::cis(ang) * (e1 / eta_t);
  g.g2 = e2 / eta_t;
  g.g3 = BigFloat::sqrt_ui(3, wp) * (e3 / eta_t);
  return g;
}

std::pair<BigComplex, BigComplex> r2_r4(const BigComplex& tau, long prec) {
  long wp = prec + 40;
  BigFloat three = BigFloat::of(3, wp);
  BigFloat one3 = BigFloat::of(1, wp) / three;
  BigFloat two3 = BigFloat::of(2, wp) / three;
  BigComplex t3(tau.re / three, tau.im / three);
  BigComplex eta_t = dedekind_eta(tau, wp);
  BigComplex eta2 = eta_t * eta_t;
  BigComplex r2 = dedekind_eta(BigComplex(tau.re * three, tau.im * three), wp) *
                  dedekind_eta(BigComplex(t3.re + two3, t3.im), wp) / eta2;
  BigComplex r4 = dedekind_eta(t3, wp) *
                  dedekind_eta(BigComplex(t3.re + one3, t3.im), wp) / eta2;
  return {r2, r4};
}

BigComplex tau0_of(long n, long prec) {
  long wp = prec + 16;
  BigFloat half = BigFloat::of(1, wp) / BigFloat::of(2, wp);
  BigFloat root = BigFloat::of(mpz_class(n), wp).sqrt();
  return BigComplex(-half, root * half);
}

BigComplex t_value(long n, long prec) {
  if (n <= 0) throw std::invalid_argument("t_value: n > 0 required");
  GValues g = g_values(tau0_of(n, prec), prec);
  return g.g2 * g.g3;
}

BigComplex h_value(long n, long prec) {
  BigComplex t = t_value(n, prec);
  BigComplex t12 = t.pow_int(12);
  return BigFloat::of(27, t.prec()) * t12.recip();
}

BigComplex a_value(long n, long prec) {
  BigComplex h = h_value(n, prec);
  return h + h.recip();
}

BigComplex j_value(long n, long prec) {
  BigComplex t = t_value(n, prec);
  long wp = t.prec();
  BigComplex t6 = t.pow_int(6);
  BigComplex c = t6 - BigFloat::of(27, wp) * t6.recip();
  BigComplex base = c - BigComplex::of(6, 0, wp);
  return base.pow_int(3);
}

BigComplex j_from_quartic(const BigComplex& y) {
  long wp = y.prec();
  BigComplex acc = y + BigComplex::of(36, 0, wp);  // Y + 36
  acc = acc * y + BigComplex::of(270, 0, wp);
  acc = acc * y + BigComplex::of(756, 0, wp);
  acc = acc * y + BigComplex::of(729, 0, wp);
  return acc / y;
}

BigComplex evaluate_expr(const FunctionExpr& h, const BigComplex& tau, long prec) {
  long wp = prec + 16 + 8 * static_cast<long>(h.terms.size());
  GValues g = g_values(tau, wp);
  BigComplex sum(wp);
  for (const auto& t : h.terms) {
    BigComplex v = t.coeff.embed(wp);
    for (int i = 0; i < 4; ++i) {
      if (t.e[i] != 0) v = v * g[i].pow_int(t.e[i]);
    }
    sum = sum + v;
  }
  return sum;
}

}  // namespace rcm
