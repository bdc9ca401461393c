#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcm/polynomial.hpp"

namespace rcm {

/// Odd prime context; construction runs a 40-round probable-prime test.
struct PrimeFieldCtx {
  mpz_class p;
  explicit PrimeFieldCtx(mpz_class prime);
};

struct CurveParams {
  mpz_class a, b, p;
  std::optional<mpz_class> claimed_order;
};

struct CMParams {
  long n = 0;
  mpz_class p, t, m, s;  // 4p = t^2 + n s^2, m = p + 1 - t
};

struct ECPoint {
  mpz_class x, y;
  bool inf = true;
};

mpz_class mod_p(const mpz_class& a, const mpz_class& p);
mpz_class inv_mod_p(const mpz_class& a, const mpz_class& p);
mpz_class pow_mod_p(const mpz_class& b, const mpz_class& e, const mpz_class& p);

/// Tonelli-Shanks; returns the even representative of the two roots
/// (tie-break convention), or nothing for a non-residue.
std::optional<mpz_class> sqrt_mod_p(const mpz_class& a, const mpz_class& p);

/// All distinct roots of poly (ascending coefficients) in [0, p), sorted.
/// gcd with x^p - x, then recursive random-shift splitting.
std::vector<mpz_class> poly_roots_mod_p(const PolyZ& poly, const mpz_class& p);

/// j = (C - 6)^3 for C^2 = 27 (r - 2); both sign choices, or empty when
/// 27 (r - 2) is a non-residue. C = 0 degenerates to a single candidate.
std::vector<mpz_class> j_candidates_from_root(const mpz_class& r, const mpz_class& p);

/// Nonsingular curve with the given j-invariant via k = j/(1728 - j),
/// (a, b) = (3k, 2k); twist != 0 multiplies by c^2, c^3 for the smallest
/// quadratic non-residue c. j = 0 and j = 1728 handled specially.
CurveParams curve_from_j(const mpz_class& j, const mpz_class& p, int twist);

mpz_class j_invariant_of(const CurveParams& c);

ECPoint ec_add(const ECPoint& P, const ECPoint& Q, const CurveParams& c);
ECPoint ec_mul(const mpz_class& k, const ECPoint& P, const CurveParams& c);
ECPoint random_point(const CurveParams& c, unsigned long& seed_state);

struct OrderVerdict {
  bool accepted = false;
  /// For prime m > 4 sqrt(p) + ... one nontrivial annihilation plus Hasse
  /// uniqueness makes the verdict exact rather than probabilistic.
  bool certain = false;
  std::string detail;
};

/// Checks m P = O for `trials` random points; m must lie in the Hasse
/// interval.
OrderVerdict order_check(const CurveParams& c, const mpz_class& m, int trials = 20,
                         unsigned long seed = 1);

/// Validates 4p - t^2 = n s^2 with t = p + 1 - m.
std::optional<CMParams> cm_params_check(long n, const mpz_class& p, const mpz_class& m);

struct CurveTranscript {
  mpz_class root;
  mpz_class c_used;
  mpz_class j_used;
  bool twisted = false;
  int candidates_tried = 0;
};

struct GenResult {
  CurveParams curve;
  CurveTranscript transcript;
};

/// Full CM pipeline: q_n (cache-aware when cache_path nonempty), roots mod
/// p, j candidates, curve + twist, order validation.
GenResult generate_curve(long n, const mpz_class& p, const mpz_class& m, long prec = 0,
                         const std::string& cache_path = "");

/// Exhaustive point count (small p only).
long count_points_exhaustive(const CurveParams& c);

}  // namespace rcm
