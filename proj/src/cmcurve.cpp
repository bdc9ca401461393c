#include "rcm/cmcurve.hpp"

#include <stdexcept>

#include "rcm/classpoly.hpp"

namespace rcm {

namespace {

// dense polynomial arithmetic mod p, ascending coefficients
using PolyP = std::vector<mpz_class>;

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& x : r) x = mod_p(x, p);
  trim(r);
  return r;
}

// remainder of a mod f, f monic
PolyP rem_mod(PolyP a, const PolyP& f, const mpz_class& p) {
  trim(a);
  while (a.size() >= f.size()) {
    mpz_class lead = a.back();
    size_t shift = a.size() - f.size();
    if (lead != 0) {
      for (size_t i = 0; i < f.size(); ++i)
        a[shift + i] = mod_p(a[shift + i] - lead * f[i], p);
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

PolyP monic(PolyP f, const mpz_class& p) {
  trim(f);
  if (f.empty()) return f;
  mpz_class inv = inv_mod_p(f.back(), p);
  for (auto& c : f) c = mod_p(c * inv, p);
  return f;
}

PolyP gcd_mod(PolyP a, PolyP b, const mpz_class& p) {
  a = monic(std::move(a), p);
  b = monic(std::move(b), p);
  while (!b.empty()) {
    PolyP r = rem_mod(a, b, p);
    a = std::move(b);
    b = monic(std::move(r), p);
  }
  return a;
}

// x^e mod f
PolyP xpow_mod(const mpz_class& e, const PolyP& f, const mpz_class& p) {
  PolyP result{1};
  PolyP base{0, 1};
  base = rem_mod(base, f, p);
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = rem_mod(mul_mod(result, base, p), f, p);
    base = rem_mod(mul_mod(base, base, p), f, p);
    k >>= 1;
  }
  return result;
}

void split_roots(const PolyP& f, const mpz_class& p, std::vector<mpz_class>& out,
                 unsigned long& state) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    // x + c -> root -c (monic)
    out.push_back(mod_p(-f[0], p));
    return;
  }
  // random shift a: gcd((x+a)^((p-1)/2) - 1, f)
  mpz_class half = (p - 1) / 2;
  while (true) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    mpz_class a = mpz_class(state >> 16) % p;
    PolyP shifted{a, 1};
    // (x+a)^half mod f by square and multiply on the polynomial
    PolyP acc{1};
    PolyP base = rem_mod(shifted, f, p);
    mpz_class k = half;
    while (k > 0) {
      if (mpz_odd_p(k.get_mpz_t())) acc = rem_mod(mul_mod(acc, base, p), f, p);
      base = rem_mod(mul_mod(base, base, p), f, p);
      k >>= 1;
    }
    if (!acc.empty()) acc[0] = mod_p(acc[0] - 1, p);
    else acc = PolyP{mod_p(mpz_class(-1), p)};
    trim(acc);
    PolyP g = gcd_mod(acc, f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      // divide f by g exactly (both monic)
      PolyP quot;
      PolyP r = f;
      trim(r);
      quot.assign(r.size() - g.size() + 1, mpz_class(0));
      while (r.size() >= g.size() && !r.empty()) {
        mpz_class lead = r.back();
        size_t shift = r.size() - g.size();
        quot[shift] = lead;
        for (size_t i = 0; i < g.size(); ++i)
          r[shift + i] = mod_p(r[shift + i] - lead * g[i], p);
        trim(r);
      }
      split_roots(g, p, out, state);
      split_roots(monic(std::move(quot), p), p, out, state);
      return;
    }
  }
}

}  // namespace

PrimeFieldCtx::PrimeFieldCtx(mpz_class prime) : p(std::move(prime)) {
  if (p <= 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("PrimeFieldCtx: p fails the probable-prime test");
}

mpz_class mod_p(const mpz_class& a, const mpz_class& p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

mpz_class inv_mod_p(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::invalid_argument("inv_mod_p: not invertible");
  return r;
}

mpz_class pow_mod_p(const mpz_class& b, const mpz_class& e, const mpz_class& p) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r;
}

std::optional<mpz_class> sqrt_mod_p(const mpz_class& a_in, const mpz_class& p) {
  mpz_class a = mod_p(a_in, p);
  if (a == 0) return mpz_class(0);
  if (pow_mod_p(a, (p - 1) / 2, p) != 1) return std::nullopt;
  mpz_class root;
  if (p % 4 == 3) {
    root = pow_mod_p(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
      q >>= 1;
      ++s;
    }
    mpz_class z = 2;
    while (pow_mod_p(z, (p - 1) / 2, p) == 1) ++z;
    mpz_class m = s, c = pow_mod_p(z, q, p);
    mpz_class t = pow_mod_p(a, q, p);
    root = pow_mod_p(a, (q + 1) / 2, p);
    while (t != 1) {
      mpz_class tt = t;
      unsigned long i = 0;
      while (tt != 1) {
        tt = tt * tt % p;
        ++i;
      }
      mpz_class b = c;
      for (mpz_class k = 0; k < m - i - 1; ++k) b = b * b % p;
      root = root * b % p;
      c = b * b % p;
      t = t * c % p;
      m = i;
    }
  }
  // tie-break: the even representative
  if (mpz_odd_p(root.get_mpz_t())) root = p - root;
  return root;
}

std::vector<mpz_class> poly_roots_mod_p(const PolyZ& poly, const mpz_class& p) {
  PolyP f;
  for (const auto& c : poly) f.push_back(mod_p(c, p));
  trim(f);
  if (f.empty()) throw std::invalid_argument("poly_roots_mod_p: zero polynomial");
  if (f.back() == 0) throw std::invalid_argument("poly_roots_mod_p: leading coeff divisible by p");
  f = monic(std::move(f), p);
  // product of distinct linear factors: gcd(x^p - x, f)
  PolyP xp = xpow_mod(p, f, p);
  if (xp.size() < 2) xp.resize(2, mpz_class(0));
  xp[1] = mod_p(xp[1] - 1, p);  // x^p - x
  trim(xp);
  PolyP lin = gcd_mod(xp, f, p);
  std::vector<mpz_class> roots;
  unsigned long state = 0x9e3779b97f4a7c15ULL;
  if (lin.size() > 1) split_roots(lin, p, roots, state);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<mpz_class> j_candidates_from_root(const mpz_class& r, const mpz_class& p) {
  mpz_class target = mod_p(27 * (r - 2), p);
  auto c = sqrt_mod_p(target, p);
  if (!c) return {};
  std::vector<mpz_class> out;
  mpz_class c1 = *c;
  mpz_class j1 = pow_mod_p(mod_p(c1 - 6, p), 3, p);
  out.push_back(j1);
  if (c1 != 0) {
    mpz_class c2 = p - c1;
    out.push_back(pow_mod_p(mod_p(c2 - 6, p), 3, p));
  }
  return out;
}

CurveParams curve_from_j(const mpz_class& j_in, const mpz_class& p, int twist) {
  mpz_class j = mod_p(j_in, p);
  CurveParams c;
  c.p = p;
  if (j == 0) {
    c.a = 0;
    c.b = 1;
  } else if (j == mod_p(1728, p)) {
    c.a = 1;
    c.b = 0;
  } else {
    mpz_class k = mod_p(j * inv_mod_p(mod_p(1728 - j, p), p), p);
    c.a = mod_p(3 * k, p);
    c.b = mod_p(2 * k, p);
  }
  if (twist != 0) {
    mpz_class d = 2;
    while (pow_mod_p(d, (p - 1) / 2, p) == 1) ++d;
    c.a = mod_p(c.a * d * d, p);
    c.b = mod_p(c.b * d * d * d, p);
  }
  mpz_class disc = mod_p(4 * c.a * c.a * c.a + 27 * c.b * c.b, p);
  if (disc == 0) throw std::logic_error("curve_from_j: singular parameters");
  return c;
}

mpz_class j_invariant_of(const CurveParams& c) {
  mpz_class a3 = mod_p(4 * c.a * c.a * c.a, c.p);
  mpz_class denom = mod_p(a3 + 27 * c.b * c.b, c.p);
  return mod_p(1728 * a3 * inv_mod_p(denom, c.p), c.p);
}

ECPoint ec_add(const ECPoint& P, const ECPoint& Q, const CurveParams& c) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  const mpz_class& p = c.p;
  if (P.x == Q.x) {
    if (mod_p(P.y + Q.y, p) == 0) return ECPoint{};  // inverse points
    // doubling
    mpz_class lam = mod_p((3 * P.x * P.x + c.a) * inv_mod_p(mod_p(2 * P.y, p), p), p);
    mpz_class x3 = mod_p(lam * lam - 2 * P.x, p);
    mpz_class y3 = mod_p(lam * (P.x - x3) - P.y, p);
    return ECPoint{x3, y3, false};
  }
  mpz_class lam = mod_p((Q.y - P.y) * inv_mod_p(mod_p(Q.x - P.x, p), p), p);
  mpz_class x3 = mod_p(lam * lam - P.x - Q.x, p);
  mpz_class y3 = mod_p(lam * (P.x - x3) - P.y, p);
  return ECPoint{x3, y3, false};
}

ECPoint ec_mul(const mpz_class& k, const ECPoint& P, const CurveParams& c) {
  ECPoint acc{};
  ECPoint base = P;
  mpz_class e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = ec_add(acc, base, c);
    base = ec_add(base, base, c);
    e >>= 1;
  }
  return acc;
}

ECPoint random_point(const CurveParams& c, unsigned long& state) {
  while (true) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    mpz_class x = mod_p(mpz_class(state >> 8), c.p);
    // widen the sample beyond 64 bits for big p
    for (int i = 0; i < 4; ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      x = mod_p((x << 56) + mpz_class(state >> 8), c.p);
    }
    mpz_class rhs = mod_p(x * x * x + c.a * x + c.b, c.p);
    auto y = sqrt_mod_p(rhs, c.p);
    if (y) return ECPoint{x, *y, false};
  }
}

OrderVerdict order_check(const CurveParams& c, const mpz_class& m, int trials,
                         unsigned long seed) {
  mpz_class sq;
  mpz_sqrt(sq.get_mpz_t(), c.p.get_mpz_t());
  mpz_class lo = c.p + 1 - 2 * (sq + 1);
  mpz_class hi = c.p + 1 + 2 * (sq + 1);
  if (m < lo || m > hi)
    throw std::invalid_argument("order_check: m outside the Hasse interval");
  unsigned long state = seed * 0x9e3779b97f4a7c15ULL + 12345;
  bool nontrivial = false;
  for (int i = 0; i < trials; ++i) {
    ECPoint P = random_point(c, state);
    ECPoint Q = ec_mul(m, P, c);
    if (!Q.inf) return {false, false, "mP != O for a sampled point"};
    if (!P.inf) nontrivial = true;
  }
  OrderVerdict v;
  v.accepted = true;
  // prime m wider than the Hasse interval: a single annihilated nontrivial
  // point pins |E| = m exactly
  if (nontrivial && mpz_probab_prime_p(m.get_mpz_t(), 40) != 0 && m > 4 * (sq + 1)) {
    v.certain = true;
    v.detail = "m prime and exceeds Hasse width: order is exactly m";
  } else {
    v.detail = "probabilistic acceptance over " + std::to_string(trials) + " points";
  }
  return v;
}

std::optional<CMParams> cm_params_check(long n, const mpz_class& p, const mpz_class& m) {
  PrimeFieldCtx ctx(p);  // validates primality
  CMParams out;
  out.n = n;
  out.p = p;
  out.m = m;
  out.t = p + 1 - m;
  mpz_class lhs = 4 * p - out.t * out.t;
  if (lhs <= 0) return std::nullopt;
  if (lhs % n != 0) return std::nullopt;
  mpz_class s2 = lhs / n;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), s2.get_mpz_t());
  if (s * s != s2) return std::nullopt;
  out.s = s;
  return out;
}

GenResult generate_curve(long n, const mpz_class& p, const mpz_class& m, long prec,
                         const std::string& cache_path) {
  auto params = cm_params_check(n, p, m);
  if (!params)
    throw std::invalid_argument("generate_curve: (n, p, m) fails the CM norm equation");

  ClassPolynomial qn;
  bool have = false;
  if (!cache_path.empty()) {
    PolyCache cache{cache_path};
    if (auto hit = cache.lookup(PolyKind::qn, n)) {
      qn = *hit;
      have = true;
    }
  }
  if (!have) {
    qn = build_qn(n, prec);
    if (!cache_path.empty()) PolyCache{cache_path}.append(qn);
  }

  auto roots = poly_roots_mod_p(qn.to_polyz(), p);
  if (roots.empty())
    throw std::runtime_error("generate_curve: q_n has no roots mod p (p unsuitable for n)");

  GenResult res;
  res.transcript.candidates_tried = 0;
  for (const auto& r : roots) {
    mpz_class target = mod_p(27 * (r - 2), p);
    auto c1 = sqrt_mod_p(target, p);
    if (!c1) continue;
    std::vector<mpz_class> cs{*c1};
    if (*c1 != 0) cs.push_back(p - *c1);
    for (const auto& cv : cs) {
      mpz_class j = pow_mod_p(mod_p(cv - 6, p), 3, p);
      for (int twist = 0; twist <= 1; ++twist) {
        ++res.transcript.candidates_tried;
        CurveParams curve = curve_from_j(j, p, twist);
        curve.claimed_order = m;
        OrderVerdict v = order_check(curve, m, 8, 7);
        if (v.accepted) {
          res.curve = curve;
          res.transcript.root = r;
          res.transcript.c_used = cv;
          res.transcript.j_used = j;
          res.transcript.twisted = (twist == 1);
          return res;
        }
      }
    }
  }
  throw std::runtime_error("generate_curve: no (root, C, twist) candidate passed the order check");
}

long count_points_exhaustive(const CurveParams& c) {
  unsigned long p = c.p.get_ui();
  // quadratic residue table
  std::vector<char> is_sq(p, 0);
  for (unsigned long x = 0; x < p; ++x) is_sq[(x * x) % p] = 1;
  unsigned long a = mod_p(c.a, c.p).get_ui();
  unsigned long b = mod_p(c.b, c.p).get_ui();
  long count = 1;  // infinity
  for (unsigned long x = 0; x < p; ++x) {
    unsigned long rhs = (x * ((x * x) % p) % p + a * x % p + b) % p;
    if (rhs == 0)
      count += 1;
    else if (is_sq[rhs])
      count += 2;
  }
  return count;
}

}  // namespace rcm
