#include "rcm/reciprocity.hpp"

#include <numeric>
#include <stdexcept>

namespace rcm {

namespace {

long mod(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

long inv_mod(long a, long m) {
  long g = std::gcd(mod(a, m), m);
  if (g != 1) throw std::invalid_argument("inv_mod: not invertible");
  long x = 1;
  for (long k = 1; k < m; ++k) {
    if (mod(a * k, m) == 1) {
      x = k;
      break;
    }
  }
  return x;
}

std::vector<std::pair<long, long>> prime_power_parts(long N) {
  std::vector<std::pair<long, long>> out;  // (p, p^e)
  long m = N;
  for (long p = 2; m > 1; ++p) {
    if (m % p) continue;
    long pe = 1;
    while (m % p == 0) {
      m /= p;
      pe *= p;
    }
    out.push_back({p, pe});
  }
  return out;
}

}  // namespace

long GL2ModN::det() const { return mod(m[0][0] * m[1][1] - m[0][1] * m[1][0], N); }

bool GL2ModN::operator==(const GL2ModN& o) const {
  if (N != o.N) return false;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (mod(m[i][j], N) != mod(o.m[i][j], N)) return false;
  return true;
}

GL2ModN GL2ModN::mul(const GL2ModN& a, const GL2ModN& b) {
  if (a.N != b.N) throw std::invalid_argument("GL2ModN::mul: modulus mismatch");
  GL2ModN r;
  r.N = a.N;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.m[i][j] = mod(a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j], a.N);
  return r;
}

std::string GL2ModN::str() const {
  return "[[" + std::to_string(m[0][0]) + "," + std::to_string(m[0][1]) + "],[" +
         std::to_string(m[1][0]) + "," + std::to_string(m[1][1]) + "]] mod " +
         std::to_string(N);
}

Mat2Z Mat2Z::mul(const Mat2Z& x, const Mat2Z& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string Mat2Z::str() const {
  return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," +
         d.get_str() + "]]";
}

Mat2Z WordST::eval() const {
  Mat2Z m = Mat2Z::identity();
  for (const auto& l : letters) {
    if (l.is_s) {
      long k = mod(l.pow.get_si(), 4);
      Mat2Z s = Mat2Z::identity();
      for (long i = 0; i < k; ++i) s = Mat2Z::mul(s, Mat2Z::S());
      m = Mat2Z::mul(m, s);
    } else {
      m = Mat2Z::mul(m, Mat2Z::T_pow(l.pow));
    }
  }
  return m;
}

GL2ModN g_theta_matrix(const OrderElem& x, long N, long n) {
  if (!is_unit(x, N, n)) throw std::invalid_argument("g_theta_matrix: not a unit");
  long C = theta_norm_c(n, N);
  GL2ModN M;
  M.N = N;
  M.m[0][0] = mod(x.t + x.s, N);  // t - B s with B = -1
  M.m[0][1] = mod(-C * x.s, N);
  M.m[1][0] = mod(x.s, N);
  M.m[1][1] = mod(x.t, N);
  return M;
}

namespace {

// The three-case A_{[a,b,c],p^r} of the form-matrix definition (D = 1 mod 4,
// so b is odd and the half-integer entries are integral).
void form_case(const QuadForm& f, long p, long pe, long out[2][2]) {
  long a = f.a, b = f.b, c = f.c;
  long e00, e01, e10, e11;
  if (a % p != 0) {
    e00 = a;
    e01 = (b - 1) / 2;
    e10 = 0;
    e11 = 1;
  } else if (c % p != 0) {
    e00 = (-b - 1) / 2;
    e01 = -c;
    e10 = 1;
    e11 = 0;
  } else {
    // p | a and p | c forces p coprime to b for primitive forms
    if (b % p == 0) throw std::logic_error("form_case: form not primitive");
    e00 = (-b - 1) / 2 - a;
    e01 = (1 - b) / 2 - c;
    e10 = 1;
    e11 = -1;
  }
  out[0][0] = mod(e00, pe);
  out[0][1] = mod(e01, pe);
  out[1][0] = mod(e10, pe);
  out[1][1] = mod(e11, pe);
}

}  // namespace

GL2ModN form_matrix(const QuadForm& f, long N) {
  long D = f.disc();
  if (mod(D, 4) != 1) throw std::invalid_argument("form_matrix: D must be 1 mod 4");
  GL2ModN M;
  M.N = N;
  auto parts = prime_power_parts(N);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M.m[i][j] = 0;
  // CRT entrywise over the prime power parts
  for (auto [p, pe] : parts) {
    long casem[2][2];
    form_case(f, p, pe, casem);
    long rest = N / pe;
    long w = rest * inv_mod(rest, pe);  // = 1 mod pe, 0 mod rest
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) M.m[i][j] = mod(M.m[i][j] + casem[i][j] * w, N);
  }
  return M;
}

std::pair<GL2ModN, long> det_split(const GL2ModN& M) {
  long d = M.det();
  if (std::gcd(d, M.N) != 1) throw std::invalid_argument("det_split: det not a unit");
  long dinv = inv_mod(d, M.N);
  GL2ModN B = M;
  B.m[0][1] = mod(B.m[0][1] * dinv, M.N);
  B.m[1][1] = mod(B.m[1][1] * dinv, M.N);
  return {B, d};
}

Mat2Z lift_sl2(const GL2ModN& B) {
  long N = B.N;
  if (B.det() != 1) throw std::invalid_argument("lift_sl2: det must be 1 mod N");
  mpz_class a = mod(B.m[0][0], N), b = mod(B.m[0][1], N);
  long c0l = mod(B.m[1][0], N), d0l = mod(B.m[1][1], N);
  mpz_class c0 = (c0l == 0) ? mpz_class(N) : mpz_class(c0l);
  mpz_class d0 = d0l;
  while (mpz_class(gcd(c0, d0)) != 1) d0 += N;
  // x*d0 - y*c0 = 1
  mpz_class g, x, yneg;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), yneg.get_mpz_t(), d0.get_mpz_t(),
             c0.get_mpz_t());
  mpz_class y = -yneg;
  // adjust by m*(c0, d0) to hit the required residues of row 1
  mpz_class mshift = 0, modulus = 1;
  for (auto [p, pe] : prime_power_parts(N)) {
    mpz_class target, coef;
    if (mpz_class(c0 % p) != 0) {
      coef = c0;
      target = a - x;
    } else {
      coef = d0;
      target = b - y;
    }
    mpz_class cinv, dummy, gg;
    mpz_class pez(pe);
    mpz_class cmod = ((coef % pe) + pe) % pe;
    mpz_gcdext(gg.get_mpz_t(), cinv.get_mpz_t(), dummy.get_mpz_t(),
               cmod.get_mpz_t(), pez.get_mpz_t());
    mpz_class r = (target * cinv) % pe;
    // CRT accumulate m = mshift mod modulus, m = r mod pe
    mpz_class k = 0;
    while (((mshift + k * modulus - r) % pe) != 0) k += 1;
    mshift += k * modulus;
    modulus *= pe;
  }
  mpz_class af = x + mshift * c0;
  mpz_class bf = y + mshift * d0;
  Mat2Z L{af, bf, c0, d0};
  if (L.det() != 1) throw std::logic_error("lift_sl2: determinant drifted");
  if (((af - a) % N) != 0 || ((bf - b) % N) != 0)
    throw std::logic_error("lift_sl2: residues not preserved");
  return L;
}

WordST st_decompose(const Mat2Z& M) {
  if (M.det() != 1) throw std::invalid_argument("st_decompose: det must be 1");
  WordST w;
  Mat2Z A = M;
  // Invariant: M = (letters so far) * A. Peel letters from the left while
  // running the Euclidean algorithm on the first column of A.
  auto push_T = [&](const mpz_class& k) {
    if (k != 0) w.letters.push_back({false, k});
  };
  auto push_S = [&](long k) {
    if (k != 0) w.letters.push_back({true, mpz_class(k)});
  };
  while (A.c != 0) {
    if (A.a != 0) {
      // balanced quotient: |a - q c| <= |c| / 2
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), A.a.get_mpz_t(), A.c.get_mpz_t());
      if (2 * abs(r) > abs(A.c)) {
        q += 1;  // floor remainder shifts by -c in both sign cases
      }
      if (q != 0) {
        // A <- T^-q * A, word gains T^q
        push_T(q);
        A.a -= q * A.c;
        A.b -= q * A.d;
      }
    }
    // A <- S^-1 * A, word gains S
    push_S(1);
    Mat2Z next{-A.c, -A.d, A.a, A.b};
    A = next;
  }
  // A is now [[u, b], [0, u]] with u = ±1
  if (A.a == -1) {
    push_S(2);  // S^2 = -I
    A.a = 1;
    A.b = -A.b;
    A.d = 1;
  }
  push_T(A.b);
  return w;
}

bool MonomialAction::is_identity() const {
  return *this == MonomialAction{};
}

MonomialAction action_of_S() {
  MonomialAction a;
  a.perm = {3, 2, 1, 0};
  a.coeff = {RootOfUnity::one(), RootOfUnity::zeta(-6), RootOfUnity::zeta(6),
             RootOfUnity::one()};
  return a;
}

MonomialAction action_of_T() {
  MonomialAction a;
  a.perm = {1, 2, 0, 3};
  a.coeff = {RootOfUnity::one(), RootOfUnity::zeta(-6), RootOfUnity::one(),
             RootOfUnity::zeta(6)};
  return a;
}

MonomialAction action_of_sigma(long d) {
  long dm = mod(d, 72);
  if (std::gcd(dm, 72) != 1)
    throw std::invalid_argument("action_of_sigma: d not coprime to 72");
  MonomialAction a;
  a.twist = dm;
  // sigma_d(sqrt 3)/sqrt 3 = +1 iff d = ±1 mod 12
  long dm12 = dm % 12;
  RootOfUnity s3 = (dm12 == 1 || dm12 == 11) ? RootOfUnity::one()
                                             : RootOfUnity::minus_one();
  if (dm % 3 == 1) {
    a.perm = {0, 1, 2, 3};
    a.coeff = {RootOfUnity::one(), RootOfUnity::zeta(-2 * dm + 2),
               RootOfUnity::zeta(2 * dm - 2), s3};
  } else {
    a.perm = {0, 2, 1, 3};
    a.coeff = {RootOfUnity::one(), RootOfUnity::zeta(-2 * dm - 2),
               RootOfUnity::zeta(2 * dm + 2), s3};
  }
  return a;
}

MonomialAction compose(const MonomialAction& a, const MonomialAction& b) {
  MonomialAction c;
  c.twist = mod(a.twist * b.twist, 72);
  for (int i = 0; i < 4; ++i) {
    c.perm[i] = b.perm[a.perm[i]];
    c.coeff[i] = a.coeff[i].sigma(b.twist).mul(b.coeff[a.perm[i]]);
  }
  return c;
}

MonomialAction invert(const MonomialAction& a) {
  MonomialAction r;
  r.twist = inv_mod(a.twist, 72);
  for (int i = 0; i < 4; ++i) {
    int j = 0;
    while (a.perm[j] != i) ++j;
    r.perm[i] = j;
    r.coeff[i] = a.coeff[j].inv().sigma(r.twist);
  }
  return r;
}

MonomialAction action_pow(const MonomialAction& a, const mpz_class& k) {
  MonomialAction base = a;
  mpz_class e = k;
  if (e < 0) {
    base = invert(a);
    e = -e;
  }
  MonomialAction acc = MonomialAction::identity_action();
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

MonomialAction action_of_matrix(const GL2ModN& M) {
  if (M.N != 72) throw std::invalid_argument("action_of_matrix: level is 72");
  auto [B, d] = det_split(M);
  Mat2Z L = lift_sl2(B);
  WordST w = st_decompose(L);
  MonomialAction act = MonomialAction::identity_action();
  for (const auto& l : w.letters) {
    act = compose(act, action_pow(l.is_s ? action_of_S() : action_of_T(), l.pow));
  }
  return compose(act, action_of_sigma(d));
}

FunctionExpr apply_action(const MonomialAction& act, const FunctionExpr& h) {
  FunctionExpr out;
  for (const auto& t : h.terms) {
    CycRat c = t.coeff.sigma(act.twist);
    std::array<int, 4> e{};
    RootOfUnity factor = RootOfUnity::one();
    for (int i = 0; i < 4; ++i) {
      if (t.e[i] == 0) continue;
      factor = factor.mul(act.coeff[i].pow(t.e[i]));
      e[act.perm[i]] += t.e[i];
    }
    c = c.times(factor);
    out.terms.push_back({c, e});
  }
  out.canonicalize();
  return out;
}

FunctionExpr act_on_expr(const GL2ModN& M, const FunctionExpr& h) {
  return apply_action(action_of_matrix(M), h);
}

InvarianceReport is_class_invariant(const FunctionExpr& h, long n) {
  std::vector<OrderElem> gens;
  if (n % 24 == 19) {
    gens = paper_generators();
  } else {
    gens = group_structure(72, n).generators;
  }
  for (const auto& g : gens) {
    FunctionExpr img = act_on_expr(g_theta_matrix(g, 72, n), h);
    if (!(img == h)) return {false, g, img};
  }
  return {true, std::nullopt, std::nullopt};
}

ConjugateDescriptor conjugate_descriptor(const QuadForm& f, const FunctionExpr& h) {
  return {act_on_expr(form_matrix(f, 72), h), f};
}

}  // namespace rcm
