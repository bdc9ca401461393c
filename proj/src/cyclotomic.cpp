#include "rcm/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rcm {

namespace {

long mod72(long k) {
  long r = k % 72;
  return r < 0 ? r + 72 : r;
}

// x^(24+j) = x^(12+j) - x^j, applied top-down to a degree-<72 scratch array.
void reduce_in_place(std::array<mpz_class, 72>& w, CycInt& out) {
  for (int m = 71; m >= CycInt::kDegree; --m) {
    if (w[m] == 0) continue;
    mpz_class t = w[m];
    w[m] = 0;
    w[m - 12] += t;
    w[m - 24] -= t;
  }
  for (int i = 0; i < CycInt::kDegree; ++i) out[i] = w[i];
}

struct ZetaTables {
  std::array<CycInt, 72> zpow;  // canonical zeta^k
  std::array<bool, 72> valid{};
  // per-d substitution matrix: column k holds the coefficient vector of
  // zeta^(d*k mod 72) reduced mod Phi_72; rows are the 24 basis slots.
  std::array<std::array<std::array<long, 24>, 24>, 72> submat{};
};

const ZetaTables& tables() {
  static ZetaTables t;
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (int k = 0; k < 72; ++k) {
      std::array<mpz_class, 72> w{};
      w[k] = 1;
      reduce_in_place(w, t.zpow[k]);
    }
    for (int d = 0; d < 72; ++d) {
      if (std::gcd(d, 72) != 1) continue;
      t.valid[d] = true;
      for (int k = 0; k < 24; ++k) {
        const CycInt& img = t.zpow[(d * k) % 72];
        for (int i = 0; i < 24; ++i) t.submat[d][i][k] = img[i].get_si();
      }
    }
  });
  return t;
}

}  // namespace

bool CycInt::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

CycInt CycInt::operator-() const {
  CycInt r;
  for (int i = 0; i < kDegree; ++i) r.c_[i] = -c_[i];
  return r;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
  CycInt r;
  for (int i = 0; i < CycInt::kDegree; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
  CycInt r;
  for (int i = 0; i < CycInt::kDegree; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  std::array<mpz_class, 72> w{};
  for (int i = 0; i < CycInt::kDegree; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < CycInt::kDegree; ++j) {
      if (b.c_[j] == 0) continue;
      w[i + j] += a.c_[i] * b.c_[j];
    }
  }
  CycInt r;
  reduce_in_place(w, r);
  return r;
}

CycInt CycInt::pow(unsigned long e) const {
  CycInt acc = CycInt::one();
  CycInt base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

mpz_class CycInt::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return g;
}

void CycInt::divexact(const mpz_class& d) {
  for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
}

std::string CycInt::str(const std::string& var) const {
  std::string out;
  for (int e = kDegree - 1; e >= 0; --e) {
    const mpz_class& v = c_[e];
    if (v == 0) continue;
    mpz_class a = ::abs(v);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += (v < 0) ? "-" : "+";
    }
    if (e == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }

CycInt zeta_power(long k) { return tables().zpow[mod72(k)]; }

CycInt sqrt3() { return zeta_power(6) - zeta_power(30); }

CycInt galois_sigma(long d, const CycInt& x) {
  long dm = mod72(d);
  const auto& t = tables();
  if (!t.valid[dm]) throw std::invalid_argument("galois_sigma: d not coprime to 72");
  const auto& m = t.submat[dm];
  CycInt r;
  for (int k = 0; k < CycInt::kDegree; ++k) {
    if (x[k] == 0) continue;
    for (int i = 0; i < CycInt::kDegree; ++i) {
      if (m[i][k] == 0) continue;
      if (m[i][k] == 1)
        r[i] += x[k];
      else if (m[i][k] == -1)
        r[i] -= x[k];
      else
        r[i] += m[i][k] * x[k];
    }
  }
  return r;
}

BigComplex embed_complex(const CycInt& x, long prec) {
  long wp = prec + 16;
  BigFloat pi = BigFloat::pi(wp);
  BigFloat base = pi / BigFloat::of(36, wp);  // 2*pi/72
  BigComplex sum(wp);
  for (int k = 0; k < CycInt::kDegree; ++k) {
    if (x[k] == 0) continue;
    BigComplex root = BigComplex::cis(base * BigFloat::of(k, wp));
    BigFloat c = BigFloat::of(x[k], wp);
    sum = sum + BigComplex(c * root.re, c * root.im);
  }
  return sum;
}

RootOfUnity RootOfUnity::zeta(long e) {
  return RootOfUnity{1, static_cast<int>(mod72(e))};
}

RootOfUnity RootOfUnity::mul(const RootOfUnity& o) const {
  return RootOfUnity{sign * o.sign, static_cast<int>(mod72(exp + o.exp))};
}

RootOfUnity RootOfUnity::inv() const {
  return RootOfUnity{sign, static_cast<int>(mod72(-exp))};
}

RootOfUnity RootOfUnity::pow(long k) const {
  long e = mod72(static_cast<long>(exp) * mod72(k));
  // (±1)^k
  int s = (sign == -1 && (k % 2 != 0)) ? -1 : 1;
  return RootOfUnity{s, static_cast<int>(e)};
}

CycInt RootOfUnity::to_cyc() const {
  CycInt z = zeta_power(exp);
  return sign < 0 ? -z : z;
}

std::string RootOfUnity::str() const { return to_cyc().str(); }

}  // namespace rcm
