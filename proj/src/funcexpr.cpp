#include "rcm/funcexpr.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcm {

void CycRat::normalize() {
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (num.is_zero()) {
    den = 1;
    return;
  }
  mpz_class g = num.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    num.divexact(g);
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
}

CycRat CycRat::operator+(const CycRat& o) const {
  CycInt n = num * CycInt::integer(o.den) + o.num * CycInt::integer(den);
  return CycRat(n, den * o.den);
}

CycRat CycRat::operator*(const CycRat& o) const {
  return CycRat(num * o.num, den * o.den);
}

CycRat CycRat::times_sqrt3_pow(long k) const {
  if (k == 0) return *this;
  CycRat r = *this;
  long half = k >= 0 ? k / 2 : -((-k) / 2);
  bool odd = (k % 2) != 0;
  if (half >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(half));
    r = CycRat(r.num * CycInt::integer(p), r.den);
  } else {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(-half));
    r = CycRat(r.num, r.den * p);
  }
  if (odd) {
    if (k > 0) {
      r = CycRat(r.num * sqrt3(), r.den);
    } else {
      // sqrt(3)^-1 = sqrt(3)/3
      r = CycRat(r.num * sqrt3(), r.den * 3);
    }
  }
  return r;
}

BigComplex CycRat::embed(long prec) const {
  BigComplex n = embed_complex(num, prec);
  BigFloat d = BigFloat::of(den, prec + 16);
  return BigComplex(n.re / d, n.im / d);
}

std::string CycRat::str() const {
  std::string s = "(" + num.str() + ")";
  if (den != 1) s += "/" + den.get_str();
  return s;
}

FunctionExpr FunctionExpr::monomial(CycRat c, std::array<int, 4> e) {
  FunctionExpr h;
  h.terms.push_back({std::move(c), e});
  h.canonicalize();
  return h;
}

FunctionExpr FunctionExpr::g_power(int i, int k) {
  std::array<int, 4> e{};
  e[i] = k;
  return monomial(CycRat::integer(1), e);
}

FunctionExpr FunctionExpr::H_expr() {
  return monomial(CycRat::integer(27), {0, 0, -12, -12});
}

FunctionExpr FunctionExpr::A_expr() {
  FunctionExpr h = H_expr();
  FunctionExpr inv = monomial(CycRat(CycInt::one(), 27), {0, 0, 12, 12});
  h.terms.insert(h.terms.end(), inv.terms.begin(), inv.terms.end());
  h.canonicalize();
  return h;
}

FunctionExpr FunctionExpr::named(const std::string& name) {
  if (name == "Hn") return H_expr();
  if (name == "An") return A_expr();
  if (name.size() >= 4 && name[0] == 'g') {
    size_t dash = name.find('-', 1);
    if (dash != std::string::npos) {
      int i = std::stoi(name.substr(1, dash - 1));
      int k = std::stoi(name.substr(dash + 1));
      if (i >= 0 && i <= 3) return g_power(i, k);
    }
  }
  throw std::invalid_argument("unknown expression name: " + name);
}

void FunctionExpr::canonicalize() {
  for (auto& t : terms) {
    int m = std::min({t.e[0], t.e[1], t.e[2], t.e[3]});
    if (m != 0) {
      for (auto& x : t.e) x -= m;
      t.coeff = t.coeff.times_sqrt3_pow(m);
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.e < b.e; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().e == t.e) {
      merged.back().coeff = merged.back().coeff + t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms.clear();
  for (auto& t : merged) {
    if (!t.coeff.is_zero()) terms.push_back(std::move(t));
  }
}

bool FunctionExpr::operator==(const FunctionExpr& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].e != o.terms[i].e || !(terms[i].coeff == o.terms[i].coeff))
      return false;
  }
  return true;
}

std::string FunctionExpr::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i].coeff.str();
    for (int j = 0; j < 4; ++j) {
      if (terms[i].e[j] != 0)
        out += "*g" + std::to_string(j) + "^" + std::to_string(terms[i].e[j]);
    }
  }
  return out;
}

}  // namespace rcm
