#include "rcm/polynomial.hpp"

namespace rcm {

PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

PolyZ poly_add(const PolyZ& a, const PolyZ& b) {
  PolyZ r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}

void poly_trim(PolyZ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool poly_eq(const PolyZ& a, const PolyZ& b) {
  PolyZ x = a, y = b;
  poly_trim(x);
  poly_trim(y);
  return x == y;
}

PolyZ expand_reciprocal_lift(const PolyZ& q) {
  size_t h = q.empty() ? 0 : q.size() - 1;
  PolyZ result;
  PolyZ x2p1{1, 0, 1};  // x^2 + 1
  for (size_t nu = 0; nu <= h; ++nu) {
    // q[nu] * (x^2+1)^nu * x^(h-nu)
    PolyZ term{q[nu]};
    for (size_t k = 0; k < nu; ++k) term = poly_mul(term, x2p1);
    PolyZ shifted(h - nu, mpz_class(0));
    shifted.insert(shifted.end(), term.begin(), term.end());
    result = poly_add(result, shifted);
  }
  return result;
}

PolyZ poly_reverse(const PolyZ& p) {
  PolyZ r(p.rbegin(), p.rend());
  poly_trim(r);
  return r;
}

std::string poly_str(const PolyZ& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  for (size_t k = p.size(); k-- > 0;) {
    const mpz_class& c = p[k];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (k == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += var;
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace rcm
