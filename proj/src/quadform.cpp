#include "rcm/quadform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rcm {

Discriminant Discriminant::of_n(long n) {
  if (n <= 0) throw std::invalid_argument("n must be positive");
  Discriminant d;
  d.n = n;
  d.D = -n;
  d.residue_class = static_cast<int>(n % 24);
  long core = 1;
  long rest = n;
  for (long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) rest /= p * p;
    if (rest % p == 0) {
      core *= p;
      rest /= p;
    }
  }
  core *= rest;
  d.core = -core;
  return d;
}

QuadForm principal_form(const Discriminant& d) {
  long r = ((d.D % 4) + 4) % 4;
  if (r != 1) throw std::invalid_argument("principal_form: D must be 1 mod 4");
  return QuadForm{1, 1, (1 + d.n) / 4};
}

bool is_reduced(const QuadForm& f) {
  if (f.a <= 0 || f.c < f.a) return false;
  long ab = std::abs(f.b);
  if (ab > f.a) return false;
  if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

std::vector<QuadForm> enumerate_reduced(long D) {
  if (D >= 0) throw std::invalid_argument("enumerate_reduced: D must be negative");
  long r = ((D % 4) + 4) % 4;
  if (r != 0 && r != 1) throw std::invalid_argument("enumerate_reduced: D must be 0 or 1 mod 4");
  std::vector<QuadForm> out;
  for (long a = 1; 3 * a * a <= -D; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back(QuadForm{a, b, c});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadForm& x, const QuadForm& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

long class_number(long D) { return static_cast<long>(enumerate_reduced(D).size()); }

QuadForm inverse_form(const QuadForm& f) {
  QuadForm g{f.a, -f.b, f.c};
  // boundary classes are ambiguous: [a,-b,c] ~ [a,b,c] when |b| = a or a = c
  if (std::abs(g.b) == g.a || g.a == g.c) g.b = std::abs(g.b);
  return g;
}

BigComplex tau_of_form(const QuadForm& f, long prec) {
  if (prec < 64) throw std::invalid_argument("tau_of_form: prec >= 64 required");
  long wp = prec + 16;
  long m = 4 * f.a * f.c - f.b * f.b;
  if (m <= 0 || f.a <= 0) throw std::invalid_argument("tau_of_form: not positive definite");
  BigFloat root = BigFloat::of(mpz_class(m), wp).sqrt();
  BigFloat twoa = BigFloat::of(2 * f.a, wp);
  return BigComplex(BigFloat::of(-f.b, wp) / twoa, root / twoa);
}

}  // namespace rcm
