#include "rcm/orderunits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rcm {

namespace {

long mod(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

std::vector<std::pair<long, int>> factorize(long m) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (m > 1) f.push_back({m, 1});
  return f;
}

long crt2(long r1, long m1, long r2, long m2) {
  // m1, m2 coprime; result mod m1*m2
  for (long k = 0; k < m1; ++k) {
    long x = r2 + k * m2;
    if (mod(x, m1) == mod(r1, m1)) return mod(x, m1 * m2);
  }
  throw std::logic_error("crt2: no solution");
}

}  // namespace

std::string OrderElem::str() const {
  if (s == 0) return std::to_string(t);
  std::string out = (s == 1 ? "" : std::to_string(s)) + "t";
  if (t != 0) out += (t > 0 ? "+" : "") + std::to_string(t);
  return out;
}

long theta_norm_c(long n, long N) {
  if (mod(n, 4) != 3) throw std::invalid_argument("theta defined only for n = 3 mod 4");
  // (1+n)/4 as an integer, then reduced
  return mod((1 + n) / 4, N);
}

long norm_mod(const OrderElem& x, long N, long n) {
  long C = theta_norm_c(n, N);
  // N(s theta + t) = t^2 + s t + C s^2  (theta + conj = 1, theta*conj = C)
  return mod(x.t * x.t + x.s * x.t + C * x.s * x.s, N);
}

bool is_unit(const OrderElem& x, long N, long n) {
  return std::gcd(norm_mod(x, N, n), N) == 1;
}

OrderElem unit_mul(const OrderElem& x, const OrderElem& y, long N, long n) {
  long C = theta_norm_c(n, N);
  // theta^2 = theta - C
  long s = mod(x.s * y.s + x.s * y.t + x.t * y.s, N);
  long t = mod(x.t * y.t - C * x.s * y.s, N);
  return OrderElem{s, t};
}

OrderElem unit_pow(const OrderElem& x, long e, long N, long n) {
  OrderElem acc{0, 1};
  OrderElem base = x;
  while (e > 0) {
    if (e & 1) acc = unit_mul(acc, base, N, n);
    base = unit_mul(base, base, N, n);
    e >>= 1;
  }
  return acc;
}

long element_order(const OrderElem& x, long N, long n) {
  if (!is_unit(x, N, n)) throw std::invalid_argument("element_order: not a unit");
  OrderElem acc = x;
  long k = 1;
  const OrderElem one{0, 1};
  while (!(acc == one)) {
    acc = unit_mul(acc, x, N, n);
    ++k;
    if (k > N * N) throw std::logic_error("element_order: runaway");
  }
  return k;
}

std::vector<OrderElem> all_units(long N, long n) {
  std::vector<OrderElem> out;
  for (long s = 0; s < N; ++s)
    for (long t = 0; t < N; ++t) {
      OrderElem x{s, t};
      if (is_unit(x, N, n)) out.push_back(x);
    }
  return out;
}

long unit_count(long N, long n) { return static_cast<long>(all_units(N, n).size()); }

std::vector<OrderElem> closure(const std::vector<OrderElem>& gens, long N, long n) {
  std::set<std::pair<long, long>> seen;
  std::vector<OrderElem> work{OrderElem{0, 1}};
  seen.insert({0, 1});
  for (size_t i = 0; i < work.size(); ++i) {
    for (const auto& g : gens) {
      OrderElem y = unit_mul(work[i], g, N, n);
      if (seen.insert({y.s, y.t}).second) work.push_back(y);
    }
  }
  std::sort(work.begin(), work.end(), [](const OrderElem& a, const OrderElem& b) {
    return std::tie(a.s, a.t) < std::tie(b.s, b.t);
  });
  return work;
}

std::vector<long> invariant_factors(long N, long n) {
  std::vector<OrderElem> units = all_units(N, n);
  long order = static_cast<long>(units.size());
  // per prime p | order: partition exponents from counts of p^k-torsion
  std::map<long, std::vector<int>> partitions;
  for (auto [p, e] : factorize(order)) {
    (void)e;
    std::vector<long> cnt;  // cnt[k] = #{x : x^(p^k) = 1}
    cnt.push_back(1);
    long pk = 1;
    while (true) {
      pk *= p;
      long c = 0;
      for (const auto& u : units) {
        if (unit_pow(u, pk, N, n) == OrderElem{0, 1}) ++c;
      }
      cnt.push_back(c);
      if (c == cnt[cnt.size() - 2]) break;  // saturated
    }
    // log_p of successive ratios = #{factors with exponent >= k}
    std::vector<int> geq;
    for (size_t k = 1; k < cnt.size(); ++k) {
      long ratio = cnt[k] / cnt[k - 1];
      int lg = 0;
      while (ratio > 1) {
        ratio /= p;
        ++lg;
      }
      if (lg == 0) break;
      geq.push_back(lg);
    }
    // conjugate partition -> exponent multiset (descending)
    std::vector<int> exps;
    for (int i = 0; !geq.empty() && i < geq[0]; ++i) {
      int e2 = 0;
      for (int g : geq)
        if (g > i) ++e2;
      exps.push_back(e2);
    }
    partitions[p] = exps;  // descending
  }
  size_t nfac = 0;
  for (auto& [p, ex] : partitions) nfac = std::max(nfac, ex.size());
  std::vector<long> factors(nfac, 1);
  for (auto& [p, ex] : partitions) {
    for (size_t i = 0; i < ex.size(); ++i) {
      long pe = 1;
      for (int k = 0; k < ex[i]; ++k) pe *= p;
      factors[i] *= pe;  // align largest with largest
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

namespace {

// Paper-style search within one modulus: first unit of maximal order, then
// repeatedly the first unit of smallest order that extends the subgroup as
// a direct factor.
std::pair<std::vector<OrderElem>, std::vector<long>> basis_search(long N, long n) {
  std::vector<OrderElem> units = all_units(N, n);
  long total = static_cast<long>(units.size());
  std::map<std::pair<long, long>, long> orders;
  long maxorder = 0;
  for (const auto& u : units) {
    long o = element_order(u, N, n);
    orders[{u.s, u.t}] = o;
    maxorder = std::max(maxorder, o);
  }
  std::vector<OrderElem> gens;
  std::vector<long> gorders;
  std::vector<OrderElem> sub;
  std::set<std::pair<long, long>> insub;
  auto update_sub = [&]() {
    sub = closure(gens, N, n);
    insub.clear();
    for (const auto& u : sub) insub.insert({u.s, u.t});
  };
  update_sub();
  while (static_cast<long>(sub.size()) < total) {
    OrderElem pick{};
    long pickorder = 0;
    if (gens.empty()) {
      for (const auto& u : units) {
        if (orders[{u.s, u.t}] == maxorder) {
          pick = u;
          pickorder = maxorder;
          break;
        }
      }
    } else {
      std::set<long> distinct;
      for (const auto& u : units)
        if (!insub.count({u.s, u.t})) distinct.insert(orders[{u.s, u.t}]);
      bool found = false;
      for (long o : distinct) {
        for (const auto& u : units) {
          if (insub.count({u.s, u.t}) || orders[{u.s, u.t}] != o) continue;
          auto test = gens;
          test.push_back(u);
          if (static_cast<long>(closure(test, N, n).size()) ==
              static_cast<long>(sub.size()) * o) {
            pick = u;
            pickorder = o;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) throw std::logic_error("basis_search: no splitting element");
    }
    gens.push_back(pick);
    gorders.push_back(pickorder);
    update_sub();
  }
  return {gens, gorders};
}

}  // namespace

UnitGroupDescription group_structure(long N, long n) {
  UnitGroupDescription d;
  d.N = N;
  d.n = n;
  d.group_order = unit_count(N, n);
  d.iso_type = invariant_factors(N, n);
  if (N == 72) {
    auto [g9, o9] = basis_search(9, n);
    auto [g8, o8] = basis_search(8, n);
    for (size_t i = 0; i < g9.size(); ++i) {
      OrderElem lift{crt2(g9[i].s, 9, 0, 8), crt2(g9[i].t, 9, 1, 8)};
      d.generators.push_back(lift);
      d.orders.push_back(o9[i]);
    }
    for (size_t i = 0; i < g8.size(); ++i) {
      OrderElem lift{crt2(0, 9, g8[i].s, 8), crt2(1, 9, g8[i].t, 8)};
      d.generators.push_back(lift);
      d.orders.push_back(o8[i]);
    }
  } else {
    auto [g, o] = basis_search(N, n);
    d.generators = g;
    d.orders = o;
  }
  return d;
}

std::vector<OrderElem> paper_generators() {
  return {OrderElem{5, 7}, OrderElem{6, 7}, OrderElem{7, 7}, OrderElem{4, 7},
          OrderElem{4, 1}};
}

}  // namespace rcm
