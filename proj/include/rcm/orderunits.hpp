#pragma once

#include <string>
#include <vector>

namespace rcm {

/// Residue s*theta + t in O/NO where theta = (1 + i sqrt(n))/2, i.e.
/// theta^2 = theta - C with C = (1+n)/4. Requires n = 3 mod 4.
struct OrderElem {
  long s = 0, t = 0;
  bool operator==(const OrderElem& o) const = default;
  std::string str() const;
};

/// C = (1+n)/4 reduced mod N.
long theta_norm_c(long n, long N);

long norm_mod(const OrderElem& x, long N, long n);
bool is_unit(const OrderElem& x, long N, long n);
OrderElem unit_mul(const OrderElem& x, const OrderElem& y, long N, long n);
OrderElem unit_pow(const OrderElem& x, long e, long N, long n);
long element_order(const OrderElem& x, long N, long n);

std::vector<OrderElem> all_units(long N, long n);
long unit_count(long N, long n);

/// Subgroup generated by gens (brute-force closure). Sorted by (s, t).
std::vector<OrderElem> closure(const std::vector<OrderElem>& gens, long N, long n);

/// Invariant factors d1 | d2 | ... of (O/NO)*, computed by counting
/// elements killed by each prime power (no generator search involved).
std::vector<long> invariant_factors(long N, long n);

struct UnitGroupDescription {
  long N = 0;
  long n = 0;
  long group_order = 0;
  std::vector<OrderElem> generators;
  std::vector<long> orders;
  std::vector<long> iso_type;  // invariant factors, ascending
};

/// Generators found by exhaust-and-remove (first unit of maximal order,
/// then smallest-order units that split off as direct factors). For N = 72
/// the search runs independently mod 9 and mod 8 and lifts by CRT.
UnitGroupDescription group_structure(long N, long n);

/// The five generators 5t+7, 6t+7, 7t+7, 4t+7, 4t+1 used for the
/// n = 19 mod 24 action table. Orders there: 24, 3, 12, 2, 2.
std::vector<OrderElem> paper_generators();

}  // namespace rcm
