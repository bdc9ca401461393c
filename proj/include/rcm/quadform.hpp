#pragma once

#include <vector>

#include "rcm/bigfloat.hpp"

namespace rcm {

/// Discriminant wrapper for D = -n. residue_class is n mod 24 (19 and 3 are
/// the interesting classes); core is the squarefree part D' of D.
struct Discriminant {
  long n = 0;
  long D = 0;
  int residue_class = 0;
  long core = 0;

  static Discriminant of_n(long n);
};

/// Primitive reduced integral binary quadratic form a x^2 + b x y + c y^2.
struct QuadForm {
  long a = 0, b = 0, c = 0;

  long disc() const { return b * b - 4 * a * c; }
  bool operator==(const QuadForm& o) const = default;
};

/// Identity class [1, 1, (1+n)/4]; requires D = -n = 1 mod 4.
QuadForm principal_form(const Discriminant& d);

/// One reduced representative per class, sorted by (a, b).
std::vector<QuadForm> enumerate_reduced(long D);
inline std::vector<QuadForm> enumerate_reduced(const Discriminant& d) {
  return enumerate_reduced(d.D);
}

long class_number(long D);

/// Reduced representative of the inverse class [a, -b, c].
QuadForm inverse_form(const QuadForm& f);

bool is_reduced(const QuadForm& f);

/// tau = (-b + i sqrt(4ac - b^2)) / (2a), the root of a z^2 + b z + c in the
/// upper half plane.
BigComplex tau_of_form(const QuadForm& f, long prec);

}  // namespace rcm
