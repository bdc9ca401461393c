#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcm/polynomial.hpp"
#include "rcm/quadform.hpp"

namespace rcm {

enum class PolyKind { pn, qn, g2pow12, g2pow6 };

std::string kind_name(PolyKind k);
std::optional<PolyKind> kind_from_name(const std::string& s);

/// Raised when coefficient recognition still fails after the precision
/// escalations; carries the offending build's diagnostics.
struct NumericFailure : std::runtime_error {
  explicit NumericFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Exact class polynomial. Coefficients are stored descending (leading
/// first) as pairs (u, v) meaning u + v*sqrt(D'); v = 0 throughout for the
/// integer kinds pn / qn / g2pow12.
struct ClassPolynomial {
  PolyKind kind = PolyKind::pn;
  long n = 0;
  long core = 0;  // D'
  std::vector<std::pair<mpz_class, mpz_class>> coeffs;
  long prec_used = 0;
  double max_residual = 0.0;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_integer_kind() const { return kind != PolyKind::g2pow6; }
  /// Ascending integer coefficients (integer kinds only).
  PolyZ to_polyz() const;
  std::string str() const;
  std::string to_json() const;
  static ClassPolynomial from_json(const std::string& line);
};

/// max(192, ceil(pi sqrt(n)/ln 2 * sum 1/a) + 16 h + 64).
long choose_precision(long n, PolyKind kind);

ClassPolynomial build_pn(long n, long prec = 0);
ClassPolynomial build_qn(long n, long prec = 0);
ClassPolynomial build_g2pow12(long n, long prec = 0);
ClassPolynomial build_g2pow6(long n, long prec = 0);
ClassPolynomial build_classpoly(PolyKind kind, long n, long prec = 0, int jobs = 0);

/// a_nu = a_(2h-nu) for all nu and a_0 = 1.
bool verify_palindrome(const ClassPolynomial& p);

/// Append-only JSON-lines cache keyed by (n, kind).
struct PolyCache {
  std::string path;
  std::optional<ClassPolynomial> lookup(PolyKind kind, long n) const;
  void append(const ClassPolynomial& p) const;
};

}  // namespace rcm
