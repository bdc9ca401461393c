#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rcm/funcexpr.hpp"
#include "rcm/orderunits.hpp"
#include "rcm/quadform.hpp"

namespace rcm {

/// 2x2 matrix over Z/NZ with determinant coprime to N.
struct GL2ModN {
  long m[2][2] = {{1, 0}, {0, 1}};
  long N = 72;

  long det() const;
  bool operator==(const GL2ModN& o) const;
  static GL2ModN mul(const GL2ModN& a, const GL2ModN& b);
  std::string str() const;
};

/// Exact integer 2x2 matrix (for SL2 lifts and S/T words).
struct Mat2Z {
  mpz_class a, b, c, d;

  static Mat2Z identity() { return {1, 0, 0, 1}; }
  static Mat2Z T_pow(const mpz_class& k) { return {1, k, 0, 1}; }
  static Mat2Z S() { return {0, 1, -1, 0}; }
  mpz_class det() const { return a * d - b * c; }
  static Mat2Z mul(const Mat2Z& x, const Mat2Z& y);
  bool operator==(const Mat2Z& o) const = default;
  std::string str() const;
};

/// Word in S and T evaluating exactly to a given SL2(Z) matrix.
/// Letters multiply left to right.
struct WordST {
  struct Letter {
    bool is_s = false;
    mpz_class pow;  // exponent of T, or of S (S powers kept mod 4)
  };
  std::vector<Letter> letters;

  Mat2Z eval() const;
};

/// g_theta(s*theta + t) = [[t + s, -C s], [s, t]] mod N (theta^2 = theta - C).
GL2ModN g_theta_matrix(const OrderElem& x, long N, long n);

/// Gee's form matrix A_{[a,b,c]} mod 72, assembled by CRT from the
/// three-case definitions at the prime powers 8 and 9. Needs D = 1 mod 4.
GL2ModN form_matrix(const QuadForm& f, long N = 72);

/// M = B * diag(1, d) with det B = 1 mod N and d = det M.
std::pair<GL2ModN, long> det_split(const GL2ModN& M);

/// Integer matrix congruent to B mod N with determinant exactly 1.
Mat2Z lift_sl2(const GL2ModN& B);

/// Euclidean S/T factorization; eval() of the result reproduces M exactly.
WordST st_decompose(const Mat2Z& M);

/// Monomial substitution g_i -> coeff_i * g_{perm[i]} followed by the
/// Galois twist sigma_twist on all cyclotomic scalars. The exact images of
/// S, T and sigma_d from the transformation lemma compose into one of these
/// for every matrix in GL2(Z/72).
struct MonomialAction {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<RootOfUnity, 4> coeff{RootOfUnity::one(), RootOfUnity::one(),
                                   RootOfUnity::one(), RootOfUnity::one()};
  long twist = 1;

  static MonomialAction identity_action() { return {}; }
  bool is_identity() const;
  bool operator==(const MonomialAction& o) const = default;
};

MonomialAction action_of_S();
MonomialAction action_of_T();
MonomialAction action_of_sigma(long d);

/// Apply a then b (matching f^(AB) = (f^A)^B for matrix product A*B).
MonomialAction compose(const MonomialAction& a, const MonomialAction& b);
MonomialAction invert(const MonomialAction& a);
MonomialAction action_pow(const MonomialAction& a, const mpz_class& k);

/// Full pipeline det_split -> lift_sl2 -> st_decompose -> fold letters,
/// then the sigma_d twist.
MonomialAction action_of_matrix(const GL2ModN& M);

FunctionExpr apply_action(const MonomialAction& act, const FunctionExpr& h);
FunctionExpr act_on_expr(const GL2ModN& M, const FunctionExpr& h);

struct InvarianceReport {
  bool invariant = false;
  std::optional<OrderElem> witness;
  std::optional<FunctionExpr> image;
};

/// Tests h^{g_theta(x)} = h over a generating set of (O/72O)*; the paper's
/// five generators for n = 19 mod 24, the computed basis otherwise.
InvarianceReport is_class_invariant(const FunctionExpr& h, long n);

struct ConjugateDescriptor {
  FunctionExpr expr;
  QuadForm form;  // evaluation point tau_{[a,b,c]}
};

/// Symbolic transform of h under A_{[a,b,c]}; evaluating expr at
/// tau_of_form(form) yields the Galois conjugate labeled by the inverse
/// class [a,-b,c] (labeling convention; products over the whole class
/// group do not depend on it).
ConjugateDescriptor conjugate_descriptor(const QuadForm& f, const FunctionExpr& h);

}  // namespace rcm
