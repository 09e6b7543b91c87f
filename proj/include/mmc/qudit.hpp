#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mmc/braid.hpp"

namespace mmc {

// A phased monomial in the shift/clock operators of n m-dimensional qudits:
//
//   zeta^{phase_exp} * Z_1^{z_1} ... Z_n^{z_n} * X_1^{x_1} ... X_n^{x_n}
//
// with zeta = e^{i pi / m} (so even phase exponents are powers of
// omega = e^{2 pi i / m}), X|j> = |j+1 mod m>, Z|j> = omega^j |j>.
// The canonical written order keeps every Z to the left of every X; moving
// an X past a Z on the same site costs X Z = omega^{-1} Z X.
struct QuditMonomial {
  int n = 0;                // qudit count
  int m = 3;                // qudit dimension, odd >= 3
  int phase_exp = 0;        // mod 2m
  std::vector<int> z_exp;   // size n, each in [0, m)
  std::vector<int> x_exp;   // size n, each in [0, m)

  static QuditMonomial identity(int n, int m);
  // Single-site operators (1-based site index).
  static QuditMonomial x(int n, int m, int site);
  static QuditMonomial z(int n, int m, int site);
  // U_i = X_i X_{i+1} Z_i Z_{i+1}^{-1} in canonical form (phase 0).
  static QuditMonomial u_op(int n, int m, int i);
  // The twisted partner X_i X_{i+1} Z_i^{-1} Z_{i+1} (phase 0).
  static QuditMonomial u_tilde_op(int n, int m, int i);

  void validate() const;
  bool is_identity() const;
  bool operator==(const QuditMonomial& other) const;
  bool operator!=(const QuditMonomial& other) const { return !(*this == other); }
  // Same z/x exponents, phase ignored.
  bool same_plain_part(const QuditMonomial& other) const;
  QuditMonomial plain() const;  // copy with phase_exp = 0
};

// Exact product in canonical form; throws on mismatched n or m.
QuditMonomial monomial_multiply(const QuditMonomial& a, const QuditMonomial& b);
QuditMonomial monomial_inverse(const QuditMonomial& a);
QuditMonomial monomial_pow(const QuditMonomial& a, int e);

// Symplectic form <x_a, z_b> - <x_b, z_a> mod m; a and b commute up to a
// phase of omega^{-symp}: a b = omega^{-symp(a,b)} b a.
int symplectic_form(const QuditMonomial& a, const QuditMonomial& b);

// Dense realization on (C^m)^{(x) n}, site 1 most significant.
Eigen::MatrixXcd dense_monomial(const QuditMonomial& a);

// Heisenberg-picture conjugation by one braid generator of the two-qudit
// gate representation: returns R_{sigma_i}^{sign dagger} a R_{sigma_i}^{sign}.
// Exact phases; works for every odd m >= 3. 1 <= i <= n-1.
QuditMonomial conjugate_by_generator(const QuditMonomial& a, int i, int sign);

// Pullback through a whole braid word: rho(w)^dagger a rho(w).
QuditMonomial conjugate_by_word(const QuditMonomial& a, const BraidWord& word);

// The group-presentation coordinates of a monomial: exponents over the 2n
// generators u_{2i-1} = X_i (i = 1..n), u_{2i} = Z_i Z_{i+1}^{-1} (i < n),
// u_{2n} = Z_n, multiplied in ascending generator order, with an explicit
// zeta-phase correction out front.
struct UWord {
  int n = 0;
  int m = 3;
  int phase_exp = 0;        // mod 2m
  std::vector<int> exps;    // size 2n, each in [0, m)
};

UWord monomial_to_uword(const QuditMonomial& a);
QuditMonomial uword_to_monomial(const UWord& w);

}  // namespace mmc
