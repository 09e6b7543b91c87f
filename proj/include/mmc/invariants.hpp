#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mmc/braid.hpp"
#include "mmc/cyclotomic.hpp"
#include "mmc/rational.hpp"
#include "mmc/seifert.hpp"

namespace mmc {

// Linking-matrix state sum at an odd level m >= 3. With omega = zeta_m,
//   e    = sum over all sublinks S of omega^{2 <S, L-S>},
// where <S, L-S> is the total linking number between S and its complement,
// and i_y1 = e / 4. Both values live in Q(zeta_{4m}).
struct StateSumResult {
  Cyclotomic e;
  Cyclotomic i_y1;
};

// Exact enumeration of all 2^c sublinks. Requires a symmetric linking matrix
// with zero diagonal and 1 <= c <= 30 components; larger links are refused
// (split the link and use multiplicativity over split unions instead).
StateSumResult lm_state_sum(const LinkingMatrix& lk, int m);

enum class GaussSumMode { Brute, Fast };

// Quadratic-form Gauss sum attached to Seifert data at an odd prime p:
//   value = p^{-b1/2} * sum over v in F_p^{b1} of zeta_p^{v^T V v},
// an element of Q(zeta_{4p}). corank is the corank over F_p of the
// symmetrized form (V + V^T)/2, so |value| = sqrt(p)^corank.
//
// Brute mode enumerates all p^b1 vectors and is refused above 10^7 of them;
// fast mode diagonalizes the form over F_p and multiplies one-variable Gauss
// sums. The two modes return exactly equal field elements.
struct GaussSumValue {
  Cyclotomic value;
  int corank = 0;
};
GaussSumValue i_xe_eval(const SeifertData& s, int p, GaussSumMode mode);

enum class Tristate { No, Yes, Unknown };

// Whether the Kauffman two-variable evaluation point (a, z), with
// a = exp(2*pi*i*a_turns) and z = 2*cos(2*pi*z_turns), belongs to one of the
// five families where the evaluation is classically tractable:
//   (1) a = +-i;
//   (2) (a, z) = (-q^{+-3}, q + 1/q) with q^16 = 1 or q^24 = 1, q != +-i;
//   (3) (a, z) = ( q^{+-3}, q + 1/q) with q^8  = 1 or q^12 = 1, q != +-i;
//   (4) (a, z) = (-q^{+-1}, q + 1/q) with q^16 = 1,             q != +-i;
//   (5) (a, z) = +-(1, q + 1/q)      with q^5 = 1.
// Inputs that cannot be written in this root-of-unity form (nullopt), or that
// fall outside the classified domain (z = 0), report Unknown.
Tristate kauffman_classical_point(const std::optional<Rational>& a_turns,
                                  const std::optional<Rational>& z_turns);

}  // namespace mmc
