#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mmc/braid.hpp"
#include "mmc/rational.hpp"

namespace mmc {

// Symmetric integer coupling matrix with zero diagonal for an Ising spin
// system on n sites.
struct CouplingMatrix {
  int n = 0;
  std::vector<std::vector<std::int64_t>> j;

  // Throws std::invalid_argument unless j is an n x n symmetric matrix with
  // zero diagonal and n >= 1.
  void validate() const;

  std::int64_t positive_sum() const;  // sum of the positive entries (whole matrix)
  std::int64_t abs_sum() const;       // sum of |entries| (whole matrix)
};

// Evaluation parameters: with a = -i exp(-i pi / m) the coupling value is
//   y = (a^{-4d} + a^{4d}) / 2 = cos(4 pi d / m),
// so |y| <= 1, with |y| < 1 exactly when 2d is not a multiple of m.
struct IsingParams {
  int m = 3;  // odd level >= 3
  int d = 1;  // linking multiplicity per auxiliary component, >= 1

  void validate() const;  // m odd >= 3, d >= 1, else std::invalid_argument
  double y() const;
  // The rational values of y when they exist (y = 1 or y = -1/2), else nullopt.
  std::optional<Rational> exact_y() const;
};

// Smallest d in 1..m-1 whose y lies in (0,1) (positive_y) or (-1,0); m = 3
// admits only the negative regime.
std::optional<int> find_twist_for_regime(int m, bool positive_y);

// Ising partition function Z(J, y) = sum over spin vectors s in {-1,1}^n of
// y^{sum_{i<j} J_ij [s_i == s_j]}, by exact enumeration of all 2^n vectors
// (refused above n = 30). The exact overload keeps rational arithmetic
// throughout and throws std::overflow_error if 64-bit rationals overflow.
double z_partition(const CouplingMatrix& j, double y);
Rational z_partition_exact(const CouplingMatrix& j, const Rational& y);

// A link whose sublink state sum evaluates Z(J, y): one component per spin
// site plus one auxiliary component per unit of |J_ij|, with prescribed
// pairwise linking numbers, presented as a plat-closed braid.
struct CompiledLink {
  LinkingMatrix lk;   // c = n + sum_{i<j} |J_ij| components
  BraidWord braid;    // plat braid on 2c strands with identity permutation
  // fmap[k] = (i, j, t): the (n+1+k)-th component is the t-th auxiliary
  // component of the site pair (i, j), all 1-based, pairs in lexicographic
  // order.
  std::vector<std::array<int, 3>> fmap;
};

// Component n+1+k carries linking d with site i and d * sgn(J_ij) with site
// j; all other pairs link zero. The braid realizes each nonzero pairwise
// linking l with a conjugated block of 2|l| equal-sign crossings, so its
// plat-closure linking matrix reproduces lk exactly.
CompiledLink compile_link(const CouplingMatrix& j, const IsingParams& params);

// Checks the factorization of the compiled link's state sum: evaluates
//   E(L)  vs  Z(J,y) * a^{-2 d P(J)} * sqrt(y)^{-sum_{i<j} J_ij} * sqrt(z)^{A(J)/2}
// with z = 2 (a^{-4d} + a^{4d}) and the square-root branches tied by
// sqrt(y) sqrt(z) = a^{-4d} + a^{4d}, and returns |LHS - RHS|. The state-sum
// side is refused above 24 link components.
double verify_claim(const CouplingMatrix& j, const IsingParams& params);

// Ordered cut statistics of a graph: max_cut is the largest number of edges
// severed by a bipartition (S, V-S); count is the number of ordered
// bipartitions attaining it, so 2 <= count <= 2^n whenever n >= 1.
struct CutStats {
  int max_cut = 0;
  std::int64_t count = 0;
  bool operator==(const CutStats& o) const {
    return max_cut == o.max_cut && count == o.count;
  }
};

struct MaxcutResult {
  CutStats stats;      // exhaustive enumeration
  int k = 0;           // smallest even integer >= (n+1) ln 2 / |ln |y||
  double z = 0.0;      // Z(K * adjacency, y)
  CutStats recovered;  // reconstructed from adversarial approximations of z
};

// Demonstrates max-cut recovery from the partition function: builds
// J = K * adjacency, evaluates Z, perturbs it to both edges of the allowed
// multiplicative band [1 - 2^{-n-3}, 1 + 2^{-n-3}], and recovers (max_cut,
// count) from each perturbed value by threshold scanning; both recoveries
// must agree with the exhaustive statistics. Requires a 0/1 adjacency
// matrix, |y| < 1 (std::invalid_argument otherwise), and n <= 16 (refused).
MaxcutResult maxcut_recover(const CouplingMatrix& adjacency, const IsingParams& params);

// Z(J, y) in the negative-coupling regime -1 < y < 0 with 0/1 couplings:
// the value is real by construction; sign is -1, 0, or +1, taken from exact
// rational arithmetic when y is rational (m = 3) and from the float value
// otherwise. Requires y < 0 (std::invalid_argument) and n <= 24 (refused).
struct SignRegimeResult {
  double z = 0.0;
  int sign = 0;
};
SignRegimeResult sign_regime(const CouplingMatrix& j, const IsingParams& params);

}  // namespace mmc
