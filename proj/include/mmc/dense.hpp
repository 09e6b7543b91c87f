#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "mmc/braid.hpp"

namespace mmc {

using DenseOperator = Eigen::MatrixXcd;

// Which elementary R-matrix generates the representation.
//   GaussianXe: m^2 x m^2 two-qudit gate (1/sqrt(m)) sum_j w^{j^2} U^j.
//   Potts:      m^2 x m^2 two-qudit gate (t+1)P - I with P = (1/m) sum_j U^j
//               and t + 1/t = m - 2; unitary only for m = 3.
//   Y1:         8x8 three-qubit gate, block sum of two 4x4 blocks; acts on a
//               register of n+1 qubits for n strands.
//   IsingBell:  4x4 two-qubit Clifford gate built from Bell states.
struct RMatrixKind {
  enum class Family { GaussianXe, Potts, Y1, IsingBell };
  Family family = Family::IsingBell;
  int m = 0;  // odd >= 3 where applicable; unused for IsingBell

  static RMatrixKind gaussian_xe(int m);
  static RMatrixKind potts(int m);
  static RMatrixKind y1(int m);
  static RMatrixKind ising_bell();

  int local_dim() const;  // dimension of one register site
  int locality() const;   // number of sites the gate touches (2 or 3)
  // Register sites carrying the representation of B_n.
  int sites_for_strands(int strands) const;
  bool unitary() const;  // false only for Potts with m >= 5
};

// The two-qudit clock-shift operator: U(e_i (x) e_j) = w^{i-j} e_{i+1} (x) e_{j+1},
// indices mod m, w = exp(2*pi*i/m). Exposed for oracle tests.
DenseOperator clock_shift_u(int m);

// The elementary gate itself (not yet embedded into a register).
DenseOperator build_r_matrix(const RMatrixKind& kind);
// True inverse of the elementary gate (adjoint for unitary kinds; the Potts
// gate inverts by t -> 1/t).
DenseOperator build_r_matrix_inverse(const RMatrixKind& kind);

// rho(word) = M(l_1) * M(l_2) * ... * M(l_k) where M(+g) embeds the gate at
// sites (g, ..., g+locality-1) (1-based) and M(-g) embeds its inverse.
// Throws refused_error when the register dimension exceeds 4096.
DenseOperator represent_braid(const BraidWord& word, const RMatrixKind& kind);

struct BraidRelationReport {
  double yang_baxter_residual = 0.0;
  double far_commutation_residual = 0.0;
};

// Max operator-norm residuals of s_i s_{i+1} s_i - s_{i+1} s_i s_{i+1} over
// all adjacent pairs, and of [s_i, s_j] over all |i-j| >= 2, in B_n.
BraidRelationReport check_braid_relations(const RMatrixKind& kind, int n);

// Largest singular value.
double operator_norm(const DenseOperator& a);

// min over unit phases theta of ||a - e^{i theta} b||, using the trace-overlap
// phase; equals the operator-norm distance when a and b are proportional.
double phase_aligned_distance(const DenseOperator& a, const DenseOperator& b);

struct ImageGroupResult {
  std::int64_t order_up_to_phase = 0;
  bool terminated = false;
};

// Breadth-first closure of the group generated by the braid generators and
// their inverses, identifying operators that differ by a global phase.
// Stops early (terminated=false) once more than max_order distinct elements
// are seen. Throws refused_error when the register dimension exceeds 4096.
ImageGroupResult enumerate_image_group(const RMatrixKind& kind, int n,
                                       std::int64_t max_order);

}  // namespace mmc
