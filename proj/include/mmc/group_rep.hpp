#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mmc/braid.hpp"

namespace mmc {

// Polynomial-space exact simulation of the eight-dimensional qubit braiding
// gates: every reachable operator factors as dense(a) * dense(c) where `a`
// lies in an abelian group of exponentials of commuting self-inverse Pauli
// words and `c` is a basis-permutation Clifford generated by double-controlled
// NOT gates.

// A Pauli word s * X^x Z^z (s = +/-1) in canonical form: all X factors to the
// left of all Z factors, per qubit. A qubit with both bits set carries the
// product X*Z (a real matrix; the overall sign is stored separately).
struct PauliWord {
  int q = 0;
  int sign = 1;
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> z;

  static PauliWord identity(int q);
  bool plain_equal(const PauliWord& o) const { return x == o.x && z == o.z; }
  bool operator==(const PauliWord& o) const {
    return q == o.q && sign == o.sign && x == o.x && z == o.z;
  }
};

PauliWord pauli_multiply(const PauliWord& a, const PauliWord& b);
Eigen::MatrixXcd dense_pauli(const PauliWord& w);
// "+XZY..." with '.' for identity; 'Y' denotes the per-qubit product X*Z.
std::string format_pauli(const PauliWord& w);

// The single-site flip axis: X_i for m = 3 and Z_{i-1} X_i Z_{i+1} for
// m >= 5 (out-of-range Z factors drop out at the register boundary).
PauliWord axis_word(int i, int m, int q);
// Product of consecutive flip axes over qubits k..l, in canonical form.
PauliWord interval_word(int k, int l, int m, int q);

// Element of the abelian factor: sign * prod over intervals (k,l) of
// exp(i*pi*e/m * S_{k,l}) with S_{k,l} the interval word. Canonical form
// keeps exponents in [0, m); the relation (interval exponential)^m = -1
// folds overflow into the sign.
struct AbelianElement {
  int q = 0;
  int m = 0;
  int sign = 1;
  std::map<std::pair<int, int>, int> exps;

  static AbelianElement identity(int q, int m);
  void canonicalize();
  bool is_identity() const { return sign == 1 && exps.empty(); }
  bool operator==(const AbelianElement& o) const {
    return q == o.q && m == o.m && sign == o.sign && exps == o.exps;
  }
};

AbelianElement abelian_multiply(const AbelianElement& a, const AbelianElement& b);
AbelianElement abelian_inverse(const AbelianElement& a);
Eigen::MatrixXcd dense_abelian(const AbelianElement& a);

// Basis-permutation Clifford, stored as a forward tableau (images C P C^dag
// of X_i and Z_i) plus the inverse tableau (C^dag P C). For the reachable
// subgroup all X images are X-type, all Z images are Z-type, and the realized
// operator has every computational-basis entry in {0, 1}.
struct CliffordElement {
  int q = 0;
  std::vector<PauliWord> x_fwd, z_fwd;
  std::vector<PauliWord> x_inv, z_inv;

  static CliffordElement identity(int q);
  bool operator==(const CliffordElement& o) const {
    return q == o.q && x_fwd == o.x_fwd && z_fwd == o.z_fwd;
  }
};

// Conjugate a word through the forward tableau (w -> C w C^dag) or the
// inverse tableau (w -> C^dag w C).
PauliWord clifford_pushforward(const CliffordElement& c, const PauliWord& w);
PauliWord clifford_pullback(const CliffordElement& c, const PauliWord& w);
CliffordElement clifford_compose(const CliffordElement& a, const CliffordElement& b);
CliffordElement clifford_inverse(const CliffordElement& c);
Eigen::MatrixXcd dense_clifford(const CliffordElement& c);

// The parity-controlled flip on qubit i (controls i-1 and i+1; at the
// register ends the missing control is fixed to satisfied).
CliffordElement controlled_flip(int i, int q);

struct GroupElement {
  AbelianElement a;
  CliffordElement c;

  int q() const { return a.q; }
  int m() const { return a.m; }
  static GroupElement identity(int q, int m);
  bool operator==(const GroupElement& o) const { return a == o.a && c == o.c; }
};

// Image of braid generator sigma with center qubit i: the flip-axis
// exponential on qubit i times the parity-controlled flip.
GroupElement generator_element(int i, int m, int q);
GroupElement group_multiply(const GroupElement& g1, const GroupElement& g2);
GroupElement group_inverse(const GroupElement& g);
// q = strands + 1 qubits; letter j acts with center qubit j + 1.
GroupElement braid_to_element(const BraidWord& b, int m);
Eigen::MatrixXcd dense_group(const GroupElement& g);

struct IntervalImage {
  int k = 0;
  int l = 0;
  int sign = 1;
};

// g^dag S_{k,l} g expressed as another signed interval word; the abelian
// factor commutes with every interval word and acts trivially.
IntervalImage pullback_interval(const GroupElement& g, int k, int l);

// Breadth-first closure of the braid-generator images under multiplication.
struct GroupClosureResult {
  std::uint64_t order = 0;
  bool terminated = false;
};
GroupClosureResult enumerate_group_closure(int strands, int m, std::uint64_t max_order);

}  // namespace mmc
