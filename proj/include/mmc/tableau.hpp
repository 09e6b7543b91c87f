#pragma once

#include <cstdint>
#include <vector>

#include "mmc/braid.hpp"
#include "mmc/qudit.hpp"

namespace mmc {

// A list of phased-monomial stabilizers with their eigenvalue exponents:
// row (S, e) asserts S|phi> = omega^e |phi> with S a phase-free monomial.
// Rows of a *measurable* tableau must pairwise commute and be independent;
// construction does not enforce this (see init_pair_tableau), measurement
// validates lazily.
struct StabilizerTableau {
  struct Row {
    QuditMonomial op;   // phase_exp always 0
    int eigen_exp = 0;  // mod m
  };
  int n = 0;
  int m = 3;
  std::vector<Row> rows;
};

// Rows { X_i X_{i+1} Z_i^{-1} Z_{i+1} : i = 1..n-1 } + { X_1 Z_1, X_n Z_n^{-1} },
// all with eigenvalue exponent 0: the operators that commute with every
// U_i = X_i X_{i+1} Z_i Z_{i+1}^{-1} and hence with all braiding images.
// Note the rows do not pairwise commute, so this tableau supports evolution
// but not measurement. Requires prime m.
StabilizerTableau init_pair_tableau(int n, int m);

// Heisenberg evolution: each row S is replaced by rho(word) S rho(word)^dagger
// with the accumulated phase folded into the eigenvalue exponent.
StabilizerTableau evolve_tableau(const StabilizerTableau& t, const BraidWord& word);

struct MeasureResult {
  int outcome_exp = 0;  // measured eigenvalue omega^{outcome_exp}
  StabilizerTableau updated;
};

// Projective measurement of a monomial observable T (phase exponent must be
// even so its eigenvalues are powers of omega). Requires prime m and pairwise
// commuting rows. If T commutes with every row it must lie in the row span
// ("incomplete tableau" otherwise) and the outcome is deterministic; else the
// outcome is uniform over Z_m, drawn from the seeded generator, and the
// tableau is updated in place of the first anticommuting row.
MeasureResult measure_monomial(const StabilizerTableau& t, const QuditMonomial& T,
                               std::uint64_t rng_seed);

}  // namespace mmc
