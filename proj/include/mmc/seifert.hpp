#pragma once

#include <cstdint>
#include <vector>

#include "mmc/braid.hpp"

namespace mmc {

// Seifert surface data for the trace closure of a braid word: the surface
// produced by Seifert's algorithm on the braid diagram (one disk per strand,
// one twisted band per crossing) together with the Seifert linking matrix of
// a band-presentation homology basis.
struct SeifertData {
  // Seifert matrix V, size b1 x b1: V[a][b] is the linking number of basis
  // loop a with the positive pushoff of basis loop b.
  std::vector<std::vector<std::int64_t>> v;
  // First Betti number of the surface: letters - strands + 1.
  int b1 = 0;
  // Number of link components of the closure.
  int components = 0;
};

// Builds the Seifert matrix of the trace closure of `word`. The basis has one
// loop per consecutive pair of same-column crossings; loops are ordered by
// column and then by height. The surface is connected exactly when every
// generator index 1..strands-1 occurs in the word; other words describe a
// split diagram and are rejected with std::invalid_argument (evaluate each
// split factor separately instead).
SeifertData seifert_from_braid(const BraidWord& word);

// Coefficients of det(V - t V^T), ascending in t and normalized up to units
// +-t^k: zero coefficients are stripped from both ends and the lowest
// coefficient is made positive. The empty vector encodes the zero polynomial.
// Exact; throws std::overflow_error if intermediates exceed 64-bit rationals.
std::vector<std::int64_t> alexander_polynomial(const SeifertData& s);

// |det(V + V^T)|: the order of the first homology of the double branched
// cover of the closure, or 0 when that group is infinite.
std::int64_t link_determinant(const SeifertData& s);

}  // namespace mmc
