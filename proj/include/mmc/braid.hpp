#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mmc {

// A word in the braid group B_n. Letters are nonzero integers g with
// |g| <= strands-1; the sign is the crossing sign and |g| the generator index.
// An empty letter list is the identity braid.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  // Throws std::invalid_argument if strands < 1 or any letter is out of range.
  void validate() const;

  bool operator==(const BraidWord& other) const {
    return strands == other.strands && letters == other.letters;
  }
};

enum class ClosureKind { Trace, Plat };

// Parses the text format: a header line `n=<strands>` followed by
// whitespace-separated nonzero integer letters.
BraidWord parse_braid(const std::string& text);

// Inverse of parse_braid: `n=<strands>\n<letters separated by single spaces>`.
std::string format_braid(const BraidWord& word);

// The permutation induced by the word: result[p] = final position of the
// strand that starts at position p (positions are 0-based here).
std::vector<int> braid_permutation(const BraidWord& word);

// Partition of the strands of the closed-up diagram into link components.
// strand_component[s] is the component id (0-based, in canonical order) of
// the strand starting at bottom position s. Canonical order: by smallest
// strand-start position (Trace) or smallest top-cap position (Plat).
struct ComponentPartition {
  int count = 0;
  std::vector<int> strand_component;
};

// Throws std::invalid_argument for a plat closure with odd strand count.
ComponentPartition closure_components(const BraidWord& word, ClosureKind kind);

// Pairwise linking numbers of the closure: symmetric, zero diagonal; entry
// (i,j) is half the signed count of crossings between components i and j.
struct LinkingMatrix {
  int components = 0;
  std::vector<std::vector<std::int64_t>> entries;
};

LinkingMatrix linking_matrix(const BraidWord& word, ClosureKind kind);

}  // namespace mmc
