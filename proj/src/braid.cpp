#include "mmc/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mmc {

void BraidWord::validate() const {
  if (strands < 1) throw std::invalid_argument("BraidWord: strands must be >= 1");
  for (int g : letters) {
    if (g == 0) throw std::invalid_argument("BraidWord: zero is not a generator");
    if (std::abs(g) > strands - 1)
      throw std::invalid_argument("BraidWord: generator index out of range");
  }
}

BraidWord parse_braid(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("braid text: empty input");
  // Trim surrounding whitespace from the header line.
  const auto first = header.find_first_not_of(" \t\r");
  const auto last = header.find_last_not_of(" \t\r");
  if (first == std::string::npos || header.compare(first, 2, "n=") != 0)
    throw std::invalid_argument("braid text: header must be n=<strands>");
  const std::string number = header.substr(first + 2, last - first - 1);
  std::size_t used = 0;
  int strands = 0;
  try {
    strands = std::stoi(number, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("braid text: malformed strand count");
  }
  if (used != number.size())
    throw std::invalid_argument("braid text: malformed strand count");

  BraidWord word;
  word.strands = strands;
  std::string token;
  while (in >> token) {
    int g = 0;
    try {
      g = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("braid text: malformed letter '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("braid text: malformed letter '" + token + "'");
    word.letters.push_back(g);
  }
  word.validate();
  return word;
}

std::string format_braid(const BraidWord& word) {
  std::ostringstream out;
  out << "n=" << word.strands << "\n";
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i) out << ' ';
    out << word.letters[i];
  }
  if (!word.letters.empty()) out << "\n";
  return out.str();
}

std::vector<int> braid_permutation(const BraidWord& word) {
  word.validate();
  const int n = word.strands;
  // strand_at[p] = strand currently occupying position p.
  std::vector<int> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (int g : word.letters) {
    const int k = std::abs(g) - 1;
    std::swap(strand_at[k], strand_at[k + 1]);
  }
  std::vector<int> perm(n);
  for (int p = 0; p < n; ++p) perm[strand_at[p]] = p;
  return perm;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Raw partition into components plus, per strand, the data needed for the
// canonical numbering.
ComponentPartition number_components(const BraidWord& word, ClosureKind kind) {
  const int n = word.strands;
  const std::vector<int> perm = braid_permutation(word);
  UnionFind uf(n);
  if (kind == ClosureKind::Trace) {
    // Strand ending at top position p is joined to the strand starting at p.
    for (int s = 0; s < n; ++s) uf.unite(s, perm[s]);
  } else {
    if (n % 2 != 0)
      throw std::invalid_argument("plat closure requires an even strand count");
    std::vector<int> ends_at(n);  // ends_at[p] = strand whose top endpoint is p
    for (int s = 0; s < n; ++s) ends_at[perm[s]] = s;
    for (int k = 0; k + 1 < n; k += 2) {
      uf.unite(k, k + 1);                      // bottom cap
      uf.unite(ends_at[k], ends_at[k + 1]);    // top cap
    }
  }

  // Canonical key per root: smallest strand-start position (Trace) or
  // smallest top-cap position, i.e. smallest top endpoint (Plat).
  std::map<int, int> key_of_root;
  for (int s = 0; s < n; ++s) {
    const int root = uf.find(s);
    const int key = kind == ClosureKind::Trace ? s : perm[s];
    auto it = key_of_root.find(root);
    if (it == key_of_root.end())
      key_of_root.emplace(root, key);
    else
      it->second = std::min(it->second, key);
  }
  std::vector<std::pair<int, int>> keyed;  // (key, root)
  keyed.reserve(key_of_root.size());
  for (const auto& [root, key] : key_of_root) keyed.emplace_back(key, root);
  std::sort(keyed.begin(), keyed.end());
  std::map<int, int> id_of_root;
  for (std::size_t i = 0; i < keyed.size(); ++i)
    id_of_root[keyed[i].second] = static_cast<int>(i);

  ComponentPartition part;
  part.count = static_cast<int>(keyed.size());
  part.strand_component.resize(n);
  for (int s = 0; s < n; ++s) part.strand_component[s] = id_of_root[uf.find(s)];
  return part;
}

}  // namespace

ComponentPartition closure_components(const BraidWord& word, ClosureKind kind) {
  return number_components(word, kind);
}

LinkingMatrix linking_matrix(const BraidWord& word, ClosureKind kind) {
  const ComponentPartition part = number_components(word, kind);
  const int c = part.count;
  std::vector<std::vector<std::int64_t>> signed_crossings(
      c, std::vector<std::int64_t>(c, 0));

  const int n = word.strands;
  std::vector<int> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (int g : word.letters) {
    const int k = std::abs(g) - 1;
    const int ca = part.strand_component[strand_at[k]];
    const int cb = part.strand_component[strand_at[k + 1]];
    if (ca != cb) {
      const int sign = g > 0 ? 1 : -1;
      signed_crossings[ca][cb] += sign;
      signed_crossings[cb][ca] += sign;
    }
    std::swap(strand_at[k], strand_at[k + 1]);
  }

  LinkingMatrix lm;
  lm.components = c;
  lm.entries.assign(c, std::vector<std::int64_t>(c, 0));
  for (int i = 0; i < c; ++i) {
    for (int j = 0; j < c; ++j) {
      if (i == j) continue;
      if (signed_crossings[i][j] % 2 != 0)
        throw std::logic_error("linking_matrix: odd inter-component crossing sum");
      lm.entries[i][j] = signed_crossings[i][j] / 2;
    }
  }
  return lm;
}

}  // namespace mmc
