#include "mmc/seifert.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "mmc/rational.hpp"

namespace mmc {
namespace {

struct Loop {
  int col;            // generator column index, 1-based
  int lo, hi;         // word positions of the two crossings the loop spans
  int sign_lo, sign_hi;
};

// Exact determinant of a rational matrix by Gaussian elimination.
Rational rational_det(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (!m[r][k].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (int r = k + 1; r < n; ++r) {
      if (m[r][k].is_zero()) continue;
      Rational f = m[r][k] / m[k][k];
      for (int c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return det;
}

// det(V - t V^T) evaluated at a rational point t.
Rational alexander_at(const std::vector<std::vector<std::int64_t>>& v, const Rational& t) {
  const int n = static_cast<int>(v.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rational(v[i][j]) - t * Rational(v[j][i]);
  return rational_det(std::move(m));
}

}  // namespace

SeifertData seifert_from_braid(const BraidWord& word) {
  word.validate();
  const int n = word.strands;
  std::vector<std::vector<std::pair<int, int>>> cols(n);  // (position, sign) per column
  for (std::size_t pos = 0; pos < word.letters.size(); ++pos) {
    int g = word.letters[pos];
    cols[std::abs(g)].push_back({static_cast<int>(pos), g > 0 ? 1 : -1});
  }
  for (int i = 1; i < n; ++i)
    if (cols[i].empty())
      throw std::invalid_argument(
          "seifert_from_braid: generator " + std::to_string(i) +
          " never occurs, so the closure surface is split; evaluate each split "
          "factor as its own braid word");

  std::vector<Loop> loops;
  for (int i = 1; i < n; ++i)
    for (std::size_t j = 0; j + 1 < cols[i].size(); ++j)
      loops.push_back({i, cols[i][j].first, cols[i][j + 1].first, cols[i][j].second,
                       cols[i][j + 1].second});

  SeifertData out;
  out.b1 = static_cast<int>(loops.size());
  out.components = closure_components(word, ClosureKind::Trace).count;
  out.v.assign(out.b1, std::vector<std::int64_t>(out.b1, 0));

  for (int a = 0; a < out.b1; ++a)
    out.v[a][a] = -(loops[a].sign_lo + loops[a].sign_hi) / 2;

  for (int a = 0; a < out.b1; ++a)
    for (int b = a + 1; b < out.b1; ++b) {
      const Loop& la = loops[a];
      const Loop& lb = loops[b];
      if (la.col == lb.col) {
        // Consecutive loops in one column share one band; the linking is the
        // half-twist of that band.
        if (la.hi == lb.lo) {
          if (la.sign_hi > 0)
            out.v[a][b] = 1;
          else
            out.v[b][a] = -1;
        }
      } else if (std::abs(la.col - lb.col) == 1) {
        // Loops in adjacent columns cross once on the shared disk exactly when
        // their crossing-height intervals interleave; the band twists play no
        // role there.
        const bool a_lower = la.col < lb.col;
        const Loop& l = a_lower ? la : lb;  // lower column
        const Loop& u = a_lower ? lb : la;  // upper column
        const int li = a_lower ? a : b;
        const int ui = a_lower ? b : a;
        if (l.lo < u.lo && u.lo < l.hi && l.hi < u.hi)
          out.v[li][ui] = 1;
        else if (u.lo < l.lo && l.lo < u.hi && u.hi < l.hi)
          out.v[li][ui] = -1;
      }
    }
  return out;
}

std::vector<std::int64_t> alexander_polynomial(const SeifertData& s) {
  const int n = s.b1;
  if (static_cast<int>(s.v.size()) != n)
    throw std::invalid_argument("alexander_polynomial: matrix size differs from b1");
  // Degree <= n, so n+1 exact point evaluations determine the polynomial.
  std::vector<Rational> points;
  points.push_back(Rational(0));
  for (int k = 1; static_cast<int>(points.size()) < n + 1; ++k) {
    points.push_back(Rational(k));
    if (static_cast<int>(points.size()) < n + 1) points.push_back(Rational(-k));
  }
  std::vector<Rational> values(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) values[i] = alexander_at(s.v, points[i]);

  // Lagrange interpolation, assembled coefficient-wise.
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Numerator polynomial prod_{j != i} (t - x_j) and scalar denominator.
    std::vector<Rational> num(1, Rational(1));
    Rational den(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      den *= points[i] - points[j];
      num.push_back(Rational(0));
      for (std::size_t k = num.size() - 1; k >= 1; --k)
        num[k] = num[k - 1] - points[j] * num[k];
      num[0] = -points[j] * num[0];
    }
    Rational scale = values[i] / den;
    for (std::size_t k = 0; k < num.size(); ++k) coeffs[k] += num[k] * scale;
  }

  std::vector<std::int64_t> out;
  for (const Rational& c : coeffs) {
    if (!c.is_integer())
      throw std::logic_error("alexander_polynomial: non-integer coefficient");
    out.push_back(c.num());
  }
  // Normalize up to +-t^k.
  std::size_t lo = 0;
  while (lo < out.size() && out[lo] == 0) ++lo;
  std::size_t hi = out.size();
  while (hi > lo && out[hi - 1] == 0) --hi;
  out = std::vector<std::int64_t>(out.begin() + lo, out.begin() + hi);
  if (!out.empty() && out.front() < 0)
    for (auto& c : out) c = -c;
  return out;
}

std::int64_t link_determinant(const SeifertData& s) {
  const int n = s.b1;
  if (static_cast<int>(s.v.size()) != n)
    throw std::invalid_argument("link_determinant: matrix size differs from b1");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rational(s.v[i][j] + s.v[j][i]);
  Rational d = rational_det(std::move(m));
  if (!d.is_integer()) throw std::logic_error("link_determinant: non-integer determinant");
  return std::llabs(d.num());
}

}  // namespace mmc
