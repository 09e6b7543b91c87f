#include "mmc/invariants.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmc/errors.hpp"

namespace mmc {
namespace {

void require_odd_level(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("level m must be an odd integer >= 3");
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; static_cast<std::int64_t>(d) * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int mod_pow(std::int64_t base, std::int64_t exp, int p) {
  std::int64_t r = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

int legendre_symbol(int a, int p) {
  int e = mod_pow(a, (p - 1) / 2, p);
  return e == p - 1 ? -1 : e;
}

// Symmetric diagonalization of a symmetric matrix over F_p: returns the list
// of nonzero diagonal entries of a congruent diagonal matrix. Entries not in
// the list correspond to degenerate directions (the corank).
std::vector<int> symmetric_diagonalize(std::vector<std::vector<int>> w, int p) {
  const int n = static_cast<int>(w.size());
  std::vector<int> diag;
  auto add_row_col = [&](int dst, int src) {
    for (int j = 0; j < n; ++j) w[dst][j] = (w[dst][j] + w[src][j]) % p;
    for (int i = 0; i < n; ++i) w[i][dst] = (w[i][dst] + w[i][src]) % p;
  };
  auto swap_row_col = [&](int a, int b) {
    std::swap(w[a], w[b]);
    for (int i = 0; i < n; ++i) std::swap(w[i][a], w[i][b]);
  };
  for (int i = 0; i < n; ++i) {
    if (w[i][i] == 0) {
      int other = -1;
      for (int j = i + 1; j < n; ++j)
        if (w[j][j] != 0) {
          other = j;
          break;
        }
      if (other >= 0) {
        swap_row_col(i, other);
      } else {
        int off = -1;
        for (int j = i + 1; j < n; ++j)
          if (w[i][j] != 0) {
            off = j;
            break;
          }
        if (off < 0) continue;  // fully degenerate direction
        add_row_col(i, off);    // new w[i][i] = 2 w[i][off] != 0 since p is odd
      }
    }
    diag.push_back(w[i][i]);
    const int inv = mod_pow(w[i][i], p - 2, p);
    for (int j = i + 1; j < n; ++j) {
      if (w[j][i] == 0) continue;
      const int f = static_cast<int>(static_cast<std::int64_t>(w[j][i]) * inv % p);
      for (int c = 0; c < n; ++c)
        w[j][c] = static_cast<int>(((w[j][c] - static_cast<std::int64_t>(f) * w[i][c]) % p + p) % p);
      for (int r = 0; r < n; ++r)
        w[r][j] = static_cast<int>(((w[r][j] - static_cast<std::int64_t>(f) * w[r][i]) % p + p) % p);
    }
  }
  return diag;
}

// One-variable quadratic Gauss sum g_p = sum_x zeta_p^{x^2} in Q(zeta_{4p}).
Cyclotomic gauss_sum(int p, int order) {
  Cyclotomic g = Cyclotomic::zero(order);
  for (int x = 0; x < p; ++x) {
    const int r = static_cast<int>(static_cast<std::int64_t>(x) * x % p);
    g += Cyclotomic::root(order, 4LL * r);
  }
  return g;
}

}  // namespace

StateSumResult lm_state_sum(const LinkingMatrix& lk, int m) {
  require_odd_level(m);
  const int c = lk.components;
  if (c < 1) throw std::invalid_argument("lm_state_sum: need at least one component");
  if (static_cast<int>(lk.entries.size()) != c)
    throw std::invalid_argument("lm_state_sum: matrix size differs from component count");
  for (int i = 0; i < c; ++i) {
    if (static_cast<int>(lk.entries[i].size()) != c)
      throw std::invalid_argument("lm_state_sum: matrix is not square");
    if (lk.entries[i][i] != 0)
      throw std::invalid_argument("lm_state_sum: linking matrix must have zero diagonal");
    for (int j = 0; j < c; ++j)
      if (lk.entries[i][j] != lk.entries[j][i])
        throw std::invalid_argument("lm_state_sum: linking matrix must be symmetric");
  }
  if (c > 30)
    throw refused_error(
        "lm_state_sum: enumerating 2^" + std::to_string(c) +
        " sublinks exceeds the supported 2^30; split the link into split-union "
        "factors and multiply their sums");

  std::vector<std::int64_t> row_sum(c, 0);
  for (int k = 0; k < c; ++k)
    for (int j = 0; j < c; ++j) row_sum[k] += lk.entries[k][j];

  // Gray-code walk over sublinks S, maintaining val = <S, L-S> and the
  // partial sums r[k] = sum_{j in S} lk(k, j).
  std::vector<std::int64_t> counts(m, 0);
  std::vector<std::int64_t> r(c, 0);
  std::vector<bool> in(c, false);
  std::int64_t val = 0;
  auto record = [&] {
    std::int64_t res = val % m;
    if (res < 0) res += m;
    ++counts[res];
  };
  record();
  const std::uint64_t total = 1ull << c;
  for (std::uint64_t g = 1; g < total; ++g) {
    const int k = __builtin_ctzll(g);
    if (!in[k]) {
      val += row_sum[k] - 2 * r[k];
      in[k] = true;
      for (int j = 0; j < c; ++j) r[j] += lk.entries[j][k];
    } else {
      for (int j = 0; j < c; ++j) r[j] -= lk.entries[j][k];
      in[k] = false;
      val -= row_sum[k] - 2 * r[k];
    }
    record();
  }

  const int order = 4 * m;
  Cyclotomic e = Cyclotomic::zero(order);
  for (int res = 0; res < m; ++res)
    if (counts[res] != 0)
      e += Cyclotomic::root(order, 8LL * res % order).scaled(Rational(counts[res]));
  StateSumResult out;
  out.e = e;
  out.i_y1 = e.scaled(Rational(1, 4));
  return out;
}

GaussSumValue i_xe_eval(const SeifertData& s, int p, GaussSumMode mode) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("i_xe_eval: p must be an odd prime");
  const int n = s.b1;
  if (static_cast<int>(s.v.size()) != n)
    throw std::invalid_argument("i_xe_eval: matrix size differs from b1");
  const int order = 4 * p;

  // Symmetrized form (V + V^T)/2 over F_p; it carries the whole quadratic form.
  const int inv2 = (p + 1) / 2;
  std::vector<std::vector<int>> w(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t e = (s.v[i][j] + s.v[j][i]) % p;
      if (e < 0) e += p;
      w[i][j] = static_cast<int>(e * inv2 % p);
    }
  const std::vector<int> diag = symmetric_diagonalize(w, p);
  const int corank = n - static_cast<int>(diag.size());

  // p^{-1/2} = sqrt(p)/p, exactly representable in Q(zeta_{4p}).
  const Cyclotomic inv_sqrt_p = Cyclotomic::sqrt_prime(p, order).scaled(Rational(1, p));
  const Cyclotomic prefactor = inv_sqrt_p.pow(n);

  GaussSumValue out;
  out.corank = corank;
  if (mode == GaussSumMode::Fast) {
    std::int64_t scale = 1;
    for (int k = 0; k < corank; ++k) {
      if (scale > INT64_MAX / p) throw std::overflow_error("i_xe_eval: p^corank overflows");
      scale *= p;  // each degenerate direction sums to p
    }
    int leg = 1;
    for (int d : diag) leg *= legendre_symbol(d, p);
    out.value = prefactor * gauss_sum(p, order).pow(diag.size()).scaled(Rational(leg * scale));
    return out;
  }

  double size = 1;
  for (int k = 0; k < n; ++k) size *= p;
  if (size > 1e7)
    throw refused_error("i_xe_eval: brute mode enumerates p^b1 vectors, capped at 10^7; "
                        "use fast mode");
  std::vector<std::int64_t> counts(p, 0);
  std::vector<int> digits(n, 0);
  // Depth-first enumeration keeping the partial value of v^T V v mod p.
  std::function<void(int, int)> walk = [&](int k, int q) {
    if (k == n) {
      ++counts[q];
      return;
    }
    std::int64_t cross = 0;  // sum_{j<k} (V[k][j] + V[j][k]) v_j
    for (int j = 0; j < k; ++j) cross += (s.v[k][j] + s.v[j][k]) * digits[j];
    cross %= p;
    std::int64_t dkk = s.v[k][k] % p;
    for (int x = 0; x < p; ++x) {
      digits[k] = x;
      std::int64_t add = (dkk * x + cross) % p * x % p;
      int q2 = static_cast<int>(((q + add) % p + p) % p);
      walk(k + 1, q2);
    }
    digits[k] = 0;
  };
  walk(0, 0);
  Cyclotomic sum = Cyclotomic::zero(order);
  for (int res = 0; res < p; ++res)
    if (counts[res] != 0)
      sum += Cyclotomic::root(order, 4LL * res).scaled(Rational(counts[res]));
  out.value = prefactor * sum;
  return out;
}

Tristate kauffman_classical_point(const std::optional<Rational>& a_turns,
                                  const std::optional<Rational>& z_turns) {
  if (!a_turns.has_value() || !z_turns.has_value()) return Tristate::Unknown;
  const Rational alpha = a_turns->mod1();
  const Rational beta = z_turns->mod1();
  const Rational quarter(1, 4);
  const Rational three_quarters(3, 4);
  const Rational half(1, 2);
  // z = 2 cos(2 pi beta) vanishes at beta = 1/4, 3/4; the classification
  // assumes z != 0.
  if (beta == quarter || beta == three_quarters) return Tristate::Unknown;

  if (alpha == quarter || alpha == three_quarters) return Tristate::Yes;  // family (1)

  auto matches = [](const Rational& x, const Rational& y) { return (x - y).mod1().is_zero(); };
  // z determines q = e^{2 pi i q_turns} only up to inversion.
  for (const Rational& q : {beta, (Rational(1) - beta).mod1()}) {
    const bool q8 = (q * Rational(8)).is_integer();
    const bool q12 = (q * Rational(12)).is_integer();
    const bool q16 = (q * Rational(16)).is_integer();
    const bool q24 = (q * Rational(24)).is_integer();
    if (q16 || q24) {  // family (2): a = -q^{+-3}
      if (matches(alpha, half + q * Rational(3))) return Tristate::Yes;
      if (matches(alpha, half - q * Rational(3))) return Tristate::Yes;
    }
    if (q8 || q12) {  // family (3): a = q^{+-3}
      if (matches(alpha, q * Rational(3))) return Tristate::Yes;
      if (matches(alpha, -(q * Rational(3)))) return Tristate::Yes;
    }
    if (q16) {  // family (4): a = -q^{+-1}
      if (matches(alpha, half + q)) return Tristate::Yes;
      if (matches(alpha, half - q)) return Tristate::Yes;
    }
  }
  // family (5): +-(1, q + 1/q) with q^5 = 1.
  if (alpha.is_zero() && (beta * Rational(5)).is_integer()) return Tristate::Yes;
  if (alpha == half && ((beta + half) * Rational(5)).is_integer()) return Tristate::Yes;
  return Tristate::No;
}

}  // namespace mmc
