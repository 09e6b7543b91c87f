#include "mmc/tableau.hpp"

#include <cstdlib>
#include <random>
#include <stdexcept>

namespace mmc {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

bool is_prime(int m) {
  if (m < 2) return false;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

void require_prime(int m) {
  if (!is_prime(m))
    throw std::invalid_argument("tableau operations require prime qudit dimension");
}

int inverse_mod(int a, int p) {
  a = mod(a, p);
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::invalid_argument("no inverse: zero element");
}

// Fold an even phase exponent (zeta-units) into an omega exponent.
int half_phase(const QuditMonomial& a) {
  if (a.phase_exp % 2 != 0)
    throw std::invalid_argument("monomial phase is not a power of omega");
  return mod(a.phase_exp / 2, a.m);
}

void validate_tableau(const StabilizerTableau& t) {
  if (t.n < 1) throw std::invalid_argument("tableau needs at least one qudit");
  for (const auto& row : t.rows) {
    row.op.validate();
    if (row.op.n != t.n || row.op.m != t.m)
      throw std::invalid_argument("tableau row on wrong register");
    if (row.op.phase_exp != 0)
      throw std::invalid_argument("tableau rows must be phase-free monomials");
    if (row.eigen_exp < 0 || row.eigen_exp >= t.m)
      throw std::invalid_argument("eigenvalue exponent out of range");
  }
}

// Solve sum_r k_r * row_r = target over F_p in the exponent vectors
// (z_exp | x_exp). Returns true and fills k on success.
bool solve_exponents(const StabilizerTableau& t, const QuditMonomial& target,
                     std::vector<int>& k) {
  const int p = t.m;
  const int rows_eq = 2 * t.n;
  const int cols = static_cast<int>(t.rows.size());
  // aug[e][c]: coefficient of unknown c in equation e; last column = target.
  std::vector<std::vector<int>> aug(rows_eq, std::vector<int>(cols + 1, 0));
  for (int c = 0; c < cols; ++c)
    for (int s = 0; s < t.n; ++s) {
      aug[s][c] = t.rows[c].op.z_exp[s];
      aug[t.n + s][c] = t.rows[c].op.x_exp[s];
    }
  for (int s = 0; s < t.n; ++s) {
    aug[s][cols] = target.z_exp[s];
    aug[t.n + s][cols] = target.x_exp[s];
  }

  std::vector<int> pivot_col_of_row(rows_eq, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows_eq; ++c) {
    int pivot = -1;
    for (int e = rank; e < rows_eq; ++e)
      if (aug[e][c] != 0) {
        pivot = e;
        break;
      }
    if (pivot < 0) continue;
    std::swap(aug[rank], aug[pivot]);
    const int inv = inverse_mod(aug[rank][c], p);
    for (int j = c; j <= cols; ++j) aug[rank][j] = mod(aug[rank][j] * inv, p);
    for (int e = 0; e < rows_eq; ++e) {
      if (e == rank || aug[e][c] == 0) continue;
      const int f = aug[e][c];
      for (int j = c; j <= cols; ++j)
        aug[e][j] = mod(aug[e][j] - f * aug[rank][j], p);
    }
    pivot_col_of_row[rank] = c;
    ++rank;
  }
  // Inconsistent if a zero row has a nonzero right-hand side.
  for (int e = rank; e < rows_eq; ++e)
    if (aug[e][cols] != 0) return false;
  k.assign(cols, 0);
  for (int e = 0; e < rank; ++e) k[pivot_col_of_row[e]] = aug[e][cols];
  return true;
}

}  // namespace

StabilizerTableau init_pair_tableau(int n, int m) {
  if (n < 2) throw std::invalid_argument("pair tableau needs at least two qudits");
  require_prime(m);
  StabilizerTableau t;
  t.n = n;
  t.m = m;
  for (int i = 1; i <= n - 1; ++i)
    t.rows.push_back({QuditMonomial::u_tilde_op(n, m, i), 0});
  QuditMonomial first = QuditMonomial::identity(n, m);
  first.z_exp[0] = 1;
  first.x_exp[0] = 1;
  t.rows.push_back({first, 0});
  QuditMonomial last = QuditMonomial::identity(n, m);
  last.z_exp[n - 1] = m - 1;
  last.x_exp[n - 1] = 1;
  t.rows.push_back({last, 0});
  return t;
}

StabilizerTableau evolve_tableau(const StabilizerTableau& t, const BraidWord& word) {
  validate_tableau(t);
  word.validate();
  if (word.strands != t.n)
    throw std::invalid_argument("braid strand count must match tableau qudits");
  StabilizerTableau out = t;
  for (auto& row : out.rows) {
    QuditMonomial op = row.op;
    // rho S rho^dagger: peel the word from its last letter, pulling back
    // through each inverse letter.
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
      op = conjugate_by_generator(op, std::abs(*it), *it > 0 ? -1 : 1);
    row.eigen_exp = mod(row.eigen_exp - half_phase(op), t.m);
    row.op = op.plain();
  }
  return out;
}

MeasureResult measure_monomial(const StabilizerTableau& t, const QuditMonomial& T,
                               std::uint64_t rng_seed) {
  validate_tableau(t);
  require_prime(t.m);
  T.validate();
  if (T.n != t.n || T.m != t.m)
    throw std::invalid_argument("observable on wrong register");
  const int p = t.m;
  const int t_phase = half_phase(T);  // rejects odd zeta-phases

  // Lazy validity check: measurement semantics need commuting rows.
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = i + 1; j < t.rows.size(); ++j)
      if (symplectic_form(t.rows[i].op, t.rows[j].op) != 0)
        throw std::invalid_argument("tableau rows do not pairwise commute");

  std::vector<int> s(t.rows.size());
  int pivot = -1;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    s[r] = symplectic_form(T, t.rows[r].op);
    if (s[r] != 0 && pivot < 0) pivot = static_cast<int>(r);
  }

  if (pivot < 0) {
    // Deterministic branch: express T's plain part over the rows.
    std::vector<int> k;
    if (!solve_exponents(t, T, k)) throw std::invalid_argument("incomplete tableau");
    QuditMonomial q = QuditMonomial::identity(t.n, t.m);
    int eigen_sum = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (k[r] == 0) continue;
      q = monomial_multiply(q, monomial_pow(t.rows[r].op, k[r]));
      eigen_sum = mod(eigen_sum + k[r] * t.rows[r].eigen_exp, p);
    }
    if (!q.same_plain_part(T))
      throw std::logic_error("exponent solve produced wrong monomial");
    const int outcome = mod(t_phase + eigen_sum - half_phase(q), p);
    return {outcome, t};
  }

  // Random branch: uniform outcome, deterministic given the seed.
  std::mt19937_64 rng(rng_seed);
  const int outcome = static_cast<int>(rng() % static_cast<std::uint64_t>(p));

  StabilizerTableau updated = t;
  const StabilizerTableau::Row old_pivot = t.rows[pivot];
  const int s_pivot_inv = inverse_mod(s[pivot], p);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (static_cast<int>(r) == pivot || s[r] == 0) continue;
    const int k = mod(-s[r] * s_pivot_inv, p);
    const QuditMonomial prod =
        monomial_multiply(t.rows[r].op, monomial_pow(old_pivot.op, k));
    updated.rows[r].op = prod.plain();
    updated.rows[r].eigen_exp =
        mod(t.rows[r].eigen_exp + k * old_pivot.eigen_exp - half_phase(prod), p);
  }
  updated.rows[pivot].op = T.plain();
  updated.rows[pivot].eigen_exp = mod(outcome - t_phase, p);
  return {outcome, updated};
}

}  // namespace mmc
