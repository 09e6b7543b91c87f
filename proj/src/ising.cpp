#include "mmc/ising.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mmc/errors.hpp"
#include "mmc/invariants.hpp"

namespace mmc {
namespace {

constexpr double kPi = 3.14159265358979323846;

double real_power(double base, std::int64_t e) {
  double r = 1.0;
  double b = e < 0 ? 1.0 / base : base;
  std::uint64_t k = e < 0 ? -static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::complex<double> complex_power(std::complex<double> base, std::int64_t e) {
  std::complex<double> r = 1.0;
  std::complex<double> b = e < 0 ? 1.0 / base : base;
  std::uint64_t k = e < 0 ? -static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

Rational rational_power(const Rational& base, std::int64_t e) {
  Rational r(1);
  Rational b = e < 0 ? Rational(1) / base : base;
  std::uint64_t k = e < 0 ? -static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// Histogram of the coupling exponent sum_{i<j} J_ij [s_i == s_j] over all
// 2^n spin vectors, by a Gray-code walk. hist[e - offset] counts vectors
// with exponent e.
void exponent_histogram(const CouplingMatrix& j, std::vector<std::int64_t>& hist,
                        std::int64_t& offset) {
  const int n = j.n;
  std::int64_t max_e = 0, min_e = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (j.j[a][b] > 0) max_e += j.j[a][b];
      if (j.j[a][b] < 0) min_e += j.j[a][b];
    }
  offset = min_e;
  hist.assign(static_cast<std::size_t>(max_e - min_e + 1), 0);

  std::vector<int> spin(n, 1);
  // e tracks the exponent shifted by -offset; all spins equal means every
  // pair contributes, giving (max_e + min_e) - min_e.
  std::int64_t e = max_e;
  ++hist[e];
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t g = 1; g < total; ++g) {
    const int k = __builtin_ctzll(g);
    // Flipping spin k toggles [s_k == s_j] for every other site j.
    std::int64_t delta = 0;
    for (int b = 0; b < n; ++b) {
      if (b == k) continue;
      delta += (spin[b] == spin[k]) ? -j.j[k][b] : j.j[k][b];
    }
    spin[k] = -spin[k];
    e += delta;
    ++hist[e];
  }
}

void require_small(const CouplingMatrix& j, int cap, const char* what) {
  if (j.n > cap)
    throw refused_error(std::string(what) + ": enumerating 2^" + std::to_string(j.n) +
                        " spin vectors exceeds the supported 2^" + std::to_string(cap));
}

}  // namespace

void CouplingMatrix::validate() const {
  if (n < 1) throw std::invalid_argument("CouplingMatrix: need at least one site");
  if (static_cast<int>(j.size()) != n)
    throw std::invalid_argument("CouplingMatrix: row count differs from n");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(j[a].size()) != n)
      throw std::invalid_argument("CouplingMatrix: matrix is not square");
    if (j[a][a] != 0)
      throw std::invalid_argument("CouplingMatrix: diagonal entries must be zero");
    for (int b = 0; b < n; ++b)
      if (j[a][b] != j[b][a])
        throw std::invalid_argument("CouplingMatrix: matrix must be symmetric");
  }
}

std::int64_t CouplingMatrix::positive_sum() const {
  std::int64_t s = 0;
  for (const auto& row : j)
    for (std::int64_t v : row)
      if (v > 0) s += v;
  return s;
}

std::int64_t CouplingMatrix::abs_sum() const {
  std::int64_t s = 0;
  for (const auto& row : j)
    for (std::int64_t v : row) s += std::llabs(v);
  return s;
}

void IsingParams::validate() const {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("IsingParams: m must be an odd integer >= 3");
  if (d < 1) throw std::invalid_argument("IsingParams: d must be a positive integer");
}

double IsingParams::y() const {
  validate();
  return std::cos(4.0 * kPi * d / m);
}

std::optional<Rational> IsingParams::exact_y() const {
  validate();
  const int r = (2 * d) % m;  // y = cos(2 pi r / m)
  if (r == 0) return Rational(1);
  if (3 * r == m || 3 * r == 2 * m) return Rational(-1, 2);
  return std::nullopt;
}

std::optional<int> find_twist_for_regime(int m, bool positive_y) {
  IsingParams p;
  p.m = m;
  for (int d = 1; d < m; ++d) {
    p.d = d;
    if ((2 * d) % m == 0) continue;  // |y| = 1
    const double y = p.y();
    if (positive_y ? (y > 0.0) : (y < 0.0)) return d;
  }
  return std::nullopt;
}

double z_partition(const CouplingMatrix& j, double y) {
  j.validate();
  require_small(j, 30, "z_partition");
  std::vector<std::int64_t> hist;
  std::int64_t offset = 0;
  exponent_histogram(j, hist, offset);
  double z = 0.0;
  for (std::size_t k = 0; k < hist.size(); ++k)
    if (hist[k] != 0)
      z += static_cast<double>(hist[k]) * real_power(y, offset + static_cast<std::int64_t>(k));
  return z;
}

Rational z_partition_exact(const CouplingMatrix& j, const Rational& y) {
  j.validate();
  require_small(j, 30, "z_partition_exact");
  std::vector<std::int64_t> hist;
  std::int64_t offset = 0;
  exponent_histogram(j, hist, offset);
  Rational z(0);
  for (std::size_t k = 0; k < hist.size(); ++k)
    if (hist[k] != 0)
      z += Rational(hist[k]) * rational_power(y, offset + static_cast<std::int64_t>(k));
  return z;
}

CompiledLink compile_link(const CouplingMatrix& j, const IsingParams& params) {
  j.validate();
  params.validate();
  const int n = j.n;

  CompiledLink out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int t = 1; t <= std::llabs(j.j[a][b]); ++t)
        out.fmap.push_back({a + 1, b + 1, t});
  const int c = n + static_cast<int>(out.fmap.size());

  out.lk.components = c;
  out.lk.entries.assign(c, std::vector<std::int64_t>(c, 0));
  for (std::size_t k = 0; k < out.fmap.size(); ++k) {
    const int site_i = out.fmap[k][0], site_j = out.fmap[k][1];
    const int aux = n + 1 + static_cast<int>(k);
    const std::int64_t coupling = j.j[site_i - 1][site_j - 1];
    out.lk.entries[site_i - 1][aux - 1] = params.d;
    out.lk.entries[aux - 1][site_i - 1] = params.d;
    const std::int64_t signed_d = coupling > 0 ? params.d : -params.d;
    out.lk.entries[site_j - 1][aux - 1] = signed_d;
    out.lk.entries[aux - 1][site_j - 1] = signed_d;
  }

  // One conjugated twist block per linked pair (u, v), u < v: walk strand 2u
  // rightward until it sits next to strand 2v, twist the pair 2|l| times (a
  // crossing contributes half a unit of linking), then walk back.
  out.braid.strands = 2 * c;
  for (int u = 1; u <= c; ++u)
    for (int v = u + 1; v <= c; ++v) {
      const std::int64_t l = out.lk.entries[u - 1][v - 1];
      if (l == 0) continue;
      for (int g = 2 * u; g <= 2 * v - 2; ++g) out.braid.letters.push_back(g);
      const int twist = l > 0 ? 2 * v - 1 : -(2 * v - 1);
      for (std::int64_t t = 0; t < 2 * std::llabs(l); ++t) out.braid.letters.push_back(twist);
      for (int g = 2 * v - 2; g >= 2 * u; --g) out.braid.letters.push_back(-g);
    }
  out.braid.validate();
  return out;
}

double verify_claim(const CouplingMatrix& j, const IsingParams& params) {
  CompiledLink link = compile_link(j, params);
  if (link.lk.components > 24)
    throw refused_error("verify_claim: compiled link has " +
                        std::to_string(link.lk.components) +
                        " components; the state-sum side is capped at 24");
  const std::complex<double> lhs = lm_state_sum(link.lk, params.m).e.eval();

  const std::complex<double> a =
      std::polar(1.0, -kPi / 2.0 - kPi / params.m);  // a = -i exp(-i pi / m)
  const double y = params.y();                       // (a^{-4d} + a^{4d}) / 2

  std::int64_t sum_upper = 0;  // sum_{i<j} J_ij
  for (int p = 0; p < j.n; ++p)
    for (int q = p + 1; q < j.n; ++q) sum_upper += j.j[p][q];
  const std::int64_t half_abs = j.abs_sum() / 2;  // A(J)/2 = sum_{i<j} |J_ij|

  // Branch choice: sqrt(y) sqrt(z) = a^{-4d} + a^{4d} = 2y holds for the
  // principal sqrt(y) paired with sqrt(z) = 2 sqrt(y); the joint sign flip
  // drops out because -sum_upper + half_abs is even.
  const std::complex<double> sqrt_y = std::sqrt(std::complex<double>(y, 0.0));
  const std::complex<double> sqrt_z = 2.0 * sqrt_y;
  const std::complex<double> rhs = z_partition(j, y) *
                                   complex_power(a, -2 * params.d * j.positive_sum()) *
                                   complex_power(sqrt_y, -sum_upper) *
                                   complex_power(sqrt_z, half_abs);
  return std::abs(lhs - rhs);
}

MaxcutResult maxcut_recover(const CouplingMatrix& adjacency, const IsingParams& params) {
  adjacency.validate();
  params.validate();
  for (const auto& row : adjacency.j)
    for (std::int64_t v : row)
      if (v != 0 && v != 1)
        throw std::invalid_argument("maxcut_recover: adjacency entries must be 0 or 1");
  const double y = params.y();
  if (std::abs(y) >= 1.0)
    throw std::invalid_argument("maxcut_recover: requires |y| < 1 (2d must not be a multiple of m)");
  if (adjacency.n > 16)
    throw refused_error("maxcut_recover: supports at most 16 vertices");

  const int n = adjacency.n;
  std::int64_t edges = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges += adjacency.j[a][b];

  MaxcutResult out;

  // Exhaustive ordered-cut statistics.
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    int size = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (adjacency.j[a][b] != 0 && (((mask >> a) ^ (mask >> b)) & 1)) ++size;
    if (size > out.stats.max_cut) {
      out.stats.max_cut = size;
      out.stats.count = 1;
    } else if (size == out.stats.max_cut) {
      ++out.stats.count;
    }
  }

  // Smallest even K >= (n+1) ln 2 / |ln |y||  (guard against FP wobble when
  // the quotient is itself an even integer).
  const double k0 = (n + 1) * std::log(2.0) / std::abs(std::log(std::abs(y)));
  out.k = 2 * static_cast<int>(std::ceil((k0 - 1e-9) / 2.0));

  CouplingMatrix strong;
  strong.n = n;
  strong.j.assign(n, std::vector<std::int64_t>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) strong.j[a][b] = out.k * adjacency.j[a][b];
  out.z = z_partition(strong, y);

  const double band = std::ldexp(1.0, -n - 3);  // allowed multiplicative error
  const double weight = std::abs(y);
  bool first = true;
  for (double approx : {out.z / (1.0 + band), out.z / (1.0 - band)}) {
    // Recover the max cut: candidates M' above the true value leave a
    // normalized count below 1/2+o(1), the true value gives at least 2(1-o(1)).
    int found = -1;
    double normalized = 0.0;
    for (std::int64_t cand = edges; cand >= 0; --cand) {
      normalized = approx / real_power(weight, out.k * (edges - cand));
      if (normalized >= 1.0) {
        found = static_cast<int>(cand);
        break;
      }
    }
    if (found < 0)
      throw std::logic_error("maxcut_recover: no cut size matches the partition value");
    // Recover the count: the true count is the unique integer in
    // [(1-band) normalized - 1/2, (1+band) normalized].
    const double lo = (1.0 - band) * normalized - 0.5;
    const double hi = (1.0 + band) * normalized;
    const std::int64_t lo_int = static_cast<std::int64_t>(std::ceil(lo));
    const std::int64_t hi_int = static_cast<std::int64_t>(std::floor(hi));
    if (lo_int != hi_int)
      throw std::logic_error("maxcut_recover: count window does not isolate an integer");
    CutStats rec;
    rec.max_cut = found;
    rec.count = lo_int;
    if (first) {
      out.recovered = rec;
      first = false;
    } else if (!(rec == out.recovered)) {
      throw std::logic_error("maxcut_recover: band edges disagree");
    }
  }
  if (!(out.recovered == out.stats))
    throw std::logic_error("maxcut_recover: recovery disagrees with enumeration");
  return out;
}

SignRegimeResult sign_regime(const CouplingMatrix& j, const IsingParams& params) {
  j.validate();
  params.validate();
  for (const auto& row : j.j)
    for (std::int64_t v : row)
      if (v != 0 && v != 1)
        throw std::invalid_argument("sign_regime: couplings must be 0 or 1");
  const double y = params.y();
  if (y >= 0.0)
    throw std::invalid_argument("sign_regime: requires the negative regime y < 0");
  if (j.n > 24) throw refused_error("sign_regime: supports at most 24 sites");

  SignRegimeResult out;
  out.z = z_partition(j, y);
  if (auto exact = params.exact_y()) {
    const Rational zr = z_partition_exact(j, *exact);
    out.sign = zr.is_zero() ? 0 : (zr.num() > 0 ? 1 : -1);
  } else {
    out.sign = out.z > 0.0 ? 1 : (out.z < 0.0 ? -1 : 0);
  }
  return out;
}

}  // namespace mmc
