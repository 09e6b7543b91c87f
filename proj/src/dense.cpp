#include "mmc/dense.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <deque>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "mmc/errors.hpp"

namespace mmc {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr int kMaxDenseDim = 4096;

void require_odd_m(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("R-matrix kind requires odd m >= 3");
}

Complex root_of_unity(int num, int den) {
  return std::polar(1.0, 2.0 * kPi * num / den);
}

}  // namespace

RMatrixKind RMatrixKind::gaussian_xe(int m) {
  require_odd_m(m);
  return {Family::GaussianXe, m};
}
RMatrixKind RMatrixKind::potts(int m) {
  require_odd_m(m);
  return {Family::Potts, m};
}
RMatrixKind RMatrixKind::y1(int m) {
  require_odd_m(m);
  return {Family::Y1, m};
}
RMatrixKind RMatrixKind::ising_bell() { return {Family::IsingBell, 0}; }

int RMatrixKind::local_dim() const {
  switch (family) {
    case Family::GaussianXe:
    case Family::Potts:
      return m;
    case Family::Y1:
    case Family::IsingBell:
      return 2;
  }
  return 2;
}

int RMatrixKind::locality() const { return family == Family::Y1 ? 3 : 2; }

int RMatrixKind::sites_for_strands(int strands) const {
  return family == Family::Y1 ? strands + 1 : strands;
}

bool RMatrixKind::unitary() const { return !(family == Family::Potts && m >= 5); }

DenseOperator clock_shift_u(int m) {
  require_odd_m(m);
  DenseOperator u = DenseOperator::Zero(m * m, m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      u(((i + 1) % m) * m + (j + 1) % m, i * m + j) = root_of_unity(i - j, m);
  return u;
}

namespace {

DenseOperator gaussian_gate(int m) {
  const DenseOperator u = clock_shift_u(m);
  DenseOperator power = DenseOperator::Identity(m * m, m * m);
  DenseOperator sum = DenseOperator::Zero(m * m, m * m);
  for (int j = 0; j < m; ++j) {
    sum += root_of_unity(j * j, m) * power;
    power = u * power;
  }
  return sum / std::sqrt(double(m));
}

Complex potts_t(int m) {
  // t + 1/t + 2 = m, principal branch of the square root.
  if (m == 3) return Complex(0.5, -0.5 * std::sqrt(3.0));
  const double b = m - 2;
  return Complex((b - std::sqrt(b * b - 4.0)) / 2.0, 0.0);
}

DenseOperator potts_gate_for_t(int m, Complex t) {
  const DenseOperator u = clock_shift_u(m);
  DenseOperator power = DenseOperator::Identity(m * m, m * m);
  DenseOperator p = DenseOperator::Zero(m * m, m * m);
  for (int j = 0; j < m; ++j) {
    p += power;
    power = u * power;
  }
  p /= double(m);
  return (t + 1.0) * p - DenseOperator::Identity(m * m, m * m);
}

// The 8x8 three-qubit gate: diagonal sum of two 4x4 blocks over the first
// qubit; entries are exactly +-cos(pi/m), +-i sin(pi/m) and 0. The blocks
// realize (cos(pi/m) I + i sin(pi/m) H2) * N2 where H2 = Z1 X2 Z3 (m >= 5)
// or X2 (m = 3) and N2 flips qubit 2 when qubits 1 and 3 differ.
DenseOperator y1_gate(int m) {
  const double c = std::cos(kPi / m);
  const Complex is(0.0, std::sin(kPi / m));
  DenseOperator r = DenseOperator::Zero(8, 8);
  auto set_block = [&r](int offset, const std::array<std::array<Complex, 4>, 4>& b) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r(offset + i, offset + j) = b[i][j];
  };
  const Complex z(0.0, 0.0);
  if (m == 3) {
    set_block(0, {{{Complex(c), z, is, z},
                   {z, is, z, Complex(c)},
                   {is, z, Complex(c), z},
                   {z, Complex(c), z, is}}});
    set_block(4, {{{is, z, Complex(c), z},
                   {z, Complex(c), z, is},
                   {Complex(c), z, is, z},
                   {z, is, z, Complex(c)}}});
  } else {
    set_block(0, {{{Complex(c), z, is, z},
                   {z, -is, z, Complex(c)},
                   {is, z, Complex(c), z},
                   {z, Complex(c), z, -is}}});
    set_block(4, {{{-is, z, Complex(c), z},
                   {z, Complex(c), z, is},
                   {Complex(c), z, -is, z},
                   {z, is, z, Complex(c)}}});
  }
  return r;
}

DenseOperator ising_bell_gate() {
  DenseOperator r(4, 4);
  const double s = 1.0 / std::sqrt(2.0);
  r << s, 0, 0, s,
       0, s, -s, 0,
       0, s, s, 0,
       -s, 0, 0, s;
  return r;
}

// full(a (x) x (x) b, a' (x) x' (x) b') = local(x, x') delta_{aa'} delta_{bb'}
DenseOperator embed_local(const DenseOperator& local, int before_dim, int after_dim) {
  const int ld = static_cast<int>(local.rows());
  const int dim = before_dim * ld * after_dim;
  DenseOperator full = DenseOperator::Zero(dim, dim);
  for (int a = 0; a < before_dim; ++a)
    for (int x = 0; x < ld; ++x)
      for (int y = 0; y < ld; ++y) {
        if (local(x, y) == Complex(0.0, 0.0)) continue;
        for (int b = 0; b < after_dim; ++b)
          full((a * ld + x) * after_dim + b, (a * ld + y) * after_dim + b) =
              local(x, y);
      }
  return full;
}

std::int64_t register_dim(const RMatrixKind& kind, int strands) {
  std::int64_t dim = 1;
  const int sites = kind.sites_for_strands(strands);
  for (int i = 0; i < sites; ++i) {
    dim *= kind.local_dim();
    if (dim > kMaxDenseDim) return dim;
  }
  return dim;
}

// Per-generator embedded operators for B_n; index g-1 holds sigma_g.
std::vector<DenseOperator> generator_matrices(const RMatrixKind& kind, int strands,
                                              bool inverses) {
  if (strands < 2) throw std::invalid_argument("need at least 2 strands");
  if (register_dim(kind, strands) > kMaxDenseDim)
    throw refused_error("dense register dimension exceeds 4096");
  const DenseOperator gate =
      inverses ? build_r_matrix_inverse(kind) : build_r_matrix(kind);
  const int d = kind.local_dim();
  const int sites = kind.sites_for_strands(strands);
  const int window = kind.locality();
  std::vector<DenseOperator> out;
  out.reserve(strands - 1);
  for (int g = 1; g <= strands - 1; ++g) {
    int before = 1, after = 1;
    for (int i = 0; i < g - 1; ++i) before *= d;
    for (int i = 0; i < sites - (g - 1) - window; ++i) after *= d;
    out.push_back(embed_local(gate, before, after));
  }
  return out;
}

}  // namespace

DenseOperator build_r_matrix(const RMatrixKind& kind) {
  switch (kind.family) {
    case RMatrixKind::Family::GaussianXe:
      return gaussian_gate(kind.m);
    case RMatrixKind::Family::Potts:
      return potts_gate_for_t(kind.m, potts_t(kind.m));
    case RMatrixKind::Family::Y1:
      return y1_gate(kind.m);
    case RMatrixKind::Family::IsingBell:
      return ising_bell_gate();
  }
  throw std::logic_error("unreachable");
}

DenseOperator build_r_matrix_inverse(const RMatrixKind& kind) {
  if (kind.family == RMatrixKind::Family::Potts)
    return potts_gate_for_t(kind.m, 1.0 / potts_t(kind.m));
  return build_r_matrix(kind).adjoint();
}

DenseOperator represent_braid(const BraidWord& word, const RMatrixKind& kind) {
  word.validate();
  const auto gens = generator_matrices(kind, word.strands, false);
  const auto invs = generator_matrices(kind, word.strands, true);
  const int dim = static_cast<int>(gens.empty() ? register_dim(kind, word.strands)
                                                : gens[0].rows());
  DenseOperator result = DenseOperator::Identity(dim, dim);
  for (int g : word.letters) result *= g > 0 ? gens[g - 1] : invs[-g - 1];
  return result;
}

double operator_norm(const DenseOperator& a) {
  if (a.rows() == 0) return 0.0;
  Eigen::BDCSVD<DenseOperator> svd(a);
  return svd.singularValues()(0);
}

double phase_aligned_distance(const DenseOperator& a, const DenseOperator& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  if (std::abs(overlap) < 1e-12) return operator_norm(a - b);
  return operator_norm(a - (overlap / std::abs(overlap)) * b);
}

BraidRelationReport check_braid_relations(const RMatrixKind& kind, int n) {
  if (n < 3) throw std::invalid_argument("braid relations need n >= 3");
  const auto gens = generator_matrices(kind, n, false);
  BraidRelationReport report;
  for (int i = 0; i + 1 < static_cast<int>(gens.size()); ++i) {
    const DenseOperator lhs = gens[i] * gens[i + 1] * gens[i];
    const DenseOperator rhs = gens[i + 1] * gens[i] * gens[i + 1];
    report.yang_baxter_residual =
        std::max(report.yang_baxter_residual, operator_norm(lhs - rhs));
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 2; j < gens.size(); ++j)
      report.far_commutation_residual =
          std::max(report.far_commutation_residual,
                   operator_norm(gens[i] * gens[j] - gens[j] * gens[i]));
  return report;
}

namespace {

// Global-phase canonical form: rotate so the first entry of magnitude > 1e-7
// (row-major) is positive real.
void canonicalize_phase(DenseOperator& a) {
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      const Complex e = a(r, c);
      if (std::abs(e) > 1e-7) {
        a *= std::conj(e) / std::abs(e);
        return;
      }
    }
}

std::uint64_t rounded_digest(const DenseOperator& a) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](std::int64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= static_cast<std::uint64_t>(v >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      // +0.0 normalizes -0.0 so both round to the same key.
      mix(std::llround(a(r, c).real() * 1e6 + 0.0));
      mix(std::llround(a(r, c).imag() * 1e6 + 0.0));
    }
  return h;
}

bool close_entrywise(const DenseOperator& a, const DenseOperator& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() < tol;
}

}  // namespace

ImageGroupResult enumerate_image_group(const RMatrixKind& kind, int n,
                                       std::int64_t max_order) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  const auto gens = generator_matrices(kind, n, false);
  const auto invs = generator_matrices(kind, n, true);
  std::vector<DenseOperator> step;
  step.insert(step.end(), gens.begin(), gens.end());
  step.insert(step.end(), invs.begin(), invs.end());

  std::vector<DenseOperator> elements;
  std::unordered_multimap<std::uint64_t, std::size_t> index;
  auto try_insert = [&](DenseOperator m) -> bool {
    canonicalize_phase(m);
    const std::uint64_t key = rounded_digest(m);
    auto [lo, hi] = index.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (close_entrywise(elements[it->second], m, 1e-9)) return false;
    index.emplace(key, elements.size());
    elements.push_back(std::move(m));
    return true;
  };

  const int dim = static_cast<int>(gens.empty() ? 1 : gens[0].rows());
  try_insert(DenseOperator::Identity(dim, dim));
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t at = frontier.front();
    frontier.pop_front();
    for (const DenseOperator& s : step) {
      DenseOperator next = elements[at] * s;
      if (try_insert(std::move(next))) {
        if (static_cast<std::int64_t>(elements.size()) > max_order)
          return {static_cast<std::int64_t>(elements.size()), false};
        frontier.push_back(elements.size() - 1);
      }
    }
  }
  return {static_cast<std::int64_t>(elements.size()), true};
}

}  // namespace mmc
