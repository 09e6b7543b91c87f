#include "mmc/group_rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mmc/errors.hpp"

namespace mmc {

namespace {

constexpr int kMaxDenseQubits = 12;

void require_register(int q) {
  if (q < 2) throw std::invalid_argument("register needs at least two qubits");
}

void require_m(int m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("modulus must be odd and >= 3");
}

void require_same_register(const PauliWord& a, const PauliWord& b) {
  if (a.q != b.q) throw std::invalid_argument("mismatched register sizes");
}

int bit_dot(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s ^= (a[i] & b[i]);
  return s;
}

std::size_t dense_dim(int q) {
  if (q > kMaxDenseQubits)
    throw refused_error("dense realization exceeds the size cap");
  return std::size_t(1) << q;
}

// Plain-part key for interval recognition.
std::string plain_key(const PauliWord& w) {
  std::string key;
  key.reserve(2 * w.q);
  for (auto b : w.x) key.push_back(char('0' + b));
  for (auto b : w.z) key.push_back(char('0' + b));
  return key;
}

struct IntervalTable {
  // plain word -> (k, l, canonical sign of the interval word)
  std::unordered_map<std::string, IntervalImage> by_plain;

  IntervalTable(int m, int q) {
    for (int k = 1; k <= q; ++k)
      for (int l = k; l <= q; ++l) {
        const PauliWord w = interval_word(k, l, m, q);
        by_plain[plain_key(w)] = IntervalImage{k, l, w.sign};
      }
  }

  IntervalImage recognize(const PauliWord& w) const {
    const auto it = by_plain.find(plain_key(w));
    if (it == by_plain.end())
      throw std::logic_error("conjugated interval word is not an interval word");
    IntervalImage img = it->second;
    img.sign *= w.sign;  // w = w.sign * plain, S = canonical_sign * plain
    return img;
  }
};

// Conjugate every interval exponential of `a` through `c`.
AbelianElement conjugate_abelian(const CliffordElement& c, const AbelianElement& a,
                                 bool forward) {
  AbelianElement out = AbelianElement::identity(a.q, a.m);
  out.sign = a.sign;
  const IntervalTable table(a.m, a.q);
  for (const auto& [kl, e] : a.exps) {
    const PauliWord w = interval_word(kl.first, kl.second, a.m, a.q);
    const PauliWord image = forward ? clifford_pushforward(c, w) : clifford_pullback(c, w);
    const IntervalImage img = table.recognize(image);
    out.exps[{img.k, img.l}] += img.sign * e;
  }
  out.canonicalize();
  return out;
}

std::string element_key(const GroupElement& g) {
  std::string key = g.a.sign > 0 ? "+" : "-";
  for (const auto& [kl, e] : g.a.exps)
    key += std::to_string(kl.first) + "," + std::to_string(kl.second) + ":" +
           std::to_string(e) + ";";
  key.push_back('|');
  for (const auto& w : g.c.x_fwd) key += (w.sign > 0 ? "+" : "-") + plain_key(w);
  for (const auto& w : g.c.z_fwd) key += (w.sign > 0 ? "+" : "-") + plain_key(w);
  return key;
}

}  // namespace

PauliWord PauliWord::identity(int q) {
  require_register(q);
  PauliWord w;
  w.q = q;
  w.sign = 1;
  w.x.assign(q, 0);
  w.z.assign(q, 0);
  return w;
}

PauliWord pauli_multiply(const PauliWord& a, const PauliWord& b) {
  require_same_register(a, b);
  PauliWord out = a;
  // Moving b's X block left past a's Z block anticommutes per shared qubit.
  out.sign = a.sign * b.sign * (bit_dot(a.z, b.x) ? -1 : 1);
  for (int i = 0; i < a.q; ++i) {
    out.x[i] = a.x[i] ^ b.x[i];
    out.z[i] = a.z[i] ^ b.z[i];
  }
  return out;
}

Eigen::MatrixXcd dense_pauli(const PauliWord& w) {
  const std::size_t dim = dense_dim(w.q);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t row = col;
    int sign = w.sign;
    for (int i = 0; i < w.q; ++i) {
      const int bit = int(col >> (w.q - 1 - i)) & 1;
      if (w.z[i] && bit) sign = -sign;
      if (w.x[i]) row ^= std::size_t(1) << (w.q - 1 - i);
    }
    out(row, col) = double(sign);
  }
  return out;
}

std::string format_pauli(const PauliWord& w) {
  std::string s(w.sign > 0 ? "+" : "-");
  for (int i = 0; i < w.q; ++i) {
    if (w.x[i] && w.z[i])
      s.push_back('Y');  // the product X*Z on this qubit
    else if (w.x[i])
      s.push_back('X');
    else if (w.z[i])
      s.push_back('Z');
    else
      s.push_back('.');
  }
  return s;
}

PauliWord axis_word(int i, int m, int q) {
  require_register(q);
  require_m(m);
  if (i < 1 || i > q) throw std::invalid_argument("axis index out of range");
  PauliWord w = PauliWord::identity(q);
  w.x[i - 1] = 1;
  if (m >= 5) {
    if (i - 2 >= 0) w.z[i - 2] = 1;
    if (i <= q - 1) w.z[i] = 1;
  }
  return w;
}

PauliWord interval_word(int k, int l, int m, int q) {
  if (k < 1 || l < k || l > q) throw std::invalid_argument("interval out of range");
  PauliWord w = axis_word(k, m, q);
  for (int j = k + 1; j <= l; ++j) w = pauli_multiply(w, axis_word(j, m, q));
  return w;
}

AbelianElement AbelianElement::identity(int q, int m) {
  require_register(q);
  require_m(m);
  AbelianElement a;
  a.q = q;
  a.m = m;
  a.sign = 1;
  return a;
}

void AbelianElement::canonicalize() {
  for (auto it = exps.begin(); it != exps.end();) {
    const auto& [k, l] = it->first;
    if (k < 1 || l < k || l > q) throw std::invalid_argument("interval out of range");
    int e = ((it->second % (2 * m)) + 2 * m) % (2 * m);
    if (e >= m) {
      e -= m;
      sign = -sign;
    }
    if (e == 0) {
      it = exps.erase(it);
    } else {
      it->second = e;
      ++it;
    }
  }
}

AbelianElement abelian_multiply(const AbelianElement& a, const AbelianElement& b) {
  if (a.q != b.q || a.m != b.m) throw std::invalid_argument("mismatched elements");
  AbelianElement out = a;
  out.sign = a.sign * b.sign;
  for (const auto& [kl, e] : b.exps) out.exps[kl] += e;
  out.canonicalize();
  return out;
}

AbelianElement abelian_inverse(const AbelianElement& a) {
  AbelianElement out = a;
  for (auto& [kl, e] : out.exps) e = -e;
  out.canonicalize();
  return out;
}

Eigen::MatrixXcd dense_abelian(const AbelianElement& a) {
  const std::size_t dim = dense_dim(a.q);
  Eigen::MatrixXcd out =
      double(a.sign) * Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& [kl, e] : a.exps) {
    const double theta = std::numbers::pi * e / a.m;
    const Eigen::MatrixXcd s = dense_pauli(interval_word(kl.first, kl.second, a.m, a.q));
    out = out * (std::cos(theta) * Eigen::MatrixXcd::Identity(dim, dim) +
                 std::complex<double>(0.0, std::sin(theta)) * s);
  }
  return out;
}

CliffordElement CliffordElement::identity(int q) {
  require_register(q);
  CliffordElement c;
  c.q = q;
  for (int i = 0; i < q; ++i) {
    PauliWord x = PauliWord::identity(q), z = PauliWord::identity(q);
    x.x[i] = 1;
    z.z[i] = 1;
    c.x_fwd.push_back(x);
    c.z_fwd.push_back(z);
    c.x_inv.push_back(x);
    c.z_inv.push_back(z);
  }
  return c;
}

namespace {

PauliWord conjugate_word(const std::vector<PauliWord>& x_images,
                         const std::vector<PauliWord>& z_images, const PauliWord& w) {
  PauliWord out = PauliWord::identity(w.q);
  out.sign = w.sign;
  for (int i = 0; i < w.q; ++i)
    if (w.x[i]) out = pauli_multiply(out, x_images[i]);
  for (int i = 0; i < w.q; ++i)
    if (w.z[i]) out = pauli_multiply(out, z_images[i]);
  return out;
}

}  // namespace

PauliWord clifford_pushforward(const CliffordElement& c, const PauliWord& w) {
  if (c.q != w.q) throw std::invalid_argument("mismatched register sizes");
  return conjugate_word(c.x_fwd, c.z_fwd, w);
}

PauliWord clifford_pullback(const CliffordElement& c, const PauliWord& w) {
  if (c.q != w.q) throw std::invalid_argument("mismatched register sizes");
  return conjugate_word(c.x_inv, c.z_inv, w);
}

CliffordElement clifford_compose(const CliffordElement& a, const CliffordElement& b) {
  if (a.q != b.q) throw std::invalid_argument("mismatched register sizes");
  CliffordElement out;
  out.q = a.q;
  for (int i = 0; i < a.q; ++i) {
    out.x_fwd.push_back(clifford_pushforward(a, b.x_fwd[i]));
    out.z_fwd.push_back(clifford_pushforward(a, b.z_fwd[i]));
    out.x_inv.push_back(clifford_pullback(b, a.x_inv[i]));
    out.z_inv.push_back(clifford_pullback(b, a.z_inv[i]));
  }
  return out;
}

CliffordElement clifford_inverse(const CliffordElement& c) {
  CliffordElement out;
  out.q = c.q;
  out.x_fwd = c.x_inv;
  out.z_fwd = c.z_inv;
  out.x_inv = c.x_fwd;
  out.z_inv = c.z_fwd;
  return out;
}

Eigen::MatrixXcd dense_clifford(const CliffordElement& c) {
  const std::size_t dim = dense_dim(c.q);
  // The realized operator permutes basis states: X images are X-type, so
  // C|x> = (C X^x C^dag)|y0> with |y0> = C|0> determined from the Z images.
  for (const auto& w : c.x_fwd)
    if (std::count(w.z.begin(), w.z.end(), 1) != 0 || w.sign != 1)
      throw std::logic_error("tableau does not describe a basis permutation");
  for (const auto& w : c.z_fwd)
    if (std::count(w.x.begin(), w.x.end(), 1) != 0)
      throw std::logic_error("tableau does not describe a basis permutation");

  // Solve <z_fwd[i].z, y0> = (1 - sign_i)/2 over F2.
  std::vector<std::vector<std::uint8_t>> rows;
  std::vector<std::uint8_t> rhs;
  for (const auto& w : c.z_fwd) {
    rows.push_back(w.z);
    rhs.push_back(w.sign == 1 ? 0 : 1);
  }
  std::vector<std::uint8_t> y0(c.q, 0);
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < c.q && r < c.q; ++col) {
    int p = -1;
    for (int i = r; i < c.q; ++i)
      if (rows[i][col]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (int i = 0; i < c.q; ++i)
      if (i != r && rows[i][col]) {
        for (int j = 0; j < c.q; ++j) rows[i][j] ^= rows[r][j];
        rhs[i] ^= rhs[r];
      }
    pivot_col.push_back(col);
    ++r;
  }
  if (r < c.q) throw std::logic_error("tableau is singular");
  for (int i = 0; i < c.q; ++i) y0[pivot_col[i]] = rhs[i];

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    PauliWord xw = PauliWord::identity(c.q);
    for (int i = 0; i < c.q; ++i) xw.x[i] = std::uint8_t(col >> (c.q - 1 - i)) & 1;
    const PauliWord image = clifford_pushforward(c, xw);
    std::size_t row = 0;
    for (int i = 0; i < c.q; ++i)
      if (std::uint8_t(image.x[i] ^ y0[i])) row |= std::size_t(1) << (c.q - 1 - i);
    out(row, col) = double(image.sign * (bit_dot(image.z, y0) ? -1 : 1));
  }
  return out;
}

CliffordElement controlled_flip(int i, int q) {
  require_register(q);
  if (i < 1 || i > q) throw std::invalid_argument("flip index out of range");
  CliffordElement c = CliffordElement::identity(q);
  // Controls at i-1 and i+1 propagate X onto the target; the target's Z
  // spreads onto the controls. Out-of-range controls are fixed to satisfied.
  if (i - 2 >= 0) c.x_fwd[i - 2].x[i - 1] = 1;
  if (i <= q - 1) c.x_fwd[i].x[i - 1] = 1;
  if (i - 2 >= 0) c.z_fwd[i - 1].z[i - 2] = 1;
  if (i <= q - 1) c.z_fwd[i - 1].z[i] = 1;
  c.x_inv = c.x_fwd;  // the gate is an involution
  c.z_inv = c.z_fwd;
  return c;
}

GroupElement GroupElement::identity(int q, int m) {
  return GroupElement{AbelianElement::identity(q, m), CliffordElement::identity(q)};
}

GroupElement generator_element(int i, int m, int q) {
  GroupElement g = GroupElement::identity(q, m);
  if (i < 1 || i > q) throw std::invalid_argument("generator index out of range");
  g.a.exps[{i, i}] = 1;
  g.c = controlled_flip(i, q);
  return g;
}

GroupElement group_multiply(const GroupElement& g1, const GroupElement& g2) {
  if (g1.q() != g2.q() || g1.m() != g2.m())
    throw std::invalid_argument("mismatched elements");
  GroupElement out;
  out.a = abelian_multiply(g1.a, conjugate_abelian(g1.c, g2.a, /*forward=*/true));
  out.c = clifford_compose(g1.c, g2.c);
  return out;
}

GroupElement group_inverse(const GroupElement& g) {
  GroupElement out;
  out.c = clifford_inverse(g.c);
  out.a = conjugate_abelian(g.c, abelian_inverse(g.a), /*forward=*/false);
  return out;
}

GroupElement braid_to_element(const BraidWord& b, int m) {
  b.validate();
  const int q = b.strands + 1;
  GroupElement acc = GroupElement::identity(q, m);
  for (const int letter : b.letters) {
    GroupElement gen = generator_element(std::abs(letter) + 1, m, q);
    if (letter < 0) gen = group_inverse(gen);
    acc = group_multiply(acc, gen);
  }
  return acc;
}

Eigen::MatrixXcd dense_group(const GroupElement& g) {
  return dense_abelian(g.a) * dense_clifford(g.c);
}

IntervalImage pullback_interval(const GroupElement& g, int k, int l) {
  const PauliWord w = interval_word(k, l, g.m(), g.q());
  const IntervalTable table(g.m(), g.q());
  return table.recognize(clifford_pullback(g.c, w));
}

GroupClosureResult enumerate_group_closure(int strands, int m, std::uint64_t max_order) {
  if (strands < 2) throw std::invalid_argument("need at least two strands");
  const int q = strands + 1;
  std::vector<GroupElement> gens;
  for (int j = 1; j <= strands - 1; ++j) {
    gens.push_back(generator_element(j + 1, m, q));
    gens.push_back(group_inverse(gens.back()));
  }
  std::vector<GroupElement> frontier{GroupElement::identity(q, m)};
  std::unordered_set<std::string> seen{element_key(frontier.front())};
  GroupClosureResult result;
  result.order = 1;
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier)
      for (const auto& gen : gens) {
        GroupElement h = group_multiply(g, gen);
        if (seen.insert(element_key(h)).second) {
          ++result.order;
          if (result.order > max_order) return result;
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  result.terminated = true;
  return result;
}

}  // namespace mmc
