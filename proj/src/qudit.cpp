#include "mmc/qudit.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace mmc {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void require_compatible(const QuditMonomial& a, const QuditMonomial& b) {
  if (a.n != b.n || a.m != b.m)
    throw std::invalid_argument("monomials live on different registers");
}

}  // namespace

QuditMonomial QuditMonomial::identity(int n, int m) {
  QuditMonomial a;
  a.n = n;
  a.m = m;
  a.phase_exp = 0;
  a.z_exp.assign(n, 0);
  a.x_exp.assign(n, 0);
  a.validate();
  return a;
}

QuditMonomial QuditMonomial::x(int n, int m, int site) {
  QuditMonomial a = identity(n, m);
  if (site < 1 || site > n) throw std::invalid_argument("site out of range");
  a.x_exp[site - 1] = 1;
  return a;
}

QuditMonomial QuditMonomial::z(int n, int m, int site) {
  QuditMonomial a = identity(n, m);
  if (site < 1 || site > n) throw std::invalid_argument("site out of range");
  a.z_exp[site - 1] = 1;
  return a;
}

QuditMonomial QuditMonomial::u_op(int n, int m, int i) {
  QuditMonomial a = identity(n, m);
  if (i < 1 || i > n - 1) throw std::invalid_argument("pair index out of range");
  a.x_exp[i - 1] = 1;
  a.x_exp[i] = 1;
  a.z_exp[i - 1] = 1;
  a.z_exp[i] = m - 1;
  return a;
}

QuditMonomial QuditMonomial::u_tilde_op(int n, int m, int i) {
  QuditMonomial a = identity(n, m);
  if (i < 1 || i > n - 1) throw std::invalid_argument("pair index out of range");
  a.x_exp[i - 1] = 1;
  a.x_exp[i] = 1;
  a.z_exp[i - 1] = m - 1;
  a.z_exp[i] = 1;
  return a;
}

void QuditMonomial::validate() const {
  if (n < 1) throw std::invalid_argument("monomial needs at least one qudit");
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("qudit dimension must be odd >= 3");
  if (static_cast<int>(z_exp.size()) != n || static_cast<int>(x_exp.size()) != n)
    throw std::invalid_argument("exponent vector size mismatch");
  if (phase_exp < 0 || phase_exp >= 2 * m)
    throw std::invalid_argument("phase exponent out of canonical range");
  for (int i = 0; i < n; ++i)
    if (z_exp[i] < 0 || z_exp[i] >= m || x_exp[i] < 0 || x_exp[i] >= m)
      throw std::invalid_argument("site exponent out of canonical range");
}

bool QuditMonomial::is_identity() const {
  if (phase_exp != 0) return false;
  for (int i = 0; i < n; ++i)
    if (z_exp[i] != 0 || x_exp[i] != 0) return false;
  return true;
}

bool QuditMonomial::operator==(const QuditMonomial& other) const {
  return n == other.n && m == other.m && phase_exp == other.phase_exp &&
         z_exp == other.z_exp && x_exp == other.x_exp;
}

bool QuditMonomial::same_plain_part(const QuditMonomial& other) const {
  return n == other.n && m == other.m && z_exp == other.z_exp && x_exp == other.x_exp;
}

QuditMonomial QuditMonomial::plain() const {
  QuditMonomial a = *this;
  a.phase_exp = 0;
  return a;
}

QuditMonomial monomial_multiply(const QuditMonomial& a, const QuditMonomial& b) {
  require_compatible(a, b);
  QuditMonomial out = a;
  int cross = 0;  // <x_a, z_b>, the cost of moving a's X block past b's Z block
  for (int i = 0; i < a.n; ++i) cross = mod(cross + a.x_exp[i] * b.z_exp[i], a.m);
  out.phase_exp = mod(a.phase_exp + b.phase_exp - 2 * cross, 2 * a.m);
  for (int i = 0; i < a.n; ++i) {
    out.z_exp[i] = mod(a.z_exp[i] + b.z_exp[i], a.m);
    out.x_exp[i] = mod(a.x_exp[i] + b.x_exp[i], a.m);
  }
  return out;
}

QuditMonomial monomial_inverse(const QuditMonomial& a) {
  QuditMonomial out = a;
  int cross = 0;  // <x, z> for recanonicalizing X^{-x} Z^{-z}
  for (int i = 0; i < a.n; ++i) cross = mod(cross + a.x_exp[i] * a.z_exp[i], a.m);
  out.phase_exp = mod(-a.phase_exp - 2 * cross, 2 * a.m);
  for (int i = 0; i < a.n; ++i) {
    out.z_exp[i] = mod(-a.z_exp[i], a.m);
    out.x_exp[i] = mod(-a.x_exp[i], a.m);
  }
  return out;
}

QuditMonomial monomial_pow(const QuditMonomial& a, int e) {
  const QuditMonomial base = e >= 0 ? a : monomial_inverse(a);
  QuditMonomial out = QuditMonomial::identity(a.n, a.m);
  for (int k = 0; k < std::abs(e); ++k) out = monomial_multiply(out, base);
  return out;
}

int symplectic_form(const QuditMonomial& a, const QuditMonomial& b) {
  require_compatible(a, b);
  int s = 0;
  for (int i = 0; i < a.n; ++i)
    s = mod(s + a.x_exp[i] * b.z_exp[i] - b.x_exp[i] * a.z_exp[i], a.m);
  return s;
}

Eigen::MatrixXcd dense_monomial(const QuditMonomial& a) {
  a.validate();
  const int m = a.m;
  std::int64_t dim = 1;
  for (int i = 0; i < a.n; ++i) {
    dim *= m;
    if (dim > (1 << 20)) throw std::invalid_argument("dense monomial too large");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    // Digits of the basis index, site 1 most significant.
    std::int64_t rest = col;
    std::int64_t row = 0;
    int omega_exp = 0;
    std::int64_t place = dim;
    for (int site = 0; site < a.n; ++site) {
      place /= m;
      const int j = static_cast<int>(rest / place);
      rest %= place;
      const int jx = (j + a.x_exp[site]) % m;
      omega_exp = mod(omega_exp + a.z_exp[site] * jx, m);
      row += static_cast<std::int64_t>(jx) * place;
    }
    out(row, col) =
        std::polar(1.0, std::numbers::pi * (a.phase_exp + 2.0 * omega_exp) / m);
  }
  return out;
}

QuditMonomial conjugate_by_generator(const QuditMonomial& a, int i, int sign) {
  a.validate();
  if (i < 1 || i > a.n - 1) throw std::invalid_argument("generator index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  const int m = a.m;
  const int z1 = a.z_exp[i - 1], z2 = a.z_exp[i];
  const int x1 = a.x_exp[i - 1], x2 = a.x_exp[i];

  // Local decomposition exponents over the generating set
  //   A = X_i X_{i+1}, B = Z_i Z_{i+1}^{-1}, C = Z_i X_i, D = Z_i,
  // whose plain parts multiply to the local plain part of `a`.
  const int alpha = mod(x2, m);
  const int gamma = mod(x1 - x2, m);
  const int beta = mod(-z2, m);
  const int delta = mod(z1 - x1 + x2 + z2, m);

  QuditMonomial gen_a = QuditMonomial::identity(a.n, m);
  gen_a.x_exp[i - 1] = 1;
  gen_a.x_exp[i] = 1;
  QuditMonomial gen_b = QuditMonomial::identity(a.n, m);
  gen_b.z_exp[i - 1] = 1;
  gen_b.z_exp[i] = m - 1;
  QuditMonomial gen_c = QuditMonomial::identity(a.n, m);
  gen_c.z_exp[i - 1] = 1;
  gen_c.x_exp[i - 1] = 1;
  const QuditMonomial gen_d = QuditMonomial::z(a.n, m, i);

  // Phase of the exact product A^alpha B^beta C^gamma D^delta relative to the
  // local plain part.
  const QuditMonomial abc = monomial_multiply(
      monomial_multiply(monomial_pow(gen_a, alpha), monomial_pow(gen_b, beta)),
      monomial_pow(gen_c, gamma));
  const QuditMonomial q = monomial_multiply(abc, monomial_pow(gen_d, delta));

  // Pullback of D = Z_i through the gate at sites (i, i+1):
  //   positive letter: omega^{+l^2} Z_i U_i^{-l}
  //   negative letter: omega^{-l^2} Z_i U_i^{+l}
  // with l = (m+1)/2 (the inverse of 2 mod m).
  const int l = (m + 1) / 2;
  const QuditMonomial u_i = QuditMonomial::u_op(a.n, m, i);
  QuditMonomial conj_d =
      monomial_multiply(gen_d, monomial_pow(u_i, sign > 0 ? -l : l));
  conj_d.phase_exp = mod(conj_d.phase_exp + (sign > 0 ? 2 : -2) * l * l, 2 * m);

  const QuditMonomial conj_local = monomial_multiply(abc, monomial_pow(conj_d, delta));

  // Splice: result = zeta^{a.phase - q.phase} * conj_local * (rest of a).
  QuditMonomial out = a;
  out.phase_exp = mod(a.phase_exp - q.phase_exp + conj_local.phase_exp, 2 * m);
  for (int s : {i - 1, i}) {
    out.z_exp[s] = conj_local.z_exp[s];
    out.x_exp[s] = conj_local.x_exp[s];
  }
  return out;
}

QuditMonomial conjugate_by_word(const QuditMonomial& a, const BraidWord& word) {
  word.validate();
  if (word.strands != a.n)
    throw std::invalid_argument("braid strand count must match qudit count");
  QuditMonomial out = a;
  for (int g : word.letters)
    out = conjugate_by_generator(out, std::abs(g), g > 0 ? 1 : -1);
  return out;
}

UWord monomial_to_uword(const QuditMonomial& a) {
  a.validate();
  UWord w;
  w.n = a.n;
  w.m = a.m;
  w.exps.assign(2 * a.n, 0);
  int prefix = 0;
  for (int i = 1; i <= a.n; ++i) {
    w.exps[2 * i - 2] = a.x_exp[i - 1];
    prefix = mod(prefix + a.z_exp[i - 1], a.m);
    w.exps[2 * i - 1] = prefix;  // for i = n this is the total, matching Z_n
  }
  UWord plain = w;
  plain.phase_exp = 0;
  const QuditMonomial product = uword_to_monomial(plain);
  w.phase_exp = mod(a.phase_exp - product.phase_exp, 2 * a.m);
  return w;
}

QuditMonomial uword_to_monomial(const UWord& w) {
  if (w.n < 1) throw std::invalid_argument("uword needs at least one qudit");
  if (static_cast<int>(w.exps.size()) != 2 * w.n)
    throw std::invalid_argument("uword exponent vector size mismatch");
  QuditMonomial out = QuditMonomial::identity(w.n, w.m);
  for (int g = 1; g <= 2 * w.n; ++g) {
    const int e = mod(w.exps[g - 1], w.m);
    if (e == 0) continue;
    QuditMonomial gen = QuditMonomial::identity(w.n, w.m);
    if (g % 2 == 1) {
      gen.x_exp[(g - 1) / 2] = 1;
    } else if (g < 2 * w.n) {
      gen.z_exp[g / 2 - 1] = 1;
      gen.z_exp[g / 2] = w.m - 1;
    } else {
      gen.z_exp[w.n - 1] = 1;
    }
    out = monomial_multiply(out, monomial_pow(gen, e));
  }
  out.phase_exp = mod(out.phase_exp + w.phase_exp, 2 * w.m);
  return out;
}

}  // namespace mmc
