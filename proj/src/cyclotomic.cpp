#include "mmc/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace mmc {

namespace {

// Exact division of integer polynomials (ascending coefficients), used to
// build cyclotomic polynomials from x^n - 1 by removing the factors for
// proper divisors.  The divisor is monic, so the quotient stays integral.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num,
                                         const std::vector<std::int64_t>& den) {
  const std::size_t dn = num.size() - 1;
  const std::size_t dd = den.size() - 1;
  if (den.back() != 1) throw std::logic_error("poly_div_exact: divisor not monic");
  std::vector<std::int64_t> quot(dn - dd + 1, 0);
  for (std::size_t i = dn + 1; i-- > dd;) {
    std::int64_t c = num[i];
    if (c == 0) continue;
    const std::size_t shift = i - dd;
    quot[shift] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[shift + j] -= c * den[j];
  }
  for (std::int64_t c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

std::map<int, std::vector<std::int64_t>>& phi_cache() {
  static std::map<int, std::vector<std::int64_t>> cache;
  return cache;
}

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

const std::vector<std::int64_t>& phi_locked(int n) {
  auto& cache = phi_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::int64_t> result;
  if (n == 1) {
    result = {-1, 1};  // x - 1
  } else {
    std::vector<std::int64_t> num(n + 1, 0);  // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      num = poly_div_exact(std::move(num), phi_locked(d));
    }
    result = std::move(num);
  }
  return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::lock_guard<std::mutex> lock(phi_mutex());
  return phi_locked(n);
}

Cyclotomic Cyclotomic::zero(int order) {
  if (order < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  Cyclotomic c(order);
  c.coeffs_.assign(cyclotomic_polynomial(order).size() - 1, Rational(0));
  return c;
}

Cyclotomic Cyclotomic::from_rational(int order, const Rational& r) {
  Cyclotomic c = zero(order);
  c.coeffs_[0] = r;
  return c;
}

Cyclotomic Cyclotomic::root(int order, std::int64_t k) {
  k %= order;
  if (k < 0) k += order;
  std::vector<Rational> raw(static_cast<std::size_t>(k) + 1, Rational(0));
  raw.back() = Rational(1);
  return from_raw_(order, std::move(raw));
}

Cyclotomic Cyclotomic::sqrt_prime(int p, int order) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("sqrt_prime: p must be an odd prime");
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) throw std::invalid_argument("sqrt_prime: p must be an odd prime");
  if (order % (4 * p) != 0)
    throw std::invalid_argument("sqrt_prime: order must be a multiple of 4*p");
  // Quadratic Gauss sum g = sum_x zeta_p^{x^2} equals sqrt(p) for p = 1 mod 4
  // and i*sqrt(p) for p = 3 mod 4.
  Cyclotomic g = zero(order);
  const std::int64_t step = order / p;
  for (std::int64_t x = 0; x < p; ++x) g += root(order, step * ((x * x) % p));
  if (p % 4 == 3) g *= root(order, 3 * (order / 4));  // multiply by -i
  return g;
}

Cyclotomic Cyclotomic::from_raw_(int order, std::vector<Rational> raw) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;

  // Fold exponents mod order (raw may exceed x^order - 1 after convolution).
  if (raw.size() > static_cast<std::size_t>(order)) {
    std::vector<Rational> folded(order, Rational(0));
    for (std::size_t i = 0; i < raw.size(); ++i) folded[i % order] += raw[i];
    raw = std::move(folded);
  }
  if (raw.size() < deg) raw.resize(deg, Rational(0));

  // Remainder mod the (monic, integer) cyclotomic polynomial.
  for (std::size_t i = raw.size(); i-- > deg;) {
    Rational c = raw[i];
    if (c.is_zero()) continue;
    raw[i] = Rational(0);
    const std::size_t shift = i - deg;
    for (std::size_t j = 0; j < deg; ++j)
      raw[shift + j] -= c * Rational(phi[j]);
  }
  raw.resize(deg);

  Cyclotomic out(order);
  out.coeffs_ = std::move(raw);
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational(Rational* out) const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  if (out) *out = coeffs_[0];
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: mixed orders");
  Cyclotomic r(order_);
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(order_);
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: mixed orders");
  std::vector<Rational> conv(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return from_raw_(order_, std::move(conv));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic out(order_);
  out.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * r;
  return out;
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("Cyclotomic::pow: negative exponent");
  Cyclotomic acc = from_rational(order_, Rational(1));
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> raw(order_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    raw[(order_ - static_cast<int>(i)) % order_] += coeffs_[i];
  }
  return from_raw_(order_, std::move(raw));
}

Cyclotomic Cyclotomic::to_order(int bigger) const {
  if (bigger % order_ != 0) throw std::invalid_argument("Cyclotomic::to_order: not a multiple");
  const int scale = bigger / order_;
  std::vector<Rational> raw(static_cast<std::size_t>(bigger), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    raw[i * static_cast<std::size_t>(scale)] = coeffs_[i];
  return from_raw_(bigger, std::move(raw));
}

std::complex<double> Cyclotomic::eval() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
    acc += coeffs_[i].to_double() * std::complex<double>(std::cos(theta), std::sin(theta));
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) s += " + ";
    first = false;
    s += coeffs_[i].to_string();
    if (i > 0) s += "*z^" + std::to_string(i);
  }
  if (first) s = "0";
  s += "  (z = exp(2*pi*i/" + std::to_string(order_) + "))";
  return s;
}

}  // namespace mmc
