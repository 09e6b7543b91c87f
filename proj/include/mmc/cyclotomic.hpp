#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mmc/rational.hpp"

namespace mmc {

// Coefficient vector of the n-th cyclotomic polynomial, ascending degree.
// Computed once per n and cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

// An element of the cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N),
// stored as the canonical remainder mod the N-th cyclotomic polynomial.
// Equality of canonical forms is equality of field elements, so exact
// comparisons are available alongside numerical evaluation.
class Cyclotomic {
public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

  static Cyclotomic zero(int order);
  static Cyclotomic from_rational(int order, const Rational& r);
  // zeta_order^k for any integer k (reduced mod order).
  static Cyclotomic root(int order, std::int64_t k);
  // Exact sqrt(p) for an odd prime p, as an element of Q(zeta_order);
  // requires order to be a multiple of 4*p.
  static Cyclotomic sqrt_prime(int p, int order);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  // If the element lies in Q, reports true and stores the value when out != nullptr.
  bool is_rational(Rational* out = nullptr) const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic scaled(const Rational& r) const;
  Cyclotomic pow(std::int64_t e) const;  // e >= 0
  Cyclotomic conjugate() const;
  // Embed into Q(zeta_bigger); bigger must be a multiple of order().
  Cyclotomic to_order(int bigger) const;

  std::complex<double> eval() const;
  std::string to_string() const;

private:
  explicit Cyclotomic(int order) : order_(order) {}
  static Cyclotomic from_raw_(int order, std::vector<Rational> raw);

  int order_;
  std::vector<Rational> coeffs_;  // size deg(Phi_order), canonical remainder
};

}  // namespace mmc
