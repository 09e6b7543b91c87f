#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmc/rational.hpp"

namespace mmc {

// Simple-object label of the rank-(r+4) ring attached to an odd integer
// m = 2r+1: the unit, the boson Z, the two square-root objects Xe and Xe',
// and the two-dimensional objects Y_j for 1 <= j <= r.  Y_0 is accepted as
// an alias of the unit and canonicalized away.
struct Label {
  enum class Kind { One, Z, Xe, XePrime, Yj };

  Kind kind = Kind::One;
  int j = 0;  // meaningful only when kind == Yj

  static Label one() { return {Kind::One, 0}; }
  static Label z() { return {Kind::Z, 0}; }
  static Label xe() { return {Kind::Xe, 0}; }
  static Label xe_prime() { return {Kind::XePrime, 0}; }
  static Label y(int j);  // j >= 0; y(0) canonicalizes to one()

  bool operator==(const Label& o) const { return kind == o.kind && j == o.j; }
  bool operator!=(const Label& o) const { return !(*this == o); }
  bool operator<(const Label& o) const;

  std::string to_string() const;
  // Accepts "1", "Z", "Xe", "Xe'", "XePrime", "Y<k>" (case-insensitive kinds).
  static Label parse(const std::string& text);
};

struct RSymbol {
  Label left, right, channel;
  Rational angle;  // R-symbol value is exp(2*pi*i*angle), angle in [0,1)
};

struct CategoryDatum {
  enum class QDimKind { One, Two, SqrtM };
  QDimKind qdim_kind;
  double qdim;
  Rational h;                     // scaling dimension reduced to [0,1)
  std::vector<RSymbol> r_symbols; // braiding data listed for this object
};

class FusionRing {
public:
  explicit FusionRing(int m);  // m odd, m >= 3

  int m() const { return m_; }
  int r() const { return r_; }
  int rank() const { return r_ + 4; }

  std::vector<Label> labels() const;  // canonical order: 1, Z, Xe, Xe', Y1..Yr
  void validate(const Label& a) const;

  // Simple summands of a (x) b with multiplicity, as a sorted multiset.
  // All multiplicities in this ring are 0 or 1.
  std::vector<Label> fuse(const Label& a, const Label& b) const;

  CategoryDatum category_data(const Label& a) const;

  // R-symbol angle for the channel c in a (x) b, when listed in the ring's
  // braiding data; std::nullopt means "not available", not an error.
  std::optional<Rational> r_symbol(const Label& a, const Label& b, const Label& c) const;

  // Number of fusion paths from the iterated product of `sequence` to
  // `target`.  Throws std::overflow_error if the count exceeds 64 bits.
  std::int64_t hom_dim(const std::vector<Label>& sequence, const Label& target) const;

private:
  int m_;
  int r_;
};

}  // namespace mmc
