#include "mmc/fusion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mmc {

Label Label::y(int j) {
  if (j < 0) throw std::invalid_argument("Label: negative Y index");
  if (j == 0) return one();
  return {Kind::Yj, j};
}

bool Label::operator<(const Label& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  return j < o.j;
}

std::string Label::to_string() const {
  switch (kind) {
    case Kind::One: return "1";
    case Kind::Z: return "Z";
    case Kind::Xe: return "Xe";
    case Kind::XePrime: return "Xe'";
    case Kind::Yj: return "Y" + std::to_string(j);
  }
  return "?";
}

Label Label::parse(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "1" || t == "one") return one();
  if (t == "z") return z();
  if (t == "xe" || t == "x") return xe();
  if (t == "xe'" || t == "xeprime" || t == "x'") return xe_prime();
  if (!t.empty() && t[0] == 'y') {
    try {
      std::size_t used = 0;
      int j = std::stoi(t.substr(1), &used);
      if (used == t.size() - 1 && j >= 0) return y(j);
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("Label: cannot parse '" + text + "'");
}

FusionRing::FusionRing(int m) : m_(m), r_((m - 1) / 2) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("FusionRing: m must be odd and at least 3");
}

std::vector<Label> FusionRing::labels() const {
  std::vector<Label> out = {Label::one(), Label::z(), Label::xe(), Label::xe_prime()};
  for (int j = 1; j <= r_; ++j) out.push_back(Label::y(j));
  return out;
}

void FusionRing::validate(const Label& a) const {
  if (a.kind == Label::Kind::Yj && (a.j < 1 || a.j > r_))
    throw std::invalid_argument("Label: Y index out of range for this ring");
}

namespace {

std::vector<Label> sorted(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<Label> FusionRing::fuse(const Label& a, const Label& b) const {
  validate(a);
  validate(b);
  using K = Label::Kind;

  // The unit is transparent.
  if (a.kind == K::One) return {b};
  if (b.kind == K::One) return {a};

  // Order the pair so fewer cases remain; fusion is commutative.
  Label p = a, q = b;
  if (q < p) std::swap(p, q);

  // Pairs among {Z, Xe, Xe'} and Z-action on Y.
  if (p.kind == K::Z) {
    switch (q.kind) {
      case K::Z: return {Label::one()};
      case K::Xe: return {Label::xe_prime()};
      case K::XePrime: return {Label::xe()};
      case K::Yj: return {q};
      default: break;
    }
  }

  auto all_y_from_zero = [&] {
    std::vector<Label> out;
    for (int j = 0; j <= r_; ++j) out.push_back(Label::y(j));
    return sorted(std::move(out));
  };
  auto z_and_all_y = [&] {
    std::vector<Label> out = {Label::z()};
    for (int j = 1; j <= r_; ++j) out.push_back(Label::y(j));
    return sorted(std::move(out));
  };

  if (p.kind == K::Xe && q.kind == K::Xe) return all_y_from_zero();
  if (p.kind == K::XePrime && q.kind == K::XePrime) return all_y_from_zero();
  if (p.kind == K::Xe && q.kind == K::XePrime) return z_and_all_y();
  if ((p.kind == K::Xe || p.kind == K::XePrime) && q.kind == K::Yj)
    return sorted({Label::xe(), Label::xe_prime()});

  // Both are Y's.
  if (p.kind == K::Yj && q.kind == K::Yj) {
    int i = p.j, j = q.j;
    if (i == j)
      return sorted({Label::one(), Label::z(), Label::y(std::min(2 * j, m_ - 2 * j))});
    return sorted({Label::y(std::abs(i - j)), Label::y(std::min(i + j, m_ - i - j))});
  }

  throw std::logic_error("fuse: unhandled label pair");
}

std::optional<Rational> FusionRing::r_symbol(const Label& a, const Label& b,
                                             const Label& c) const {
  validate(a);
  validate(b);
  validate(c);
  if (!(a == b)) return std::nullopt;

  if (a == Label::y(1)) {
    // Braiding of the pair (Y1, Y1) in its three channels.
    if (c == Label::one()) return Rational(m_ + 1, 2 * m_).mod1();
    if (c == Label::z()) return Rational(1, 2 * m_);
    if (c == Label::y(std::min(2, m_ - 2))) return Rational(m_ - 1, 2 * m_);
    return std::nullopt;
  }
  if (a == Label::xe()) {
    // Braiding of (Xe, Xe) in channel Y_j, j = 0..r:
    // i^((r-j)(r-j+1)-j) * exp(pi*i*(r/4 + j^2/(4r+2))).
    int j = (c == Label::one()) ? 0 : (c.kind == Label::Kind::Yj ? c.j : -1);
    if (j < 0) return std::nullopt;
    Rational angle = Rational((r_ - j) * (r_ - j + 1) - j, 4) + Rational(r_, 8) +
                     Rational(static_cast<std::int64_t>(j) * j, 4 * m_);
    return angle.mod1();
  }
  return std::nullopt;
}

CategoryDatum FusionRing::category_data(const Label& a) const {
  validate(a);
  using K = Label::Kind;
  CategoryDatum d;

  switch (a.kind) {
    case K::One:
      d.qdim_kind = CategoryDatum::QDimKind::One;
      d.h = Rational(0);
      break;
    case K::Z:
      d.qdim_kind = CategoryDatum::QDimKind::One;
      d.h = Rational(1).mod1();  // integer scaling dimension: a boson
      break;
    case K::Xe:
      d.qdim_kind = CategoryDatum::QDimKind::SqrtM;
      d.h = Rational(r_, 8).mod1();
      break;
    case K::XePrime:
      d.qdim_kind = CategoryDatum::QDimKind::SqrtM;
      d.h = Rational(r_ + 4, 8).mod1();
      break;
    case K::Yj:
      d.qdim_kind = CategoryDatum::QDimKind::Two;
      d.h = Rational(static_cast<std::int64_t>(a.j) * (m_ - a.j), 2 * m_).mod1();
      break;
  }
  d.qdim = d.qdim_kind == CategoryDatum::QDimKind::One   ? 1.0
           : d.qdim_kind == CategoryDatum::QDimKind::Two ? 2.0
                                                         : std::sqrt(static_cast<double>(m_));

  for (const Label& c : labels()) {
    if (auto angle = r_symbol(a, a, c))
      d.r_symbols.push_back(RSymbol{a, a, c, *angle});
  }
  // Channel Y_0 = 1 of the (Xe, Xe) pair is covered by the labels() loop via
  // the unit; nothing else is listed.
  return d;
}

std::int64_t FusionRing::hom_dim(const std::vector<Label>& sequence,
                                 const Label& target) const {
  if (sequence.empty()) throw std::invalid_argument("hom_dim: empty sequence");
  validate(target);

  std::map<Label, std::int64_t> counts;
  validate(sequence.front());
  counts[sequence.front()] = 1;

  for (std::size_t step = 1; step < sequence.size(); ++step) {
    const Label& b = sequence[step];
    validate(b);
    std::map<Label, std::int64_t> next;
    for (const auto& [a, n] : counts) {
      for (const Label& c : fuse(a, b)) {
        std::int64_t& slot = next[c];
        if (__builtin_add_overflow(slot, n, &slot))
          throw std::overflow_error("hom_dim: path count exceeds 64 bits");
      }
    }
    counts = std::move(next);
  }
  auto it = counts.find(target);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace mmc
