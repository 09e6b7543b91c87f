#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mmc/braid.hpp"
#include "mmc/cyclotomic.hpp"
#include "mmc/errors.hpp"
#include "mmc/invariants.hpp"
#include "mmc/ising.hpp"
#include "mmc/rational.hpp"

using mmc::CouplingMatrix;
using mmc::CutStats;
using mmc::Cyclotomic;
using mmc::IsingParams;
using mmc::Rational;

namespace {

CouplingMatrix coupling(int n, std::vector<std::array<int, 3>> edges) {
  CouplingMatrix j;
  j.n = n;
  j.j.assign(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : edges) {
    j.j[e[0]][e[1]] = e[2];
    j.j[e[1]][e[0]] = e[2];
  }
  return j;
}

// Independent partition-function oracle: direct sum over all spin vectors.
double naive_z(const CouplingMatrix& j, double y) {
  double z = 0.0;
  for (std::uint64_t mask = 0; mask < (1ull << j.n); ++mask) {
    std::int64_t e = 0;
    for (int a = 0; a < j.n; ++a)
      for (int b = a + 1; b < j.n; ++b)
        if ((((mask >> a) ^ (mask >> b)) & 1) == 0) e += j.j[a][b];
    z += std::pow(y, static_cast<double>(e));
  }
  return z;
}

Rational naive_z_exact(const CouplingMatrix& j, const Rational& y) {
  Rational z(0);
  for (std::uint64_t mask = 0; mask < (1ull << j.n); ++mask) {
    Rational term(1);
    for (int a = 0; a < j.n; ++a)
      for (int b = a + 1; b < j.n; ++b)
        if ((((mask >> a) ^ (mask >> b)) & 1) == 0) {
          std::int64_t e = j.j[a][b];
          for (std::int64_t t = 0; t < std::llabs(e); ++t)
            term = e > 0 ? term * y : term / y;
        }
    z += term;
  }
  return z;
}

}  // namespace

TEST_CASE("coupling strength y and its exact values") {
  IsingParams p;

  p.m = 3;
  p.d = 1;
  CHECK(p.y() == doctest::Approx(-0.5).epsilon(1e-12));
  REQUIRE(p.exact_y().has_value());
  CHECK(*p.exact_y() == Rational(-1, 2));

  p.m = 5;
  p.d = 2;
  CHECK(p.y() == doctest::Approx(0.309016994374947).epsilon(1e-12));
  CHECK(!p.exact_y().has_value());

  p.m = 9;
  p.d = 6;
  CHECK(p.y() == doctest::Approx(-0.5).epsilon(1e-12));
  REQUIRE(p.exact_y().has_value());
  CHECK(*p.exact_y() == Rational(-1, 2));

  p.m = 3;
  p.d = 3;
  CHECK(p.y() == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(p.exact_y().has_value());
  CHECK(*p.exact_y() == Rational(1));

  p.m = 4;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.m = 1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.m = 3;
  p.d = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  CHECK(!mmc::find_twist_for_regime(3, true).has_value());
  CHECK(mmc::find_twist_for_regime(3, false) == 1);
  CHECK(mmc::find_twist_for_regime(5, true) == 2);
  CHECK(mmc::find_twist_for_regime(5, false) == 1);
  CHECK(mmc::find_twist_for_regime(7, true) == 3);
  CHECK(mmc::find_twist_for_regime(7, false) == 1);
  // Every suggested twist lands strictly inside the requested regime.
  for (int m : {3, 5, 7, 9, 11, 13})
    for (bool positive : {false, true})
      if (auto d = mmc::find_twist_for_regime(m, positive)) {
        IsingParams q;
        q.m = m;
        q.d = *d;
        const double y = q.y();
        CHECK(std::abs(y) < 1.0);
        CHECK((positive ? y > 0.0 : y < 0.0));
      }
}

TEST_CASE("partition function pins and oracle agreement") {
  const CouplingMatrix pair = coupling(2, {{0, 1, 2}});
  CHECK(mmc::z_partition(pair, -0.5) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(mmc::z_partition_exact(pair, Rational(-1, 2)) == Rational(5, 2));

  const CouplingMatrix anti = coupling(2, {{0, 1, -2}});
  CHECK(mmc::z_partition(anti, -0.5) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(mmc::z_partition_exact(anti, Rational(-1, 2)) == Rational(10));

  const CouplingMatrix free3 = coupling(3, {});
  CHECK(mmc::z_partition(free3, 0.7) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(mmc::z_partition_exact(free3, Rational(1, 3)) == Rational(8));

  std::mt19937 rng(0xfeedbe11);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = size(rng);
    CouplingMatrix j = coupling(n, {});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) j.j[a][b] = j.j[b][a] = entry(rng);
    for (double y : {-0.5, 0.3, 0.7}) {
      const double got = mmc::z_partition(j, y);
      const double want = naive_z(j, y);
      CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
    const Rational exact = mmc::z_partition_exact(j, Rational(-1, 2));
    CHECK(exact == naive_z_exact(j, Rational(-1, 2)));
    CHECK(exact.to_double() == doctest::Approx(mmc::z_partition(j, -0.5)).epsilon(1e-9));
  }

  CouplingMatrix bad = coupling(2, {{0, 1, 1}});
  bad.j[0][1] = 2;
  CHECK_THROWS_AS(mmc::z_partition(bad, 0.5), std::invalid_argument);
  CouplingMatrix diag = coupling(2, {});
  diag.j[1][1] = 1;
  CHECK_THROWS_AS(mmc::z_partition(diag, 0.5), std::invalid_argument);
  CouplingMatrix empty;
  CHECK_THROWS_AS(mmc::z_partition(empty, 0.5), std::invalid_argument);
  const CouplingMatrix huge = coupling(31, {});
  CHECK_THROWS_AS(mmc::z_partition(huge, 0.5), mmc::refused_error);
  CHECK_THROWS_AS(mmc::z_partition_exact(huge, Rational(1, 2)), mmc::refused_error);
}

TEST_CASE("link compilation produces the prescribed linking data") {
  IsingParams p;
  p.m = 3;
  p.d = 1;

  const auto link = mmc::compile_link(coupling(2, {{0, 1, 2}}), p);
  CHECK(link.lk.components == 4);
  REQUIRE(link.fmap.size() == 2);
  CHECK(link.fmap[0] == std::array<int, 3>{1, 2, 1});
  CHECK(link.fmap[1] == std::array<int, 3>{1, 2, 2});
  CHECK(link.braid.strands == 8);
  CHECK(link.lk.entries[0][2] == 1);
  CHECK(link.lk.entries[0][3] == 1);
  CHECK(link.lk.entries[1][2] == 1);
  CHECK(link.lk.entries[1][3] == 1);
  CHECK(link.lk.entries[0][1] == 0);
  CHECK(link.lk.entries[2][3] == 0);

  const auto anti = mmc::compile_link(coupling(2, {{0, 1, -2}}), p);
  CHECK(anti.lk.entries[0][2] == 1);
  CHECK(anti.lk.entries[0][3] == 1);
  CHECK(anti.lk.entries[1][2] == -1);
  CHECK(anti.lk.entries[1][3] == -1);

  const auto freelink = mmc::compile_link(coupling(3, {}), p);
  CHECK(freelink.lk.components == 3);
  CHECK(freelink.braid.strands == 6);
  CHECK(freelink.braid.letters.empty());
  CHECK(freelink.fmap.empty());

  // The plat closure of the braid must reproduce the linking matrix and the
  // component count exactly, with components in matching canonical order.
  std::mt19937 rng(0x15c0ffee);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> twist(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = size(rng);
    CouplingMatrix j = coupling(n, {});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) j.j[a][b] = j.j[b][a] = entry(rng);
    IsingParams q;
    q.m = 7;
    q.d = twist(rng);
    const auto compiled = mmc::compile_link(j, q);
    const auto closed = mmc::closure_components(compiled.braid, mmc::ClosureKind::Plat);
    CHECK(closed.count == compiled.lk.components);
    const auto lk = mmc::linking_matrix(compiled.braid, mmc::ClosureKind::Plat);
    REQUIRE(lk.components == compiled.lk.components);
    CHECK(lk.entries == compiled.lk.entries);
  }
}

TEST_CASE("state sum of a compiled link matches the partition-function formula") {
  IsingParams p;
  p.m = 3;
  p.d = 1;

  // Hand-evaluated pins: J = [[0,2],[2,0]] gives E = 10 w with w = e^{2 pi i/3};
  // flipping the coupling sign gives E = 10.
  const auto ferro = mmc::compile_link(coupling(2, {{0, 1, 2}}), p);
  const Cyclotomic e_ferro = mmc::lm_state_sum(ferro.lk, 3).e;
  CHECK(e_ferro == Cyclotomic::root(12, 4).scaled(Rational(10)));
  CHECK(mmc::verify_claim(coupling(2, {{0, 1, 2}}), p) < 1e-9);

  const auto anti = mmc::compile_link(coupling(2, {{0, 1, -2}}), p);
  const Cyclotomic e_anti = mmc::lm_state_sum(anti.lk, 3).e;
  CHECK(e_anti == Cyclotomic::from_rational(12, Rational(10)));
  CHECK(mmc::verify_claim(coupling(2, {{0, 1, -2}}), p) < 1e-9);

  // Decoupled sites: both sides are 2^n.
  CHECK(mmc::verify_claim(coupling(3, {}), p) < 1e-9);

  // The per-pair weight a^{-4d} + a^{4d} equals 2 y, exactly when y is
  // rational and numerically otherwise.
  for (int m : {3, 5, 7}) {
    IsingParams q;
    q.m = m;
    for (int d = 1; d < m; ++d) {
      q.d = d;
      const Cyclotomic w = Cyclotomic::root(4 * m, 4 * d * (m + 2)) +
                           Cyclotomic::root(4 * m, -4 * d * (m + 2));
      CHECK(std::abs(w.eval() - std::complex<double>(2.0 * q.y(), 0.0)) < 1e-12);
      if (auto y = q.exact_y())
        CHECK(w == Cyclotomic::from_rational(4 * m, Rational(2) * *y));
    }
  }

  std::mt19937 rng(0xc1a1ab0b);
  std::uniform_int_distribution<int> size(1, 3);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = size(rng);
    CouplingMatrix j = coupling(n, {});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) j.j[a][b] = j.j[b][a] = entry(rng);
    IsingParams q;
    q.m = (trial % 2 == 0) ? 3 : 5;
    q.d = 1 + trial % (q.m - 1);
    CHECK(mmc::verify_claim(j, q) < 1e-9);
  }

  CHECK_THROWS_AS(mmc::verify_claim(coupling(2, {{0, 1, 24}}), p), mmc::refused_error);
}

TEST_CASE("max-cut statistics recovered from the partition function") {
  IsingParams p;
  p.m = 3;
  p.d = 1;

  const auto triangle = mmc::maxcut_recover(
      coupling(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}), p);
  CHECK(triangle.stats.max_cut == 2);
  CHECK(triangle.stats.count == 6);
  CHECK(triangle.k == 4);
  CHECK(triangle.recovered == triangle.stats);

  const auto empty3 = mmc::maxcut_recover(coupling(3, {}), p);
  CHECK(empty3.stats.max_cut == 0);
  CHECK(empty3.stats.count == 8);
  CHECK(empty3.recovered == empty3.stats);

  const auto path3 = mmc::maxcut_recover(coupling(3, {{0, 1, 1}, {1, 2, 1}}), p);
  CHECK(path3.stats.max_cut == 2);
  CHECK(path3.stats.count == 2);
  CHECK(path3.recovered == path3.stats);

  // Exhaustive sweep: every graph on up to 4 vertices, in a negative and a
  // positive coupling regime, must round-trip; the partition value must sit
  // in the predicted band around N(G) |y|^{K (|E(G)| - M)}.
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::array<int, 2>> slots;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
      CouplingMatrix g = coupling(n, {});
      std::int64_t edges = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1) {
          g.j[slots[s][0]][slots[s][1]] = g.j[slots[s][1]][slots[s][0]] = 1;
          ++edges;
        }
      const std::vector<std::pair<int, int>> regimes = {{3, 1}, {5, 1}, {5, 2}};
      for (auto [m, d] : regimes) {
        IsingParams q;
        q.m = m;
        q.d = d;
        const auto r = mmc::maxcut_recover(g, q);
        CHECK(r.recovered == r.stats);
        const double w = std::abs(q.y());
        const double main_term =
            static_cast<double>(r.stats.count) *
            std::pow(w, static_cast<double>(r.k) * static_cast<double>(edges - r.stats.max_cut));
        const double tail =
            std::pow(w, static_cast<double>(r.k) * static_cast<double>(1 + edges - r.stats.max_cut)) *
            std::ldexp(1.0, n);
        CHECK(std::abs(r.z) >= main_term * (1.0 - 1e-9));
        CHECK(std::abs(r.z) <= (main_term + tail) * (1.0 + 1e-9));
      }
    }
  }

  IsingParams unit;
  unit.m = 3;
  unit.d = 3;  // y = 1
  CHECK_THROWS_AS(mmc::maxcut_recover(coupling(2, {{0, 1, 1}}), unit), std::invalid_argument);
  CHECK_THROWS_AS(mmc::maxcut_recover(coupling(2, {{0, 1, 2}}), p), std::invalid_argument);
  CHECK_THROWS_AS(mmc::maxcut_recover(coupling(17, {}), p), mmc::refused_error);
}

TEST_CASE("partition-function sign in the negative regime") {
  IsingParams p;
  p.m = 3;
  p.d = 1;

  const auto one_edge = mmc::sign_regime(coupling(2, {{0, 1, 1}}), p);
  CHECK(one_edge.z == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(one_edge.sign == 1);

  const auto free4 = mmc::sign_regime(coupling(4, {}), p);
  CHECK(free4.z == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(free4.sign == 1);

  IsingParams pos;
  pos.m = 5;
  pos.d = 2;  // y > 0
  CHECK_THROWS_AS(mmc::sign_regime(coupling(2, {{0, 1, 1}}), pos), std::invalid_argument);
  IsingParams unit;
  unit.m = 3;
  unit.d = 3;  // y = 1
  CHECK_THROWS_AS(mmc::sign_regime(coupling(2, {{0, 1, 1}}), unit), std::invalid_argument);
  CHECK_THROWS_AS(mmc::sign_regime(coupling(2, {{0, 1, 2}}), p), std::invalid_argument);
  CHECK_THROWS_AS(mmc::sign_regime(coupling(25, {}), p), mmc::refused_error);

  // Exact rational arithmetic fixes the sign at y = -1/2 (m = 3 and the
  // other levels where 2d/m hits a third); double precision must agree.
  std::mt19937 rng(0x5167a1b2);
  std::uniform_int_distribution<int> size(2, 10);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = size(rng);
    CouplingMatrix j = coupling(n, {});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) j.j[a][b] = j.j[b][a] = coin(rng);
    IsingParams q;
    q.m = (trial % 2 == 0) ? 3 : 9;
    q.d = (q.m == 3) ? 1 : 6;
    const auto out = mmc::sign_regime(j, q);
    const Rational exact = naive_z_exact(j, Rational(-1, 2));
    const int want = exact.is_zero() ? 0 : (exact.num() > 0 ? 1 : -1);
    CHECK(out.sign == want);
    CHECK(std::abs(out.z - exact.to_double()) < 1e-6);
  }

  // A negative regime with irrational y falls back to the float sign.
  IsingParams five;
  five.m = 5;
  five.d = 1;  // y = cos(4 pi / 5) < 0
  const auto irr = mmc::sign_regime(coupling(2, {{0, 1, 1}}), five);
  CHECK(irr.z == doctest::Approx(2.0 + 2.0 * five.y()).epsilon(1e-9));
  CHECK(irr.sign == 1);
}
