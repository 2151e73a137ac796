#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "widthkit/cubical.hpp"
#include "widthkit/homology.hpp"
#include "widthkit/schwarz.hpp"

using namespace widthkit;
using schwarz::Point5;
using schwarz::SkeletonId;

namespace {

// Independent l-infinity distance to the 2-skeleton: enumerate actual cells
// near the point (two free axes, integer anchors in a local box) and clamp
// into each cell's footprint.  No sorting shortcut.
double oracle_dist(const Point5& x, SkeletonId s) {
  const double shift = (s == SkeletonId::dual) ? 0.5 : 0.0;
  double best = std::numeric_limits<double>::infinity();
  std::array<std::int64_t, 5> base;
  for (int t = 0; t < 5; ++t) base[t] = static_cast<std::int64_t>(std::floor(x[t] - shift));
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      std::array<int, 5> off{};
      for (off[0] = -1; off[0] <= 1; ++off[0])
        for (off[1] = -1; off[1] <= 1; ++off[1])
          for (off[2] = -1; off[2] <= 1; ++off[2])
            for (off[3] = -1; off[3] <= 1; ++off[3])
              for (off[4] = -1; off[4] <= 1; ++off[4]) {
                double m = 0.0;
                for (int t = 0; t < 5; ++t) {
                  const double lo = static_cast<double>(base[t] + off[t]) + shift;
                  double d;
                  if (t == i || t == j) {
                    d = std::max({0.0, lo - x[t], x[t] - (lo + 1.0)});
                  } else {
                    d = std::fabs(x[t] - lo);
                  }
                  m = std::max(m, d);
                }
                best = std::min(best, m);
              }
    }
  }
  return best;
}

Point5 random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  Point5 x;
  for (auto& c : x) c = uni(rng);
  return x;
}

}  // namespace

TEST_CASE("distance formula agrees with the cell-enumeration oracle") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 2000; ++trial) {
    const Point5 x = random_point(rng);
    for (const auto s : {SkeletonId::primal, SkeletonId::dual}) {
      const double fast = schwarz::dist_to_skeleton(x, s);
      const double slow = oracle_dist(x, s);
      CHECK(std::fabs(fast - slow) <= 1e-12);
    }
  }
}

TEST_CASE("gap flips sign under the half-diagonal shift") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 2000; ++trial) {
    const Point5 x = random_point(rng);
    Point5 y = x;
    for (auto& c : y) c += 0.5;
    CHECK(std::fabs(schwarz::signed_gap(y) + schwarz::signed_gap(x)) <= 1e-12);
  }
}

TEST_CASE("known points on and off the hypersurface") {
  CHECK(schwarz::on_hypersurface({0.25, 0.25, 0.25, 0.25, 0.25}, 1e-12));
  CHECK(schwarz::on_hypersurface({0.25, 0.75, 1.25, 0.25, 7.75}, 1e-12));
  CHECK(!schwarz::on_hypersurface({0.0, 0.0, 0.0, 0.0, 0.0}, 1e-9));
  CHECK(schwarz::signed_gap({0.0, 0.0, 0.0, 0.0, 0.0}) == doctest::Approx(-0.5));
  CHECK(schwarz::signed_gap({0.5, 0.5, 0.5, 0.5, 0.5}) == doctest::Approx(0.5));
  const std::array<double, 5> d =
      schwarz::coord_distances({0.1, 0.9, 1.3, -0.2, 0.5}, SkeletonId::primal);
  CHECK(d[0] == doctest::Approx(0.1));
  CHECK(d[1] == doctest::Approx(0.1));
  CHECK(d[2] == doctest::Approx(0.3));
  CHECK(d[3] == doctest::Approx(0.2));
  CHECK(d[4] == doctest::Approx(0.5));
}

TEST_CASE("taming values and symmetry") {
  using schwarz::IVec5;
  CHECK(schwarz::taming_value_primal(IVec5{0, 0, 0, 0, 0}, 0, 1) == 0);
  CHECK(schwarz::taming_value_primal(IVec5{0, 1, 0, 0, 0}, 0, 1) == 1);
  CHECK(schwarz::taming_value_primal(IVec5{3, 1, 4, 1, 5}, 3, 4) == 0);
  CHECK(schwarz::taming_value_primal(IVec5{0, 0, 0, 1, 0}, 1, 2) == 1);
  CHECK(schwarz::taming_value_primal(IVec5{0, 0, 0, 1, 1}, 1, 2) == 0);
  CHECK_THROWS_AS(schwarz::taming_value_primal(IVec5{0, 0, 0, 0, 0}, 1, 1),
                  cubical::InvalidCell);

  // Invariance under doubling any of the first four axes and under the full
  // diagonal, straight from the formula.
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int64_t> coord(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    IVec5 v;
    for (auto& c : v) c = coord(rng);
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        const int base = schwarz::taming_value_primal(v, i, j);
        for (int axis = 0; axis < 4; ++axis) {
          IVec5 w = v;
          w[axis] += 2;
          CHECK(schwarz::taming_value_primal(w, i, j) == base);
        }
        IVec5 diag = v;
        for (auto& c : diag) c += 1;
        CHECK(schwarz::taming_value_primal(diag, i, j) == base);
      }
    }
  }
}

TEST_CASE("quotient skeleton shapes for the side-2 lattice") {
  const auto lat = cubical::cubic_lattice(5, 2);
  const auto z0 = schwarz::build_quotient_skeleton(SkeletonId::primal, lat);
  const auto z1 = schwarz::build_quotient_skeleton(SkeletonId::dual, lat);
  CHECK(z0->cell_count(0) == 32);
  CHECK(z0->cell_count(1) == 160);
  CHECK(z0->cell_count(2) == 320);
  CHECK(z1->cell_count(2) == 320);
  CHECK(schwarz::all_jailcells(SkeletonId::primal, *z0).size() == 320);
  CHECK(schwarz::opposite(SkeletonId::primal) == SkeletonId::dual);
}

TEST_CASE("jailcell chains are integral cycles with unit pairings") {
  const auto lat = cubical::cubic_lattice(5, 2);
  const auto z0 = schwarz::build_quotient_skeleton(SkeletonId::primal, lat);
  const auto psi0 = schwarz::taming_cochain(SkeletonId::primal, z0);
  const auto d2 = z0->boundary_matrix(2);

  const auto jails = schwarz::all_jailcells(SkeletonId::primal, *z0);
  int checked = 0;
  for (const auto& jc : jails) {
    if (checked >= 40) break;  // the full sweep lives in the suites
    ++checked;
    const auto chain = schwarz::jailcell_chain(jc);
    CHECK(chain.size() == 6);

    std::vector<std::int64_t> coeff(z0->cell_count(2), 0);
    for (const auto& [cell, c] : chain) coeff[z0->index_of(cell)] += c;
    for (std::size_t row = 0; row < d2.rows; ++row) {
      std::int64_t acc = 0;
      for (std::size_t col = 0; col < d2.cols; ++col) acc += d2.at(row, col) * coeff[col];
      CHECK(acc == 0);
    }

    const std::int64_t pairing = homology::evaluate_pairing(psi0, chain);
    CHECK((pairing == 1 || pairing == -1));
  }
}

TEST_CASE("pairing signs depend on the anchor but never the magnitude") {
  const auto lat = cubical::cubic_lattice(5, 2);
  const auto z0 = schwarz::build_quotient_skeleton(SkeletonId::primal, lat);
  const auto psi0 = schwarz::taming_cochain(SkeletonId::primal, z0);
  auto pairing_at = [&](cubical::Vec anchor, std::array<int, 3> axes) {
    schwarz::JailCell jc{std::move(anchor), axes, SkeletonId::primal};
    return homology::evaluate_pairing(psi0, schwarz::jailcell_chain(jc));
  };
  CHECK(pairing_at({0, 0, 0, 0, 0}, {0, 1, 2}) == 1);
  CHECK(pairing_at({0, 0, 0, 0, 2}, {0, 1, 2}) == -1);
  CHECK(pairing_at({0, 0, 0, 0, 0}, {2, 3, 4}) == 1);
  CHECK(pairing_at({0, 0, 0, 0, 2}, {2, 3, 4}) == -1);
}

TEST_CASE("cochain invariance and pullback") {
  const auto lat = cubical::cubic_lattice(5, 2);
  const auto z0 = schwarz::build_quotient_skeleton(SkeletonId::primal, lat);
  const auto z1 = schwarz::build_quotient_skeleton(SkeletonId::dual, lat);
  const auto psi0 = schwarz::taming_cochain(SkeletonId::primal, z0);
  const auto psi1 = schwarz::taming_cochain(SkeletonId::dual, z1);

  CHECK(schwarz::verify_translation_invariance(psi0).ok());
  CHECK(schwarz::verify_translation_invariance(psi1).ok());
  CHECK(schwarz::dual_shift_pullback(psi0, z1) == psi1);
  CHECK(schwarz::dual_shift_pullback(psi1, z0) == psi0);
}

TEST_CASE("ruling spheres: pairing, retraction, samples") {
  const auto lat = cubical::cubic_lattice(5, 2);
  const auto z0 = schwarz::build_quotient_skeleton(SkeletonId::primal, lat);
  const auto z1 = schwarz::build_quotient_skeleton(SkeletonId::dual, lat);
  const auto psi1 = schwarz::taming_cochain(SkeletonId::dual, z1);

  int plus = 0, minus = 0;
  for (std::size_t idx = 0; idx < 25; ++idx) {
    const auto& cell = z0->cells(2)[idx * 7 % z0->cell_count(2)];
    const auto sphere = schwarz::make_ruling_sphere(cell, SkeletonId::primal);
    const auto v = schwarz::taming_pairing(sphere, psi1);
    CHECK((v == 1 || v == -1));
    (v == 1 ? plus : minus) += 1;
    CHECK(schwarz::host_retraction_coefficient(sphere) == 0);
    for (const auto& p : schwarz::sample_sphere_points(sphere, 2)) {
      CHECK(schwarz::on_hypersurface(p, 1e-12));
    }
  }
  CHECK(plus > 0);
  CHECK(minus > 0);

  auto sphere = schwarz::make_ruling_sphere(z0->cells(2)[0], SkeletonId::primal);
  sphere.center[0] += 1;
  CHECK_THROWS_AS(schwarz::dual_jailcell(sphere), schwarz::NotCentered);
}

TEST_CASE("sample grid size matches the face subdivision") {
  const auto lat = cubical::cubic_lattice(5, 2);
  const auto z0 = schwarz::build_quotient_skeleton(SkeletonId::primal, lat);
  const auto sphere = schwarz::make_ruling_sphere(z0->cells(2)[0], SkeletonId::primal);
  CHECK(schwarz::sample_sphere_points(sphere, 2).size() == 6 * 9);
  CHECK(schwarz::sample_sphere_points(sphere, 1).size() == 6 * 4);
}

TEST_CASE("line crossing parity") {
  SUBCASE("axis period inside a handle never crosses") {
    schwarz::ParityOptions opt;
    CHECK(schwarz::crossing_parity_along({0.1, 0.2, 0.3, 0.4, 0.45},
                                         {1.0, 0.0, 0.0, 0.0, 0.0}, opt) == 0);
  }
  SUBCASE("skew direction crosses oddly from fixed generic starts") {
    // Full-mantissa starts: short decimals land on quarter-grid coincidences
    // at sampled parameters and are flagged as non-generic.
    CHECK(schwarz::line_crossing_parity({0.112398476, 0.233517829, 0.374092334, 0.415287602,
                                         0.071938457},
                                        1, 2000, 40) == 1);
    CHECK(schwarz::line_crossing_parity({0.818273645, 0.639201837, 0.172830194, 0.928371625,
                                         0.551029384},
                                        1, 2000, 40) == 1);
    CHECK(schwarz::line_crossing_parity({0.052918374, 0.951827364, 0.450192837, 0.553028471,
                                         0.257190283},
                                        2, 2000, 40) == 1);
  }
  SUBCASE("starting on the hypersurface is flagged, retries recover") {
    const Point5 on_surface{0.25, 0.25, 0.25, 0.25, 0.25};
    CHECK_THROWS_AS(schwarz::line_crossing_parity(on_surface, 1, 2000, 40),
                    schwarz::NonGenericLine);
    CHECK(schwarz::line_crossing_parity_retrying(on_surface, 1, 2000, 40, 5) == 1);
  }
}

TEST_CASE("sphere diameter estimate tightens under refinement") {
  const double d8 = schwarz::ruling_sphere_diameter(8);
  const double d16 = schwarz::ruling_sphere_diameter(16);
  CHECK(d8 > 1.0);
  CHECK(d8 < 1.6);
  CHECK(d16 <= d8 + 1e-12);
}
