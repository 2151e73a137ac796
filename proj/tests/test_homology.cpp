#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <sstream>
#include <vector>

#include "widthkit/cubical.hpp"
#include "widthkit/gf2.hpp"
#include "widthkit/homology.hpp"

using namespace widthkit;
using cubical::CubicalCell;
using cubical::IntMatrix;
using cubical::Vec;

namespace {

cubical::Complex torus(int n, int side, int k) {
  return cubical::Complex::build_skeleton(n, k, cubical::cubic_lattice(n, side), Vec(n, 0));
}

}  // namespace

TEST_CASE("betti numbers of standard tori") {
  const auto circle = torus(1, 2, 1);
  CHECK(homology::betti_gf2(circle, 0) == 1);
  CHECK(homology::betti_gf2(circle, 1) == 1);

  const auto t2 = torus(2, 1, 2);
  CHECK(homology::betti_gf2(t2, 0) == 1);
  CHECK(homology::betti_gf2(t2, 1) == 2);
  CHECK(homology::betti_gf2(t2, 2) == 1);

  const auto t3 = torus(3, 1, 3);
  CHECK(homology::betti_gf2(t3, 0) == 1);
  CHECK(homology::betti_gf2(t3, 1) == 3);
  CHECK(homology::betti_gf2(t3, 2) == 3);
  CHECK(homology::betti_gf2(t3, 3) == 1);

  // Betti numbers are invariant under subdividing the torus.
  const auto t2_big = torus(2, 3, 2);
  CHECK(homology::betti_gf2(t2_big, 0) == 1);
  CHECK(homology::betti_gf2(t2_big, 1) == 2);
  CHECK(homology::betti_gf2(t2_big, 2) == 1);
}

TEST_CASE("chain complex construction rejects nonzero compositions") {
  gf2::BitMatrix d1(1, 1);
  d1.set(0, 0, true);
  gf2::BitMatrix d2(1, 1);
  d2.set(0, 0, true);
  CHECK_THROWS_AS(homology::ChainComplexGF2({1, 1, 1}, {d1, d2}), Error);
}

TEST_CASE("rank routes agree on boundary matrices") {
  const auto t3 = torus(3, 2, 3);
  const auto cc = homology::ChainComplexGF2::from_complex(t3);
  for (int deg = 1; deg <= 3; ++deg) {
    gf2::BitMatrix m = cc.boundary(deg);
    CHECK(gf2::rank_forward(m) == gf2::rank_reverse(m));
  }
}

TEST_CASE("smith normal form of stock matrices") {
  SUBCASE("identity") {
    IntMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = 1;
    const auto s = homology::smith_normal_form(id3);
    CHECK(s.factors == std::vector<std::int64_t>{1, 1, 1});
    CHECK(s.rank == 3);
  }
  SUBCASE("already diagonal with divisibility") {
    IntMatrix d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 4;
    CHECK(homology::smith_normal_form(d).factors == std::vector<std::int64_t>{2, 4});
  }
  SUBCASE("diagonal without divisibility gets repaired") {
    IntMatrix d(2, 2);
    d.at(0, 0) = 2;
    d.at(1, 1) = 3;
    CHECK(homology::smith_normal_form(d).factors == std::vector<std::int64_t>{1, 6});
  }
  SUBCASE("dense example with negative determinant") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    // gcd 2, |det| 8.
    CHECK(homology::smith_normal_form(m).factors == std::vector<std::int64_t>{2, 4});
  }
  SUBCASE("zero matrix") {
    const auto s = homology::smith_normal_form(IntMatrix(3, 2));
    CHECK(s.factors.empty());
    CHECK(s.rank == 0);
  }
  SUBCASE("negative entries give positive factors") {
    IntMatrix m(1, 1);
    m.at(0, 0) = -5;
    CHECK(homology::smith_normal_form(m).factors == std::vector<std::int64_t>{5});
  }
  SUBCASE("circle boundary") {
    const auto circle = torus(1, 3, 1);
    const auto s = homology::smith_normal_form(circle.boundary_matrix(1));
    CHECK(s.rank == 2);  // 3 vertices, one component
    for (const auto f : s.factors) CHECK(f == 1);
  }
}

TEST_CASE("smith normal form reports overflow and size limits") {
  IntMatrix big(2, 2);
  big.at(0, 0) = std::int64_t(1) << 62;
  big.at(0, 1) = 1;
  big.at(1, 0) = 1;
  big.at(1, 1) = std::int64_t(1) << 62;
  CHECK_THROWS_AS(homology::smith_normal_form(big), ArithmeticOverflow);
  CHECK_THROWS_AS(homology::smith_normal_form(IntMatrix(513, 1)), homology::MatrixTooLarge);
}

TEST_CASE("cochain evaluation and pairing") {
  const auto host = std::make_shared<const cubical::Complex>(torus(2, 2, 2));
  homology::Cochain2 psi(host, homology::CoeffMode::integer);
  const auto& squares = host->cells(2);
  REQUIRE(squares.size() == 4);

  SUBCASE("incomplete cochains refuse to evaluate") {
    CHECK(!psi.complete());
    CHECK_THROWS_AS(psi.value(squares[0]), homology::IncompleteCochain);
    CHECK_THROWS_AS(homology::evaluate_pairing(psi, {{squares[0], 1}}),
                    homology::IncompleteCochain);
  }

  SUBCASE("integer pairing is linear") {
    for (std::size_t i = 0; i < squares.size(); ++i)
      psi.set(squares[i], static_cast<std::int64_t>(i) + 1);
    CHECK(psi.complete());
    const homology::Chain2 chain{{squares[0], 2}, {squares[3], -1}};
    CHECK(homology::evaluate_pairing(psi, chain) == 2 * 1 - 4);
  }

  SUBCASE("mod2 pairing reduces") {
    homology::Cochain2 chi(host, homology::CoeffMode::mod2);
    for (const auto& c : squares) chi.set(c, 1);
    CHECK(homology::evaluate_pairing(chi, {{squares[0], 1}, {squares[1], 1}}) == 0);
    CHECK(homology::evaluate_pairing(chi, {{squares[0], 3}}) == 1);
  }

  SUBCASE("cells outside the host are rejected") {
    psi.set(squares[0], 1);
    CHECK_THROWS_AS(homology::evaluate_pairing(psi, {{CubicalCell{Vec{1, 0}, {0, 1}}, 1}}),
                    cubical::UnknownCell);
  }

  SUBCASE("values translate across lattice shifts") {
    for (std::size_t i = 0; i < squares.size(); ++i)
      psi.set(squares[i], static_cast<std::int64_t>(i));
    CubicalCell moved = squares[1];
    moved.anchor[0] += 4;  // one full lattice period
    CHECK(psi.value(moved) == psi.value(squares[1]));
  }
}

TEST_CASE("is_cocycle sees the three dimensional structure") {
  // Vacuous on a 2-skeleton.
  const auto skel = std::make_shared<const cubical::Complex>(torus(3, 2, 2));
  homology::Cochain2 flat(skel, homology::CoeffMode::integer);
  for (const auto& c : skel->cells(2)) flat.set(c, 1);
  CHECK(homology::is_cocycle(flat));

  // The indicator of one square on the full complex has nonzero coboundary
  // on the adjacent 3-cells.
  const auto full = std::make_shared<const cubical::Complex>(torus(3, 2, 3));
  homology::Cochain2 indicator(full, homology::CoeffMode::integer);
  for (const auto& c : full->cells(2)) indicator.set(c, 0);
  indicator.set(full->cells(2).front(), 1);
  CHECK(!homology::is_cocycle(indicator));

  // Constant cochains are closed: every cube has equal far and near faces.
  homology::Cochain2 constant(full, homology::CoeffMode::integer);
  for (const auto& c : full->cells(2)) constant.set(c, 7);
  CHECK(homology::is_cocycle(constant));
}

TEST_CASE("cochain serialization round-trips") {
  const auto host = std::make_shared<const cubical::Complex>(torus(2, 2, 2));
  homology::Cochain2 psi(host, homology::CoeffMode::integer);
  const auto& squares = host->cells(2);
  for (std::size_t i = 0; i < squares.size(); ++i)
    psi.set(squares[i], static_cast<std::int64_t>(3 - i));
  std::ostringstream os;
  homology::save_cochain(psi, os);
  std::istringstream is(os.str());
  const auto back = homology::load_cochain(is, host);
  CHECK(back == psi);
}

TEST_CASE("matrix serialization round-trips") {
  IntMatrix m(2, 3);
  m.at(0, 0) = -7;
  m.at(1, 2) = 11;
  std::ostringstream os;
  homology::save_int_matrix(m, os);
  std::istringstream is(os.str());
  CHECK(homology::load_int_matrix(is) == m);

  gf2::BitMatrix b(3, 2);
  b.set(0, 1, true);
  b.set(2, 0, true);
  std::ostringstream os2;
  homology::save_gf2_matrix(b, os2);
  std::istringstream is2(os2.str());
  CHECK(homology::load_gf2_matrix(is2) == b);
}
