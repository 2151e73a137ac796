#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>

#include "widthkit/cubical.hpp"

using namespace widthkit;
using cubical::CubicalCell;
using cubical::LatticeBasis;
using cubical::Vec;

TEST_CASE("cubic lattice hermite form and determinant") {
  const auto lat = cubical::cubic_lattice(2, 1);
  CHECK(lat.n() == 2);
  CHECK(lat.abs_det() == 4);  // side 1 = 2 half-units per axis
  CHECK(lat.hnf_columns()[0] == Vec{2, 0});
  CHECK(lat.hnf_columns()[1] == Vec{0, 2});
  CHECK(lat.contains(Vec{2, 0}));
  CHECK(lat.contains(Vec{-4, 6}));
  CHECK(!lat.contains(Vec{1, 0}));
}

TEST_CASE("hermite form is presentation independent") {
  // Same lattice, messy generators.
  const LatticeBasis a(2, {Vec{2, 0}, Vec{0, 2}});
  const LatticeBasis b(2, {Vec{6, 2}, Vec{4, 2}});  // differences generate the same group
  CHECK(a.hnf_columns() == b.hnf_columns());
  CHECK(a.abs_det() == b.abs_det());
}

TEST_CASE("reduce is idempotent and constant on cosets") {
  const LatticeBasis lat(3, {Vec{4, 0, 0}, Vec{0, 4, 0}, Vec{2, 2, 2}});
  const Vec v{7, -3, 5};
  const Vec r = lat.reduce(v);
  CHECK(lat.reduce(r) == r);
  for (const Vec& g : lat.generators()) {
    Vec w = v;
    for (std::size_t t = 0; t < w.size(); ++t) w[t] += g[t];
    CHECK(lat.reduce(w) == r);
  }
  Vec diff(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) diff[t] = v[t] - r[t];
  CHECK(lat.contains(diff));
}

TEST_CASE("degenerate generator sets are rejected") {
  CHECK_THROWS_AS(LatticeBasis(2, {Vec{2, 0}}), cubical::InvalidLattice);
  CHECK_THROWS_AS(LatticeBasis(2, {Vec{2, 0}, Vec{4, 0}}), cubical::InvalidLattice);
  CHECK_THROWS_AS(LatticeBasis(0, {}), cubical::InvalidLattice);
}

TEST_CASE("cell ids and canonicalization") {
  const auto lat = cubical::cubic_lattice(2, 2);  // diag(4) in half-units
  const CubicalCell square{Vec{0, 0}, {0, 1}};
  CHECK(cubical::cell_id(square) == "2:0,0:0,1");
  const CubicalCell vertex{Vec{2, 0}, {}};
  CHECK(cubical::cell_id(vertex) == "0:2,0:-");

  const CubicalCell moved{Vec{4, -8}, {0, 1}};
  CHECK(cubical::canonicalize(moved, lat) == cubical::canonicalize(square, lat));
  const CubicalCell canon = cubical::canonicalize(moved, lat);
  CHECK(cubical::canonicalize(canon, lat) == canon);
}

TEST_CASE("invalid cells are rejected") {
  const auto lat = cubical::cubic_lattice(2, 2);
  CHECK_THROWS_AS(cubical::canonicalize(CubicalCell{Vec{0}, {}}, lat), cubical::InvalidCell);
  CHECK_THROWS_AS(cubical::canonicalize(CubicalCell{Vec{0, 0}, {1, 0}}, lat),
                  cubical::InvalidCell);
  CHECK_THROWS_AS(cubical::canonicalize(CubicalCell{Vec{0, 0}, {0, 2}}, lat),
                  cubical::InvalidCell);
}

TEST_CASE("one-vertex torus cell counts") {
  const auto cx =
      cubical::Complex::build_skeleton(2, 2, cubical::cubic_lattice(2, 1), Vec{0, 0});
  CHECK(cx.cell_count(0) == 1);
  CHECK(cx.cell_count(1) == 2);
  CHECK(cx.cell_count(2) == 1);
  // Far and near faces coincide in the quotient, so the boundary cancels.
  const auto d2 = cx.boundary_matrix(2);
  for (std::size_t i = 0; i < d2.rows; ++i) {
    for (std::size_t j = 0; j < d2.cols; ++j) CHECK(d2.at(i, j) == 0);
  }
}

TEST_CASE("boundary orientation signs on a 2x2 torus") {
  const auto cx =
      cubical::Complex::build_skeleton(2, 2, cubical::cubic_lattice(2, 2), Vec{0, 0});
  CHECK(cx.cell_count(0) == 4);
  CHECK(cx.cell_count(1) == 8);
  CHECK(cx.cell_count(2) == 4);

  const auto d2 = cx.boundary_matrix(2);
  const std::size_t col = cx.index_of(CubicalCell{Vec{0, 0}, {0, 1}});
  // Dropping the 0th listed direction: far face +1, near face -1.
  CHECK(d2.at(cx.index_of(CubicalCell{Vec{2, 0}, {1}}), col) == 1);
  CHECK(d2.at(cx.index_of(CubicalCell{Vec{0, 0}, {1}}), col) == -1);
  // Dropping the 1st listed direction: far face -1, near face +1.
  CHECK(d2.at(cx.index_of(CubicalCell{Vec{0, 2}, {0}}), col) == -1);
  CHECK(d2.at(cx.index_of(CubicalCell{Vec{0, 0}, {0}}), col) == 1);

  // Every other edge stays clear of this square's boundary.
  int nonzero = 0;
  for (std::size_t i = 0; i < d2.rows; ++i) nonzero += d2.at(i, col) != 0;
  CHECK(nonzero == 4);
}

TEST_CASE("boundaries compose to zero on a 3-torus") {
  const auto cx =
      cubical::Complex::build_skeleton(3, 3, cubical::cubic_lattice(3, 2), Vec{0, 0, 0});
  const auto d2 = cx.boundary_matrix(2);
  const auto d3 = cx.boundary_matrix(3);
  REQUIRE(d2.cols == d3.rows);
  for (std::size_t i = 0; i < d2.rows; ++i) {
    for (std::size_t j = 0; j < d3.cols; ++j) {
      std::int64_t acc = 0;
      for (std::size_t t = 0; t < d2.cols; ++t) acc += d2.at(i, t) * d3.at(t, j);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("index_of rejects cells outside the complex") {
  const auto cx =
      cubical::Complex::build_skeleton(2, 2, cubical::cubic_lattice(2, 2), Vec{0, 0});
  CHECK_THROWS_AS(cx.index_of(CubicalCell{Vec{1, 0}, {}}), cubical::UnknownCell);
  CHECK(cx.has_cell(CubicalCell{Vec{2, 2}, {}}));
  CHECK(!cx.has_cell(CubicalCell{Vec{1, 1}, {}}));
}

TEST_CASE("skeleta reject lattices that move the vertex grid") {
  CHECK_THROWS_AS(cubical::Complex::build_skeleton(
                      2, 1, LatticeBasis(2, {Vec{1, 0}, Vec{0, 4}}), Vec{0, 0}),
                  cubical::InvalidLattice);
}

TEST_CASE("complex serialization round-trips byte for byte") {
  const auto cx =
      cubical::Complex::build_skeleton(2, 2, cubical::cubic_lattice(2, 2), Vec{0, 0});
  std::ostringstream first;
  cubical::serialize(cx, first);
  std::istringstream in(first.str());
  const auto parsed = cubical::parse_complex(in);
  std::ostringstream second;
  cubical::serialize(parsed, second);
  CHECK(first.str() == second.str());
  CHECK(parsed.cell_count(2) == cx.cell_count(2));
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream empty("");
  CHECK_THROWS_WITH_AS(cubical::parse_complex(empty), doctest::Contains("line 1"),
                       cubical::ParseError);

  std::istringstream bad_header("COMPLEX n=x k=2\n");
  CHECK_THROWS_AS(cubical::parse_complex(bad_header), cubical::ParseError);

  const auto cx =
      cubical::Complex::build_skeleton(2, 1, cubical::cubic_lattice(2, 1), Vec{0, 0});
  std::ostringstream good;
  cubical::serialize(cx, good);
  std::string text = good.str();
  text.insert(text.find("OFFSET"), "GARBAGE\n");
  std::istringstream corrupted(text);
  try {
    cubical::parse_complex(corrupted);
    CHECK(false);
  } catch (const cubical::ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}
