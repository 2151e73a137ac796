#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "widthkit/errors.hpp"

namespace widthkit {
namespace cubical {

// All lattice geometry is stored in half-unit coordinates: a cell of the unit
// grid has edge length 2, and the half-grid shift that exchanges the two
// skeleta of interest becomes an integral translation.  Axis indices are
// 0-based throughout.
using Coord = std::int64_t;
using Vec = std::vector<Coord>;

struct InvalidLattice : Error {
  using Error::Error;
};
struct InvalidDegree : Error {
  using Error::Error;
};
struct InvalidCell : Error {
  using Error::Error;
};
struct UnknownCell : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Full-rank integer lattice given by n generators in half-units.  The
// constructor computes the column-style Hermite normal form (lower
// triangular, positive diagonal, off-diagonals reduced), which makes coset
// representatives canonical and independent of the generator presentation.
class LatticeBasis {
public:
  LatticeBasis(int n, std::vector<Vec> generators);

  int n() const { return n_; }
  const std::vector<Vec>& generators() const { return gens_; }
  // Column j of the Hermite normal form.
  const std::vector<Vec>& hnf_columns() const { return hnf_; }
  Coord abs_det() const { return det_; }

  // Exact membership test.
  bool contains(const Vec& v) const;

  // Unique representative of v + L inside the fundamental box
  // [0,H00) x ... x [0,H(n-1)(n-1)) of the Hermite form.  Idempotent and
  // constant on cosets.
  Vec reduce(Vec v) const;

private:
  int n_;
  std::vector<Vec> gens_;
  std::vector<Vec> hnf_;  // hnf_[j] is the j-th column
  Coord det_;
};

// Axis-aligned lattice cell: the product of unit intervals [anchor_d,
// anchor_d + 2) over the listed directions (half-units), degenerate in every
// other coordinate.  dirs is strictly increasing; empty for a vertex.
struct CubicalCell {
  Vec anchor;
  std::vector<int> dirs;

  bool operator==(const CubicalCell& o) const { return anchor == o.anchor && dirs == o.dirs; }
  bool operator<(const CubicalCell& o) const {
    if (anchor != o.anchor) return anchor < o.anchor;
    return dirs < o.dirs;
  }
};

// Translates the anchor into the lattice's fundamental box.
CubicalCell canonicalize(const CubicalCell& cell, const LatticeBasis& lattice);

// Stable text id, e.g. "2:1,1,0,0,0:0,1" (degree:anchor:dirs, "-" when the
// cell is a vertex).
std::string cell_id(const CubicalCell& cell);

// Signed dense integer matrix (row-major).
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// k-skeleton of the unit-grid cubulation of the torus R^n / L, where the
// vertex set is offset + (2Z)^n in half-units.  Cells are stored per degree
// in sorted canonical order.
class Complex {
public:
  static Complex build_skeleton(int n, int k, const LatticeBasis& lattice, const Vec& offset);

  int n() const { return n_; }
  int k() const { return k_; }
  const LatticeBasis& lattice() const { return lattice_; }
  const Vec& offset() const { return offset_; }

  std::size_t cell_count(int degree) const;
  const std::vector<CubicalCell>& cells(int degree) const;

  // Index of a cell among the canonical cells of its degree; the cell is
  // canonicalized first.  Throws UnknownCell when it is not part of the
  // complex.
  std::size_t index_of(const CubicalCell& cell) const;
  bool has_cell(const CubicalCell& cell) const;

  // Boundary operator C_degree -> C_(degree-1) with the orientation rule:
  // the face dropping the i-th listed direction carries sign (-1)^i on the
  // far side and -(-1)^i on the near side (0-based i).  Satisfies dd = 0.
  IntMatrix boundary_matrix(int degree) const;

private:
  Complex(int n, int k, LatticeBasis lattice, Vec offset);

  int n_, k_;
  LatticeBasis lattice_;
  Vec offset_;
  std::vector<std::vector<CubicalCell>> cells_;               // per degree
  std::vector<std::map<CubicalCell, std::size_t>> index_;     // per degree
};

// Plain text serialization; parse(serialize(c)) reproduces the complex
// byte-for-byte on re-serialization.  Parse errors carry 1-based line
// numbers.
void serialize(const Complex& complex, std::ostream& out);
Complex parse_complex(std::istream& in);

// The lattice (side * Z)^n, side given in original (not half-unit) units.
LatticeBasis cubic_lattice(int n, Coord side_original);

}  // namespace cubical
}  // namespace widthkit
