#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <utility>
#include <vector>

#include "widthkit/cubical.hpp"
#include "widthkit/errors.hpp"
#include "widthkit/gf2.hpp"

namespace widthkit {
namespace homology {

struct IncompleteCochain : Error {
  using Error::Error;
};
struct MatrixTooLarge : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Boundary matrices of a cubical complex reduced mod 2, validated so that
// consecutive boundaries compose to zero.
class ChainComplexGF2 {
public:
  ChainComplexGF2(std::vector<std::size_t> dims, std::vector<gf2::BitMatrix> boundaries);
  static ChainComplexGF2 from_complex(const cubical::Complex& cx);

  int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int degree) const;
  // Boundary C_degree -> C_(degree-1); valid for 1 <= degree <= top.
  const gf2::BitMatrix& boundary(int degree) const;

private:
  std::vector<std::size_t> dims_;
  std::vector<gf2::BitMatrix> boundaries_;  // boundaries_[j] : C_(j+1) -> C_j
};

// Mod-2 Betti number dim ker d_degree - rank d_(degree+1).
std::size_t betti(const ChainComplexGF2& cc, int degree);
std::size_t betti_gf2(const cubical::Complex& cx, int degree);

// Invariant factors of an integer matrix (nonzero, each dividing the next).
struct SmithResult {
  std::vector<std::int64_t> factors;
  std::size_t rank = 0;
};

// Exact integer Smith normal form.  Refuses inputs beyond 512x512 and
// reports overflow instead of wrapping.
SmithResult smith_normal_form(const cubical::IntMatrix& m);

enum class CoeffMode { integer, mod2 };

// Integer 2-chain: cells with multiplicities.
using Chain2 = std::vector<std::pair<cubical::CubicalCell, std::int64_t>>;

// Cochain on the 2-cells of a fixed host complex.  Values may be assigned
// partially; evaluation demands every referenced cell be present.
class Cochain2 {
public:
  Cochain2(std::shared_ptr<const cubical::Complex> host, CoeffMode mode);

  const cubical::Complex& host() const { return *host_; }
  std::shared_ptr<const cubical::Complex> host_ptr() const { return host_; }
  CoeffMode mode() const { return mode_; }

  void set(const cubical::CubicalCell& cell, std::int64_t value);
  bool has(const cubical::CubicalCell& cell) const;
  // Throws IncompleteCochain when the value was never assigned.
  std::int64_t value(const cubical::CubicalCell& cell) const;
  std::int64_t value_at(std::size_t index) const;
  bool complete() const;

  bool operator==(const Cochain2& o) const { return values_ == o.values_ && present_ == o.present_ && mode_ == o.mode_; }

private:
  std::shared_ptr<const cubical::Complex> host_;
  CoeffMode mode_;
  std::vector<std::int64_t> values_;
  std::vector<bool> present_;
};

// Z-linear pairing <psi, chain>; in mod-2 mode the result is reduced to
// {0, 1}.  Cells outside the host complex raise UnknownCell.
std::int64_t evaluate_pairing(const Cochain2& psi, const Chain2& chain);

// True when the coboundary of psi vanishes on every 3-cell of the host
// complex (vacuously true when the skeleton stops below degree 3).
bool is_cocycle(const Cochain2& psi);

// Cochain text format: a COCHAIN header plus one "PSI <cell-id> <value>"
// line per assigned 2-cell.
void save_cochain(const Cochain2& psi, std::ostream& out);
Cochain2 load_cochain(std::istream& in, std::shared_ptr<const cubical::Complex> host);

// Matrix text format: "<rows>\t<cols>" then tab-separated rows.
void save_int_matrix(const cubical::IntMatrix& m, std::ostream& out);
cubical::IntMatrix load_int_matrix(std::istream& in);
void save_gf2_matrix(const gf2::BitMatrix& m, std::ostream& out);
gf2::BitMatrix load_gf2_matrix(std::istream& in);

}  // namespace homology
}  // namespace widthkit
