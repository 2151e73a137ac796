#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "widthkit/errors.hpp"
#include "widthkit/gf2.hpp"

namespace widthkit {
namespace charclass {

struct DegreeMismatch : Error {
  using Error::Error;
};
// Signals that no class cups with the Euler class onto the top class, which
// is exactly the situation where the fibration map is nonzero on mod-2
// homology and the width bound comes from the direct branch instead.
struct FStarNonzero : Error {
  using Error::Error;
};
struct NoCertificate : Error {
  using Error::Error;
};
struct RingParseError : Error {
  using Error::Error;
};
struct RingValidationError : Error {
  using Error::Error;
};

// Homogeneous mod-2 cohomology class: a degree plus coefficients over the
// degree's basis.
struct RingElement {
  int degree = 0;
  gf2::BitVec coeffs;

  bool is_zero() const { return !coeffs.any(); }
  bool operator==(const RingElement& o) const {
    return degree == o.degree && coeffs == o.coeffs;
  }
};

// Sum in the graded ring; both sides must live in the same degree.
RingElement operator+(const RingElement& a, const RingElement& b);

// Finite presentation of a mod-2 cohomology ring of a closed d-manifold:
// graded bases with labels, cup-product structure constants, the two
// low-degree Stiefel-Whitney classes, and the top-class functional.
// Construction validates symmetry, associativity on all basis triples, and
// non-degeneracy of the duality pairing in every degree.
class CohomRing {
 public:
  using CupTables = std::map<std::pair<int, int>, std::vector<gf2::BitVec>>;

  CohomRing(int d, std::vector<std::vector<std::string>> labels, CupTables tables,
            gf2::BitVec w1, gf2::BitVec w2);

  static CohomRing parse(std::istream& in);
  static CohomRing parse_text(const std::string& text);
  void serialize(std::ostream& out) const;
  std::string to_text() const;

  int dimension() const { return d_; }
  std::size_t dim(int p) const {
    return (p < 0 || p > d_) ? 0 : labels_[static_cast<std::size_t>(p)].size();
  }
  const std::string& label(int p, std::size_t i) const;

  RingElement zero(int p) const;
  RingElement basis(int p, std::size_t i) const;

  RingElement cup(const RingElement& a, const RingElement& b) const;

  // Coefficient of the fundamental class; the argument must be top-degree.
  bool top_coefficient(const RingElement& a) const;

  RingElement w1() const;
  RingElement w2() const;

  bool operator==(const CohomRing& o) const;

 private:
  // Structure constants of basis(p,i) cup basis(q,j), stored for p <= q with
  // the full (i, j) grid (mirrored for p == q).
  const gf2::BitVec& table_entry(int p, std::size_t i, int q, std::size_t j) const;
  void validate() const;

  int d_ = 0;
  std::vector<std::vector<std::string>> labels_;
  CupTables tables_;
  gf2::BitVec w1_;
  gf2::BitVec w2_;
};

// Second Wu class w2 + w1 cup w1.
RingElement wu_class(const CohomRing& ring);

// A closed manifold carries a Pin-minus structure exactly when the second Wu
// class vanishes.
bool is_pin_minus(const CohomRing& ring);

// Second Steenrod square on codimension-2 classes, evaluated through the Wu
// relation: Sq2(x) = v2 cup x for x of degree d-2.
RingElement sq2_codim2(const CohomRing& ring, const RingElement& x);

// Principal circle bundle datum over the ring's manifold: the mod-2 Euler
// class, the fiber radius of the adapted metric, and a free-form tag for the
// connection parameters.
struct CircleBundleData {
  RingElement euler2;
  double fiber_radius = 1.0;
  std::string connection;
};

// A degree-(d-2) class cupping with the Euler class onto the top class.
// Deterministic: free coordinates of the linear solve are zero.  Throws
// FStarNonzero when no such class exists (in particular when the Euler class
// is zero).
RingElement find_xi(const CohomRing& ring, const CircleBundleData& bundle);

// Mod-2 Hopf-invariant obstruction for the bundle: whether
// (v2 + e2) cup xi is the top class.  For rings with v2 = 0 this is just
// e2 cup xi != 0.
bool hopf_obstruction(const CohomRing& ring, const CircleBundleData& bundle,
                      const RingElement& xi);

struct WidthReport {
  double hypersphericity = 0.0;
  double convexity_radius = 0.0;
  double bound_codim1 = 0.0;  // lower bound for the (d-1)-width
  double bound_codim2 = 0.0;  // lower bound for the (d-2)-width
  std::string branch;         // which hypothesis certified the bound
};

// Width lower bound HS/2 in the requested codimension.  Codimension 2 needs
// a certificate: either the fibration map is nonzero on mod-2 homology, or
// the Hopf obstruction is nonzero; with neither, throws NoCertificate.
WidthReport width_lower_bound(double hs, int codim, bool fstar_nonzero, bool hopf_nonzero);

// Ring of a product manifold (Kuenneth over GF(2)), with Whitney-sum w1, w2.
CohomRing tensor_product(const CohomRing& a, const CohomRing& b);

// Rewrites the presentation in a new basis: change[p] rows express the new
// degree-p basis vectors in the old basis.  Every change[p] must be
// invertible.
CohomRing apply_basis_change(const CohomRing& ring, const std::vector<gf2::BitMatrix>& change);

}  // namespace charclass
}  // namespace widthkit
