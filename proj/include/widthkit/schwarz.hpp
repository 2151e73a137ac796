#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "widthkit/cubical.hpp"
#include "widthkit/errors.hpp"
#include "widthkit/homology.hpp"

namespace widthkit {
namespace schwarz {

// Everything here lives in R^5.  The two 2-skeleta of interest are the unit
// grid skeleton (vertices at integer points) and its copy shifted by half
// the all-ones vector; the periodic hypersurface equidistant from the two is
// the level set studied by the rest of the module.
inline constexpr int kDim = 5;

using Point5 = std::array<double, 5>;
using IVec5 = std::array<std::int64_t, 5>;

struct NotCentered : Error {
  using Error::Error;
};
struct NonGenericLine : Error {
  using Error::Error;
};

enum class SkeletonId { primal = 0, dual = 1 };
SkeletonId opposite(SkeletonId s);

// --- metric side -----------------------------------------------------------

// Per-coordinate distance to the skeleton's vertex grid (integers for the
// primal skeleton, half-integers for the dual), unsorted.
std::array<double, kDim> coord_distances(const Point5& x, SkeletonId s);

// l-infinity distance from x to the 2-skeleton.  A point reaches the
// skeleton by snapping its 3 closest-to-grid coordinates, so this is the
// third-smallest coordinate distance.
double dist_to_skeleton(const Point5& x, SkeletonId s);

// Signed gap h(x) = dist(x, primal) - dist(x, dual); the hypersurface is its
// zero set, and shifting by half the all-ones vector negates it.
double signed_gap(const Point5& x);

bool on_hypersurface(const Point5& x, double tol);

// --- lattices and quotient complexes ---------------------------------------

// Half-unit vector (1,1,...,1): the shift exchanging the two skeleta.
cubical::Vec half_diagonal();

// (2Z)^4 + <all-ones>: the group under which the taming cochain below is
// invariant (half-unit generators).
cubical::LatticeBasis taming_symmetry_lattice();

// (2nZ)^4 + <half-diagonal + 2n e5>: the quotient family indexed by n >= 1.
// Does not preserve either skeleton alone; used for the line-parity count.
cubical::LatticeBasis skew_quotient_lattice(int n);

// 2-skeleton of the chosen grid modulo a vertex-preserving lattice.
std::shared_ptr<const cubical::Complex> build_quotient_skeleton(SkeletonId s,
                                                                const cubical::LatticeBasis& lattice);

// --- taming cochain ---------------------------------------------------------

// Value on the primal 2-cell spanned from vertex v (original units) in the
// increasing axis pair (i, j), 0-based.  Cases, in order: j = 4 gives 0;
// (i, j) = (0, 1) gives v1+v2+v3+v4 mod 2; anything else gives v3+v4 mod 2.
int taming_value_primal(const IVec5& v, int i, int j);

// The cochain on a quotient 2-skeleton: primal cells take the formula value,
// dual cells take the value of their half-diagonal translate.
homology::Cochain2 taming_cochain(SkeletonId s, std::shared_ptr<const cubical::Complex> host);

// Pulls a cochain across the half-diagonal shift onto the opposite
// skeleton's complex.  Applying it twice returns the original values.
homology::Cochain2 dual_shift_pullback(const homology::Cochain2& psi,
                                       std::shared_ptr<const cubical::Complex> target);

struct InvarianceViolation {
  cubical::CubicalCell cell;
  cubical::Vec shift;
};
struct InvarianceReport {
  std::vector<InvarianceViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Compares psi against its translate by every generator of the taming
// symmetry lattice, over every 2-cell of the host quotient.
InvarianceReport verify_translation_invariance(const homology::Cochain2& psi);

// --- jailcells ---------------------------------------------------------------

// Boundary of a unit 3-cube spanned at a skeleton vertex along three axes.
// The cube itself is missing from the 2-skeleton, so its six faces form a
// genuine 2-cycle there.
struct JailCell {
  cubical::Vec anchor;        // half-units; vertex of the host skeleton
  std::array<int, 3> axes;    // strictly increasing, in [0, 5)
  SkeletonId host = SkeletonId::primal;
};

// The six oriented faces: for each cyclic rotation (a,b,c) of the axes, the
// cell at anchor+2e_c with coefficient +1 and the cell at the anchor with
// coefficient -1.
homology::Chain2 jailcell_chain(const JailCell& jc);

// One jailcell per (vertex, axis-triple) pair of the quotient complex.
std::vector<JailCell> all_jailcells(SkeletonId s, const cubical::Complex& quotient);

// --- ruling spheres -----------------------------------------------------------

// Polyhedral 2-sphere centered over a 2-cell of one skeleton: the boundary
// of the cube of radius 1/4 in the three normal axes.  Lies on the
// hypersurface exactly.
struct RulingSphere {
  cubical::CubicalCell host_cell;  // 2-cell of the host skeleton
  SkeletonId host = SkeletonId::primal;
  cubical::Vec center;             // half-units; must be the cell barycenter
};

RulingSphere make_ruling_sphere(const cubical::CubicalCell& host_cell, SkeletonId host);

// The jailcell of the opposite skeleton cut out by the sphere: axes are the
// three directions normal to the host cell, anchored half a unit below the
// center.  Throws NotCentered when the sphere's center is off-barycenter.
JailCell dual_jailcell(const RulingSphere& sphere);

// Pairing of the sphere's class against a cochain on the opposite skeleton,
// computed through the dual jailcell.  For the taming cochain the value is
// +1 or -1 (the sign depends on the anchor under the face orientation rule);
// what matters is that it is odd, so the class is nontrivial.
std::int64_t taming_pairing(const RulingSphere& sphere, const homology::Cochain2& psi_opposite);

// Net coefficient of the sphere's image in its own host cell under the
// handle retraction (projection to the host plane, doubled about the
// center).  The image is a point, so the signed-area count is exactly 0;
// computed combinatorially in exact integer arithmetic.
std::int64_t host_retraction_coefficient(const RulingSphere& sphere);

// Sample points on the sphere's six faces (a (m+1)^2 grid per face).
std::vector<Point5> sample_sphere_points(const RulingSphere& sphere, int m);

// --- line crossing parity -----------------------------------------------------

struct ParityOptions {
  int samples = 2000;       // >= 1000
  int refine_depth = 40;    // bisection confirmation depth per crossing
  double zero_tol = 1e-9;   // |h| below this at a sample flags non-genericity
};

// Parity of sign changes of the gap h along start + t*direction, t in [0,1].
// Throws NonGenericLine on a tangential contact.
int crossing_parity_along(const Point5& start, const Point5& direction, const ParityOptions& opt);

// Specialization to the skew circle direction half-diagonal + 2n e5, whose
// translate negates h, forcing odd parity for every transverse start.
int line_crossing_parity(const Point5& start, int n, int samples, int refine_depth);

// Retries line_crossing_parity with deterministic start perturbations of
// size 1e-3 when a NonGenericLine is reported (at most max_retries times).
int line_crossing_parity_retrying(const Point5& start, int n, int samples, int refine_depth,
                                  int max_retries);

// --- sphere intrinsic diameter --------------------------------------------------

// Upper estimate of the intrinsic (surface) diameter of the ruling sphere,
// via shortest paths on a graph with (subdiv+1)^2 vertices per face, edges
// between grid points up to two steps apart (Euclidean weights), and faces
// glued along their shared boundary vertices.
double ruling_sphere_diameter(int subdiv);

}  // namespace schwarz
}  // namespace widthkit
