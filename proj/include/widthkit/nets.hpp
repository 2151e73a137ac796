#pragma once

#include <cstdint>
#include <vector>

#include "widthkit/errors.hpp"

namespace widthkit {
namespace nets {

// Flat torus with the given side lengths: the product of circles R/(L_i Z)
// with the quotient Euclidean metric.
struct FlatTorus {
  std::vector<double> sides;

  int dim() const { return static_cast<int>(sides.size()); }
  double diameter() const;
};

// Geodesic distance on the torus: per-coordinate wrap-around differences
// combined in l2.
double toroidal_distance(const FlatTorus& torus, const std::vector<double>& a,
                         const std::vector<double>& b);

struct NetResult {
  std::vector<std::vector<double>> points;
  double delta = 0.0;
};

// Greedy maximal delta-separated set.  Candidates come from nested dyadic
// grids (side subdivided into 2^m parts, coarse levels first); within a
// level the order is a seeded pseudorandom permutation.  A candidate is
// accepted when its distance to every accepted point is at least delta, and
// the stream stops after 100000 consecutive rejections.  Coarse-to-fine
// ordering means candidates at exact mutual distance delta appear before
// generic ones, so the greedy net hits the extremal configurations instead
// of almost surely missing them.
NetResult greedy_net(const FlatTorus& torus, double delta, std::uint64_t seed);

struct NetCheck {
  bool separated = false;
  bool dense = false;
  double min_pairwise = 0.0;  // smallest pairwise distance (infinity for < 2 points)
  double max_sample_gap = 0.0;  // largest sampled distance to the net
};

// Verifies the net properties: exact pairwise separation, and delta-density
// probed at `samples` seeded uniform points.
NetCheck verify_net(const FlatTorus& torus, const NetResult& net, std::uint64_t seed,
                    int samples = 10000);

// Diameter estimate for a round sphere of the given radius with a finger of
// width delta attached: half the equator plus the detour around the finger.
double finger_sphere_diameter(double radius, double delta);

// Whether the finger sphere still fits in an open ball of radius 3/4, i.e.
// has diameter below 3/2.
bool finger_sphere_small(double radius, double delta);

}  // namespace nets
}  // namespace widthkit
