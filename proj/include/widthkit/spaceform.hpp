#pragma once

#include <utility>

#include "widthkit/errors.hpp"

namespace widthkit {
namespace spaceform {

struct RadiusOutOfRange : Error {
  using Error::Error;
};
struct BracketExhausted : Error {
  using Error::Error;
};
struct QuadratureLimit : Error {
  using Error::Error;
};

// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

// Surface measure of the unit (d-1)-sphere in R^d.
double unit_sphere_area(int d);

// Volume of a metric ball of radius r in the d-dimensional simply connected
// space form of constant scalar curvature sigma.  For sigma > 0 the radius
// must not exceed the diameter pi * sqrt(d(d-1)/sigma).
double ball_volume(int d, double sigma, double r);

// Macroscopic scalar curvature at scale r: the sigma whose space form ball
// of radius r has the given volume.  Monotone root solve with bracket
// doubling from [-1e3, 1e3] up to 1e9; tolerance is absolute in sigma.
double mscal_from_volume(int d, double vol, double r, double tol = 1e-8);

// The two sides of the rescaling identity: curvature at scale lambda*r of
// the lambda^2-scaled metric versus lambda^-2 times the original value.
std::pair<double, double> mscal_scaling_pair(int d, double vol, double r, double lambda);

// Largest certified fiber radius for a circle fibration with total-space
// scalar curvature >= sigma (dimension d+1) over a base with Ricci >= -kappa/d
// (dimension d): half of min(1, V_sigma^{d+1}(1) / V_{-kappa}^d(1)), shaved
// by a relative 1e-6 safety margin.
double fiber_radius_bound(int d, double sigma, double kappa);

// Checks the strict volume inequality that makes a fiber radius rho
// admissible: rho < 1/2 and 2 rho V_{-kappa}^d(1) < V_sigma^{d+1}(1).
bool mscal_certificate(int d, double sigma, double kappa, double rho);

}  // namespace spaceform
}  // namespace widthkit
