#include "widthkit/spaceform.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace widthkit {
namespace spaceform {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kQuadRelTol = 1e-10;
constexpr std::int64_t kQuadEvalCap = 1000000;

// sn_k(t): t for k = 0, sin(sqrt(k) t)/sqrt(k) for k > 0, and the sinh
// analogue for k < 0.  Small arguments go through a series so the k -> 0
// limit is smooth.
double snk(double t, double k) {
  if (k == 0.0) return t;
  const double s = std::sqrt(std::fabs(k));
  const double x = s * t;
  if (x < 1e-6) {
    const double x2 = x * x;
    const double sign = (k > 0.0) ? -1.0 : 1.0;
    return t * (1.0 + sign * x2 / 6.0 + x2 * x2 / 120.0);
  }
  return (k > 0.0 ? std::sin(x) : std::sinh(x)) / s;
}

struct Quadrature {
  double k = 0.0;
  int power = 0;  // d - 1
  std::int64_t evals = 0;

  double f(double t) {
    if (++evals > kQuadEvalCap) {
      throw QuadratureLimit("ball_volume: quadrature evaluation budget exhausted");
    }
    return std::pow(snk(t, k), power);
  }

  double simpson(double a, double fa, double fm, double b, double fb) const {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double refine(double a, double fa, double m, double fm, double b, double fb, double whole,
                double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
      return left + right + delta / 15.0;
    }
    return refine(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
           refine(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
  }

  double integrate(double a, double b, double rel_tol) {
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(a, fa, fm, b, fb);
    const double scale = std::max(std::fabs(whole), (b - a) * 1e-12);
    return refine(a, fa, m, fm, b, fb, whole, rel_tol * scale, 48);
  }
};

double curvature_parameter(int d, double sigma) {
  return sigma / (static_cast<double>(d) * (d - 1));
}

void check_dimension(int d) {
  if (d < 1) throw Error("dimension must be at least 1");
}

// Radius of the positively curved space form (half its diameter times two),
// i.e. the largest admissible ball radius.
double max_radius(int d, double sigma) {
  return kPi * std::sqrt(static_cast<double>(d) * (d - 1) / sigma);
}

// ball_volume with the radius clamped to the space form's diameter, so the
// value saturates at the total volume instead of leaving the domain.  This
// keeps the function defined and monotone for every sigma, which is what the
// root solve in mscal_from_volume needs.
double ball_volume_saturated(int d, double sigma, double r) {
  if (sigma > 0.0) {
    const double rmax = max_radius(d, sigma);
    if (r > rmax) r = rmax;
  }
  return ball_volume(d, sigma, r);
}

}  // namespace

double unit_ball_volume(int d) {
  check_dimension(d);
  return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double unit_sphere_area(int d) {
  check_dimension(d);
  return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

double ball_volume(int d, double sigma, double r) {
  check_dimension(d);
  if (!(r >= 0.0)) throw RadiusOutOfRange("ball radius must be nonnegative");
  if (d == 1) {
    // A 1-dimensional space form has no curvature to speak of.
    if (sigma != 0.0) throw Error("curvature must be zero in dimension 1");
    return 2.0 * r;
  }
  if (r == 0.0) return 0.0;
  const double k = curvature_parameter(d, sigma);
  if (sigma > 0.0) {
    const double rmax = max_radius(d, sigma);
    if (r > rmax * (1.0 + 1e-12)) {
      throw RadiusOutOfRange("radius " + std::to_string(r) + " exceeds the space form diameter " +
                             std::to_string(rmax));
    }
    if (r > rmax) r = rmax;
  }
  Quadrature q;
  q.k = k;
  q.power = d - 1;
  const double integral = q.integrate(0.0, r, kQuadRelTol);
  return unit_sphere_area(d) * integral;
}

double mscal_from_volume(int d, double vol, double r, double tol) {
  check_dimension(d);
  if (d == 1) throw Error("curvature is not determined in dimension 1");
  if (!(vol > 0.0)) throw Error("volume must be positive");
  if (!(r > 0.0)) throw Error("radius must be positive");
  if (!(tol > 0.0)) throw Error("tolerance must be positive");

  constexpr double kBracketLimit = 1e9;
  // Volume is strictly decreasing in sigma (saturating at the total volume
  // of the space form once the ball covers it).  Bracket by doubling.
  double lo = -1e3;
  double hi = 1e3;
  auto value = [&](double sigma) { return ball_volume_saturated(d, sigma, r); };
  while (value(hi) > vol) {
    hi *= 2.0;
    if (hi > kBracketLimit) {
      throw BracketExhausted("no curvature below 1e9 produces so small a volume");
    }
  }
  while (value(lo) < vol) {
    lo *= 2.0;
    if (lo < -kBracketLimit) {
      throw BracketExhausted("no curvature above -1e9 produces so large a volume");
    }
  }
  while (hi - lo > tol * 0.5) {
    const double mid = 0.5 * (lo + hi);
    if (value(mid) >= vol) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> mscal_scaling_pair(int d, double vol, double r, double lambda) {
  if (!(lambda > 0.0)) throw Error("scaling factor must be positive");
  const double scaled = mscal_from_volume(d, std::pow(lambda, d) * vol, lambda * r);
  const double direct = mscal_from_volume(d, vol, r) / (lambda * lambda);
  return {scaled, direct};
}

double fiber_radius_bound(int d, double sigma, double kappa) {
  if (d < 2) throw Error("base dimension must be at least 2");
  if (!(sigma > 0.0)) throw Error("total-space curvature bound must be positive");
  if (!(kappa >= 0.0)) throw Error("Ricci parameter must be nonnegative");
  const double top = ball_volume(d + 1, sigma, 1.0);
  const double base = ball_volume(d, -kappa, 1.0);
  const double ratio = std::min(1.0, top / base);
  return 0.5 * ratio * (1.0 - 1e-6);
}

bool mscal_certificate(int d, double sigma, double kappa, double rho) {
  if (d < 2) throw Error("base dimension must be at least 2");
  if (!(sigma > 0.0)) throw Error("total-space curvature bound must be positive");
  if (!(kappa >= 0.0)) throw Error("Ricci parameter must be nonnegative");
  if (!(rho > 0.0)) return false;
  if (!(rho < 0.5)) return false;
  const double top = ball_volume(d + 1, sigma, 1.0);
  const double base = ball_volume(d, -kappa, 1.0);
  return 2.0 * rho * base < top;
}

}  // namespace spaceform
}  // namespace widthkit
