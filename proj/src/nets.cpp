#include "widthkit/nets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace widthkit {
namespace nets {

namespace {

constexpr int kMaxConsecutiveRejections = 100000;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d49bb133111ebull;
  return z ^ (z >> 31);
}

void check_torus(const FlatTorus& torus) {
  if (torus.sides.empty()) throw Error("torus must have at least one side");
  for (double s : torus.sides) {
    if (!(s > 0.0)) throw Error("torus sides must be positive");
  }
}

double wrap_delta(double a, double b, double side) {
  double d = std::fabs(a - b);
  d = std::fmod(d, side);
  return std::min(d, side - d);
}

double dist2(const FlatTorus& torus, const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (int t = 0; t < torus.dim(); ++t) {
    const double d = wrap_delta(a[t], b[t], torus.sides[t]);
    sum += d * d;
  }
  return sum;
}

// Uniform bucket grid over the torus for neighbor pruning.  Buckets have
// side at least delta, so any point within delta of a query lies in the
// query's bucket or an adjacent one (with wrap-around).
class BucketGrid {
 public:
  BucketGrid(const FlatTorus& torus, double delta) : torus_(torus) {
    const int k = torus.dim();
    counts_.resize(k);
    std::size_t total = 1;
    for (int t = 0; t < k; ++t) {
      int b = static_cast<int>(std::floor(torus.sides[t] / delta));
      b = std::max(1, std::min(b, 64));
      counts_[t] = b;
      total *= static_cast<std::size_t>(b);
    }
    buckets_.resize(total);
  }

  void insert(const std::vector<double>& p, int index) { buckets_[bucket_of(p)].push_back(index); }

  // Indices of stored points in the bucket of p and all adjacent buckets.
  void neighbors(const std::vector<double>& p, std::vector<int>& out) const {
    out.clear();
    const int k = torus_.dim();
    std::vector<int> base(k), offsets(k, -1);
    for (int t = 0; t < k; ++t) base[t] = coordinate_bucket(p[t], t);
    // Walk the 3^k offset cube.  On an axis with one bucket only offset 0 is
    // distinct; with two buckets offset +1 repeats offset -1.
    while (true) {
      bool fresh = true;
      std::size_t id = 0;
      for (int t = 0; t < k && fresh; ++t) {
        const int b = counts_[t];
        if ((b == 1 && offsets[t] != 0) || (b == 2 && offsets[t] == 1)) {
          fresh = false;
          break;
        }
        int c = (base[t] + offsets[t]) % b;
        if (c < 0) c += b;
        id = id * static_cast<std::size_t>(b) + static_cast<std::size_t>(c);
      }
      if (fresh) {
        for (int idx : buckets_[id]) out.push_back(idx);
      }
      int t = 0;
      for (; t < k; ++t) {
        if (offsets[t] < 1) {
          ++offsets[t];
          break;
        }
        offsets[t] = -1;
      }
      if (t == k) break;
    }
  }

 private:
  std::size_t bucket_of(const std::vector<double>& p) const {
    std::size_t id = 0;
    for (int t = 0; t < torus_.dim(); ++t) {
      id = id * static_cast<std::size_t>(counts_[t]) +
           static_cast<std::size_t>(coordinate_bucket(p[t], t));
    }
    return id;
  }

  int coordinate_bucket(double x, int t) const {
    const double side = torus_.sides[t];
    double u = std::fmod(x, side);
    if (u < 0.0) u += side;
    int c = static_cast<int>(std::floor(u / side * counts_[t]));
    return std::min(std::max(c, 0), counts_[t] - 1);
  }

  const FlatTorus& torus_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> buckets_;
};

}  // namespace

double FlatTorus::diameter() const {
  double sum = 0.0;
  for (double s : sides) sum += 0.25 * s * s;
  return std::sqrt(sum);
}

double toroidal_distance(const FlatTorus& torus, const std::vector<double>& a,
                         const std::vector<double>& b) {
  check_torus(torus);
  if (static_cast<int>(a.size()) != torus.dim() || static_cast<int>(b.size()) != torus.dim()) {
    throw Error("point dimension does not match the torus");
  }
  return std::sqrt(dist2(torus, a, b));
}

NetResult greedy_net(const FlatTorus& torus, double delta, std::uint64_t seed) {
  check_torus(torus);
  const double max_side = *std::max_element(torus.sides.begin(), torus.sides.end());
  if (!(delta > 0.0) || !(delta < max_side)) {
    throw Error("delta must lie strictly between 0 and the largest side");
  }
  const int k = torus.dim();
  const double delta2 = delta * delta;

  NetResult net;
  net.delta = delta;
  BucketGrid grid(torus, delta);
  std::vector<int> near;

  auto try_accept = [&](std::vector<double>&& p) {
    grid.neighbors(p, near);
    for (int idx : near) {
      if (dist2(torus, p, net.points[idx]) < delta2) return false;
    }
    grid.insert(p, static_cast<int>(net.points.size()));
    net.points.push_back(std::move(p));
    return true;
  };

  // Level m contributes the dyadic grid points side * j / 2^m whose tuple of
  // indices has at least one odd entry (the rest already appeared at coarser
  // levels).  Levels run coarse to fine so extremal configurations, which
  // live on coarse dyadic grids, are offered before generic points.  Within
  // a level, a seeded affine permutation of the index range fixes the order.
  int rejections = 0;
  bool done = false;
  for (int m = 0; !done; ++m) {
    if (m * k >= 62) throw Error("net did not stabilize within the level budget");
    const std::uint64_t per_axis = 1ull << m;
    const std::uint64_t total = 1ull << (m * k);
    std::uint64_t rng_state = seed * 0x100000001b3ull + static_cast<std::uint64_t>(m);
    const std::uint64_t mult = (splitmix64(rng_state) | 1ull) & (total - 1);
    const std::uint64_t shift = splitmix64(rng_state) & (total - 1);
    for (std::uint64_t i = 0; i < total; ++i) {
      const std::uint64_t idx = (mult * i + shift) & (total - 1);
      bool fresh = (m == 0);
      for (int t = 0; t < k && !fresh; ++t) {
        fresh = ((idx >> (m * t)) & 1ull) != 0;
      }
      if (!fresh) continue;
      std::vector<double> p(k);
      for (int t = 0; t < k; ++t) {
        const std::uint64_t j = (idx >> (m * t)) & (per_axis - 1);
        p[t] = std::ldexp(torus.sides[t] * static_cast<double>(j), -m);
      }
      if (try_accept(std::move(p))) {
        rejections = 0;
      } else if (++rejections >= kMaxConsecutiveRejections) {
        done = true;
        break;
      }
    }
  }
  return net;
}

NetCheck verify_net(const FlatTorus& torus, const NetResult& net, std::uint64_t seed,
                    int samples) {
  check_torus(torus);
  if (samples < 10000) throw Error("density check needs at least 10000 samples");
  const double delta = net.delta;
  const double delta2 = delta * delta;
  const int n = static_cast<int>(net.points.size());

  NetCheck check;
  check.separated = true;
  check.min_pairwise = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d2 = dist2(torus, net.points[i], net.points[j]);
      check.min_pairwise = std::min(check.min_pairwise, std::sqrt(d2));
      if (d2 < delta2) check.separated = false;
    }
  }

  BucketGrid grid(torus, delta);
  for (int i = 0; i < n; ++i) grid.insert(net.points[i], i);
  std::vector<int> near;

  std::mt19937_64 rng(seed);
  check.dense = true;
  check.max_sample_gap = 0.0;
  const int k = torus.dim();
  std::vector<double> p(k);
  for (int s = 0; s < samples; ++s) {
    for (int t = 0; t < k; ++t) {
      std::uniform_real_distribution<double> uni(0.0, torus.sides[t]);
      p[t] = uni(rng);
    }
    // The bucket ring only sees points within delta; a sample with an empty
    // ring or only far neighbors needs the exact gap, so fall back to a full
    // scan for the measurement.
    double best = std::numeric_limits<double>::infinity();
    grid.neighbors(p, near);
    for (int idx : near) best = std::min(best, dist2(torus, p, net.points[idx]));
    if (best > delta2) {
      best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) best = std::min(best, dist2(torus, p, net.points[i]));
    }
    const double gap = std::sqrt(best);
    check.max_sample_gap = std::max(check.max_sample_gap, gap);
    if (gap > delta) check.dense = false;
  }
  return check;
}

double finger_sphere_diameter(double radius, double delta) {
  if (!(radius > 0.0) || !(delta > 0.0)) throw Error("radius and delta must be positive");
  constexpr double kPi = 3.14159265358979323846;
  return kPi * radius + 2.0 * delta + delta / 25.0;
}

bool finger_sphere_small(double radius, double delta) {
  return finger_sphere_diameter(radius, delta) < 1.5;
}

}  // namespace nets
}
