#include "widthkit/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

#include "widthkit/checked.hpp"

namespace widthkit {
namespace schwarz {

SkeletonId opposite(SkeletonId s) {
  return s == SkeletonId::primal ? SkeletonId::dual : SkeletonId::primal;
}

std::array<double, kDim> coord_distances(const Point5& x, SkeletonId s) {
  std::array<double, kDim> d;
  for (int i = 0; i < kDim; ++i) {
    double t = s == SkeletonId::primal ? x[i] : x[i] - 0.5;
    d[i] = std::fabs(std::remainder(t, 1.0));
  }
  return d;
}

double dist_to_skeleton(const Point5& x, SkeletonId s) {
  std::array<double, kDim> d = coord_distances(x, s);
  std::sort(d.begin(), d.end());
  return d[2];
}

double signed_gap(const Point5& x) {
  // The sorted coordinate distances to the two grids are complementary
  // (d and 1/2 - d as multisets), so both skeleton distances are controlled
  // by the median distance to the integer grid.
  std::array<double, kDim> d = coord_distances(x, SkeletonId::primal);
  std::sort(d.begin(), d.end());
  return 2.0 * d[2] - 0.5;
}

bool on_hypersurface(const Point5& x, double tol) {
  return std::fabs(signed_gap(x)) <= 2.0 * tol;
}

cubical::Vec half_diagonal() { return cubical::Vec(kDim, 1); }

cubical::LatticeBasis taming_symmetry_lattice() {
  std::vector<cubical::Vec> gens;
  for (int i = 0; i < 4; ++i) {
    cubical::Vec g(kDim, 0);
    g[i] = 4;  // 2 e_i in original units
    gens.push_back(g);
  }
  gens.push_back(cubical::Vec(kDim, 2));  // the all-ones vector
  return cubical::LatticeBasis(kDim, gens);
}

cubical::LatticeBasis skew_quotient_lattice(int n) {
  if (n < 1) throw cubical::InvalidLattice("quotient index must be >= 1");
  std::vector<cubical::Vec> gens;
  for (int i = 0; i < 4; ++i) {
    cubical::Vec g(kDim, 0);
    g[i] = checked_mul(4, n);
    gens.push_back(g);
  }
  cubical::Vec last(kDim, 1);
  last[4] = checked_add(1, checked_mul(4, n));
  gens.push_back(last);
  return cubical::LatticeBasis(kDim, gens);
}

std::shared_ptr<const cubical::Complex> build_quotient_skeleton(SkeletonId s,
                                                                const cubical::LatticeBasis& lattice) {
  cubical::Vec offset(kDim, s == SkeletonId::primal ? 0 : 1);
  return std::make_shared<cubical::Complex>(
      cubical::Complex::build_skeleton(kDim, 2, lattice, offset));
}

int taming_value_primal(const IVec5& v, int i, int j) {
  if (!(0 <= i && i < j && j < kDim)) throw cubical::InvalidCell("axis pair must be increasing");
  auto par = [](std::int64_t a) { return static_cast<int>(((a % 2) + 2) % 2); };
  if (j == 4) return 0;
  if (i == 0 && j == 1) return par(v[1] + v[2] + v[3] + v[4]);
  return par(v[3] + v[4]);
}

namespace {

// Original-unit vertex under the cell anchor, shifted back for dual cells.
IVec5 primal_vertex_of(const cubical::CubicalCell& cell, SkeletonId host) {
  IVec5 v;
  for (int t = 0; t < kDim; ++t) {
    std::int64_t h = cell.anchor[t] - (host == SkeletonId::dual ? 1 : 0);
    if (h % 2 != 0) throw cubical::InvalidCell("cell anchor does not sit on the host skeleton");
    v[t] = h / 2;
  }
  return v;
}

void require_dim(const cubical::Complex& cx) {
  if (cx.n() != kDim) throw cubical::InvalidCell("complex is not 5-dimensional");
}

}  // namespace

homology::Cochain2 taming_cochain(SkeletonId s, std::shared_ptr<const cubical::Complex> host) {
  require_dim(*host);
  homology::Cochain2 psi(host, homology::CoeffMode::integer);
  for (const cubical::CubicalCell& cell : host->cells(2)) {
    IVec5 v = primal_vertex_of(cell, s);
    if (s == SkeletonId::dual)
      for (int t = 0; t < kDim; ++t) v[t] += 1;  // value of the translate
    psi.set(cell, taming_value_primal(v, cell.dirs[0], cell.dirs[1]));
  }
  return psi;
}

homology::Cochain2 dual_shift_pullback(const homology::Cochain2& psi,
                                       std::shared_ptr<const cubical::Complex> target) {
  require_dim(*target);
  homology::Cochain2 out(target, psi.mode());
  for (const cubical::CubicalCell& cell : target->cells(2)) {
    cubical::CubicalCell shifted = cell;
    for (int t = 0; t < kDim; ++t) shifted.anchor[t] += 1;
    out.set(cell, psi.value(shifted));
  }
  return out;
}

InvarianceReport verify_translation_invariance(const homology::Cochain2& psi) {
  const cubical::Complex& cx = psi.host();
  require_dim(cx);
  InvarianceReport report;
  const cubical::LatticeBasis symmetry = taming_symmetry_lattice();
  for (const cubical::Vec& g : symmetry.generators()) {
    for (const cubical::CubicalCell& cell : cx.cells(2)) {
      cubical::CubicalCell moved = cell;
      for (int t = 0; t < kDim; ++t) moved.anchor[t] = checked_add(moved.anchor[t], g[t]);
      if (psi.value(moved) != psi.value(cell)) report.violations.push_back({cell, g});
    }
  }
  return report;
}

homology::Chain2 jailcell_chain(const JailCell& jc) {
  if (jc.anchor.size() != kDim) throw cubical::InvalidCell("jailcell anchor must be 5-dimensional");
  if (!(0 <= jc.axes[0] && jc.axes[0] < jc.axes[1] && jc.axes[1] < jc.axes[2] && jc.axes[2] < kDim))
    throw cubical::InvalidCell("jailcell axes must be strictly increasing");
  std::int64_t parity = jc.host == SkeletonId::dual ? 1 : 0;
  for (std::int64_t c : jc.anchor)
    if (((c % 2) + 2) % 2 != parity)
      throw cubical::InvalidCell("jailcell anchor does not sit on the host skeleton");

  // Boundary of the unit 3-cube spanned by the axes: the face pair normal to
  // the i-th axis carries sign (-1)^i on the far face, so consecutive faces
  // cancel along shared edges and the chain is an integral cycle.
  homology::Chain2 chain;
  for (int r = 0; r < 3; ++r) {
    int a = jc.axes[(r + 1) % 3], b = jc.axes[(r + 2) % 3], c = jc.axes[r];
    std::vector<int> dirs{std::min(a, b), std::max(a, b)};
    const std::int64_t sign = r == 1 ? -1 : 1;
    cubical::CubicalCell far{jc.anchor, dirs};
    far.anchor[c] = checked_add(far.anchor[c], 2);
    chain.emplace_back(far, sign);
    chain.emplace_back(cubical::CubicalCell{jc.anchor, dirs}, -sign);
  }
  return chain;
}

std::vector<JailCell> all_jailcells(SkeletonId s, const cubical::Complex& quotient) {
  require_dim(quotient);
  std::vector<JailCell> out;
  for (const cubical::CubicalCell& vtx : quotient.cells(0)) {
    for (int a = 0; a < kDim; ++a)
      for (int b = a + 1; b < kDim; ++b)
        for (int c = b + 1; c < kDim; ++c)
          out.push_back(JailCell{vtx.anchor, {a, b, c}, s});
  }
  return out;
}

RulingSphere make_ruling_sphere(const cubical::CubicalCell& host_cell, SkeletonId host) {
  if (host_cell.dirs.size() != 2) throw cubical::InvalidCell("ruling spheres sit over 2-cells");
  RulingSphere s;
  s.host_cell = host_cell;
  s.host = host;
  s.center = host_cell.anchor;
  s.center[host_cell.dirs[0]] += 1;
  s.center[host_cell.dirs[1]] += 1;
  return s;
}

namespace {

std::array<int, 3> normal_axes(const cubical::CubicalCell& cell) {
  std::array<int, 3> axes{};
  int w = 0;
  for (int t = 0; t < kDim; ++t)
    if (t != cell.dirs[0] && t != cell.dirs[1]) axes[w++] = t;
  return axes;
}

void require_centered(const RulingSphere& s) {
  if (s.host_cell.dirs.size() != 2) throw cubical::InvalidCell("ruling spheres sit over 2-cells");
  cubical::Vec bary = s.host_cell.anchor;
  bary[s.host_cell.dirs[0]] += 1;
  bary[s.host_cell.dirs[1]] += 1;
  if (s.center != bary) throw NotCentered("sphere center is not the barycenter of its host cell");
}

}  // namespace

JailCell dual_jailcell(const RulingSphere& sphere) {
  require_centered(sphere);
  JailCell jc;
  jc.host = opposite(sphere.host);
  jc.axes = normal_axes(sphere.host_cell);
  jc.anchor = sphere.center;
  for (int t : jc.axes) jc.anchor[t] -= 1;
  return jc;
}

std::int64_t taming_pairing(const RulingSphere& sphere, const homology::Cochain2& psi_opposite) {
  JailCell jc = dual_jailcell(sphere);
  return homology::evaluate_pairing(psi_opposite, jailcell_chain(jc));
}

std::int64_t host_retraction_coefficient(const RulingSphere& sphere) {
  require_centered(sphere);
  // Quarter-unit integer coordinates keep the area count exact: the sphere's
  // vertices sit at center +- 1 along the normal axes, and the host cell has
  // area 16 in these units.
  std::array<int, 3> axes = normal_axes(sphere.host_cell);
  int p = sphere.host_cell.dirs[0], q = sphere.host_cell.dirs[1];
  cubical::Vec center_q(kDim);
  for (int t = 0; t < kDim; ++t) center_q[t] = checked_mul(2, sphere.center[t]);

  static constexpr std::array<std::array<int, 2>, 4> kQuad{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
  std::int64_t area2 = 0;  // twice the total signed image area
  for (int t = 0; t < 3; ++t) {
    int u = axes[(t + 1) % 3], v = axes[(t + 2) % 3];
    for (int side : {-1, 1}) {
      std::array<std::pair<std::int64_t, std::int64_t>, 4> img;
      for (int k = 0; k < 4; ++k) {
        cubical::Vec x = center_q;
        x[axes[t]] += side;
        x[u] += kQuad[k][0];
        x[v] += kQuad[k][1];
        // Handle retraction: project to the (p, q) plane of the host cell,
        // then double about the cell center.
        img[k] = {center_q[p] + 2 * (x[p] - center_q[p]), center_q[q] + 2 * (x[q] - center_q[q])};
      }
      for (int k = 0; k < 4; ++k) {
        auto [x0, y0] = img[k];
        auto [x1, y1] = img[(k + 1) % 4];
        area2 = checked_add(area2, checked_sub(checked_mul(x0, y1), checked_mul(x1, y0)));
      }
    }
  }
  // Net coefficient = signed area / cell area = (area2 / 2) / 16.
  return area2 / 32;
}

std::vector<Point5> sample_sphere_points(const RulingSphere& sphere, int m) {
  require_centered(sphere);
  if (m < 1) throw Error("per-face subdivision must be >= 1");
  std::array<int, 3> axes = normal_axes(sphere.host_cell);
  Point5 c;
  for (int t = 0; t < kDim; ++t) c[t] = 0.5 * static_cast<double>(sphere.center[t]);
  std::vector<Point5> pts;
  pts.reserve(6 * (m + 1) * (m + 1));
  for (int t = 0; t < 3; ++t) {
    int u = axes[(t + 1) % 3], v = axes[(t + 2) % 3];
    for (int side : {-1, 1}) {
      for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= m; ++b) {
          Point5 x = c;
          x[axes[t]] += side * 0.25;
          x[u] += -0.25 + 0.5 * a / m;
          x[v] += -0.25 + 0.5 * b / m;
          pts.push_back(x);
        }
      }
    }
  }
  return pts;
}

namespace {

int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

int crossing_parity_along(const Point5& start, const Point5& direction, const ParityOptions& opt) {
  if (opt.samples < 1000) throw Error("crossing parity needs at least 1000 samples");
  auto h = [&](double t) {
    Point5 x;
    for (int i = 0; i < kDim; ++i) x[i] = start[i] + t * direction[i];
    return signed_gap(x);
  };

  std::vector<double> hv(opt.samples + 1);
  for (int i = 0; i <= opt.samples; ++i) {
    hv[i] = h(static_cast<double>(i) / opt.samples);
    if (std::fabs(hv[i]) < opt.zero_tol)
      throw NonGenericLine("gap vanishes at sample " + std::to_string(i));
  }

  int crossings = 0;
  for (int i = 0; i < opt.samples; ++i) {
    if (sign_of(hv[i]) == sign_of(hv[i + 1])) continue;
    // Confirm a transverse crossing: the sign-change bracket survives
    // bisection all the way down.
    double a = static_cast<double>(i) / opt.samples, b = static_cast<double>(i + 1) / opt.samples;
    double ha = hv[i], hb = hv[i + 1];
    for (int d = 0; d < opt.refine_depth; ++d) {
      double mid = 0.5 * (a + b), hm = h(mid);
      if (hm == 0.0) {
        // The bracket endpoints differ in sign, so an exact zero at the
        // midpoint is the crossing itself, located to full precision.
        break;
      }
      if (sign_of(hm) == sign_of(ha)) {
        a = mid;
        ha = hm;
      } else {
        b = mid;
        hb = hm;
      }
    }
    (void)hb;
    ++crossings;
  }
  return crossings % 2;
}

int line_crossing_parity(const Point5& start, int n, int samples, int refine_depth) {
  if (n < 1) throw Error("quotient index must be >= 1");
  Point5 dir;
  dir.fill(0.5);
  dir[4] = 0.5 + 2.0 * n;
  ParityOptions opt;
  opt.samples = samples;
  opt.refine_depth = refine_depth;
  return crossing_parity_along(start, dir, opt);
}

int line_crossing_parity_retrying(const Point5& start, int n, int samples, int refine_depth,
                                  int max_retries) {
  // Fixed, incommensurate perturbation directions keep retries reproducible.
  static constexpr Point5 kNudge{0.271828, 0.314159, 0.577215, 0.141421, 0.693147};
  Point5 s = start;
  for (int attempt = 0;; ++attempt) {
    try {
      return line_crossing_parity(s, n, samples, refine_depth);
    } catch (const NonGenericLine&) {
      if (attempt >= max_retries) throw;
      for (int i = 0; i < kDim; ++i) s[i] = start[i] + 1e-3 * (attempt + 1) * kNudge[i];
    }
  }
}

double ruling_sphere_diameter(int subdiv) {
  if (subdiv < 1) throw Error("subdivision must be >= 1");
  const int m = subdiv;
  const double step = 0.5 / m;  // cube side is 1/2

  // Index every surface grid point of the (m+1)^3 lattice.
  auto key = [&](int i, int j, int k) { return (i * (m + 1) + j) * (m + 1) + k; };
  std::vector<int> id((m + 1) * (m + 1) * (m + 1), -1);
  std::vector<std::array<int, 3>> pts;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      for (int k = 0; k <= m; ++k)
        if (i == 0 || i == m || j == 0 || j == m || k == 0 || k == m) {
          id[key(i, j, k)] = static_cast<int>(pts.size());
          pts.push_back({i, j, k});
        }

  // Within-face chords up to two grid steps (all coprime offsets).  Faces
  // share their boundary vertices, which is what lets shortest paths bend
  // across an edge of the cube.
  static constexpr std::array<std::array<int, 2>, 8> kOff{
      {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {2, -1}, {1, 2}, {1, -2}}};
  std::vector<std::vector<std::pair<int, double>>> adj(pts.size());
  auto add_face_edges = [&](int axis, int level) {
    for (int a = 0; a <= m; ++a) {
      for (int b = 0; b <= m; ++b) {
        for (const auto& off : kOff) {
          int a2 = a + off[0], b2 = b + off[1];
          if (a2 < 0 || a2 > m || b2 < 0 || b2 > m) continue;
          std::array<int, 3> p{}, q{};
          p[axis] = level;
          q[axis] = level;
          p[(axis + 1) % 3] = a;
          q[(axis + 1) % 3] = a2;
          p[(axis + 2) % 3] = b;
          q[(axis + 2) % 3] = b2;
          int u = id[key(p[0], p[1], p[2])], v = id[key(q[0], q[1], q[2])];
          double w = step * std::sqrt(double(off[0]) * off[0] + double(off[1]) * off[1]);
          adj[u].push_back({v, w});
          adj[v].push_back({u, w});
        }
      }
    }
  };
  for (int axis = 0; axis < 3; ++axis) {
    add_face_edges(axis, 0);
    add_face_edges(axis, m);
  }

  // Sources from one fundamental domain of the cube symmetry group; the
  // metric is invariant, so the max over (domain x everything) is the max
  // over all pairs.
  std::vector<int> sources;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      if (2 * i >= m && 2 * j >= m && i >= j) sources.push_back(id[key(i, j, m)]);

  double best = 0.0;
  std::vector<double> dist(pts.size());
  using QE = std::pair<double, int>;
  for (int src : sources) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    dist[src] = 0.0;
    pq.push({0.0, src});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u]) continue;
      for (auto [v, w] : adj[u]) {
        double nd = d + w;
        if (nd < dist[v]) {
          dist[v] = nd;
          pq.push({nd, v});
        }
      }
    }
    for (double d : dist) best = std::max(best, d);
  }
  return best;
}

}  // namespace schwarz
}  // namespace widthkit
