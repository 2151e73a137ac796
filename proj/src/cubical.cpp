#include "widthkit/cubical.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "widthkit/checked.hpp"

namespace widthkit {
namespace cubical {

namespace {

std::string format_vec(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string format_dirs(const std::vector<int>& dirs) {
  if (dirs.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(dirs[i]);
  }
  return s;
}

}  // namespace

LatticeBasis::LatticeBasis(int n, std::vector<Vec> generators) : n_(n), gens_(std::move(generators)) {
  if (n_ <= 0) throw InvalidLattice("lattice dimension must be positive");
  if (gens_.size() != static_cast<std::size_t>(n_))
    throw InvalidLattice("expected " + std::to_string(n_) + " generators, got " +
                         std::to_string(gens_.size()));
  for (const Vec& g : gens_)
    if (g.size() != static_cast<std::size_t>(n_))
      throw InvalidLattice("generator has wrong dimension");

  // Column-style Hermite normal form via exact integer column operations.
  hnf_.assign(n_, Vec(n_, 0));
  std::vector<Vec> col(n_, Vec(n_, 0));
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) col[j][i] = gens_[j][i];

  auto col_axpy = [&](int dst, int src, std::int64_t q) {
    // col[dst] -= q * col[src]
    for (int i = 0; i < n_; ++i)
      col[dst][i] = checked_sub(col[dst][i], checked_mul(q, col[src][i]));
  };

  for (int row = 0; row < n_; ++row) {
    // Shrink entries in this row across columns >= row until one survives.
    for (;;) {
      int jm = -1;
      for (int j = row; j < n_; ++j) {
        if (col[j][row] != 0 && (jm < 0 || std::llabs(col[j][row]) < std::llabs(col[jm][row])))
          jm = j;
      }
      if (jm < 0) throw InvalidLattice("generators are not full rank");
      std::swap(col[jm], col[row]);
      bool clean = true;
      for (int j = row + 1; j < n_; ++j) {
        if (col[j][row] != 0) {
          std::int64_t q = col[j][row] / col[row][row];
          col_axpy(j, row, q);
          if (col[j][row] != 0) clean = false;
        }
      }
      if (clean) break;
    }
    if (col[row][row] < 0)
      for (int i = 0; i < n_; ++i) col[row][i] = -col[row][i];
    // Reduce the columns to the left so 0 <= entry < diagonal.
    for (int j = 0; j < row; ++j) {
      std::int64_t q = floor_div(col[j][row], col[row][row]);
      if (q != 0) col_axpy(j, row, q);
    }
  }

  det_ = 1;
  for (int i = 0; i < n_; ++i) det_ = checked_mul(det_, col[i][i]);
  if (det_ == 0) throw InvalidLattice("generators are not full rank");
  hnf_ = std::move(col);
}

bool LatticeBasis::contains(const Vec& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw InvalidCell("vector has wrong dimension");
  Vec w = v;
  for (int i = 0; i < n_; ++i) {
    std::int64_t d = hnf_[i][i];
    if (w[i] % d != 0) return false;
    std::int64_t q = w[i] / d;
    if (q != 0)
      for (int r = 0; r < n_; ++r) w[r] = checked_sub(w[r], checked_mul(q, hnf_[i][r]));
  }
  return true;
}

Vec LatticeBasis::reduce(Vec v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw InvalidCell("vector has wrong dimension");
  for (int i = 0; i < n_; ++i) {
    std::int64_t q = floor_div(v[i], hnf_[i][i]);
    if (q != 0)
      for (int r = 0; r < n_; ++r) v[r] = checked_sub(v[r], checked_mul(q, hnf_[i][r]));
  }
  return v;
}

CubicalCell canonicalize(const CubicalCell& cell, const LatticeBasis& lattice) {
  int n = lattice.n();
  if (cell.anchor.size() != static_cast<std::size_t>(n))
    throw InvalidCell("anchor has wrong dimension");
  for (std::size_t i = 0; i < cell.dirs.size(); ++i) {
    if (cell.dirs[i] < 0 || cell.dirs[i] >= n) throw InvalidCell("direction out of range");
    if (i > 0 && cell.dirs[i] <= cell.dirs[i - 1])
      throw InvalidCell("directions must be strictly increasing");
  }
  return CubicalCell{lattice.reduce(cell.anchor), cell.dirs};
}

std::string cell_id(const CubicalCell& cell) {
  return std::to_string(cell.dirs.size()) + ":" + format_vec(cell.anchor) + ":" +
         format_dirs(cell.dirs);
}

Complex::Complex(int n, int k, LatticeBasis lattice, Vec offset)
    : n_(n), k_(k), lattice_(std::move(lattice)), offset_(std::move(offset)) {}

Complex Complex::build_skeleton(int n, int k, const LatticeBasis& lattice, const Vec& offset) {
  if (k < 0 || k > n) throw InvalidDegree("skeleton degree must satisfy 0 <= k <= n");
  if (lattice.n() != n) throw InvalidLattice("lattice dimension mismatch");
  if (offset.size() != static_cast<std::size_t>(n)) throw InvalidCell("offset has wrong dimension");
  for (const Vec& g : lattice.generators())
    for (Coord c : g)
      if (c % 2 != 0)
        throw InvalidLattice("lattice must preserve the vertex grid (all generator coordinates even)");

  Complex cx(n, k, lattice, offset);

  // Vertex cosets: closure of the offset under unit grid steps modulo L.
  std::map<Vec, std::size_t> seen;
  std::vector<Vec> queue{lattice.reduce(offset)};
  seen.emplace(queue[0], 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vec v = queue[head];
    for (int d = 0; d < n; ++d) {
      for (int step : {2, -2}) {
        Vec w = v;
        w[d] = checked_add(w[d], step);
        w = lattice.reduce(w);
        if (seen.emplace(w, seen.size()).second) queue.push_back(w);
      }
    }
  }
  std::vector<Vec> vertices;
  vertices.reserve(seen.size());
  for (const auto& [v, idx] : seen) vertices.push_back(v);  // map order = lexicographic

  cx.cells_.resize(k + 1);
  cx.index_.resize(k + 1);
  for (int deg = 0; deg <= k; ++deg) {
    // Direction subsets of size deg, lexicographic.
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto gen = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == deg) {
        subsets.push_back(cur);
        return;
      }
      for (int d = start; d < n; ++d) {
        cur.push_back(d);
        self(self, d + 1);
        cur.pop_back();
      }
    };
    gen(gen, 0);
    auto& list = cx.cells_[deg];
    list.reserve(vertices.size() * subsets.size());
    for (const Vec& v : vertices)
      for (const auto& s : subsets) list.push_back(CubicalCell{v, s});
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) cx.index_[deg].emplace(list[i], i);
  }
  return cx;
}

std::size_t Complex::cell_count(int degree) const {
  if (degree < 0 || degree > k_) throw InvalidDegree("degree out of range");
  return cells_[degree].size();
}

const std::vector<CubicalCell>& Complex::cells(int degree) const {
  if (degree < 0 || degree > k_) throw InvalidDegree("degree out of range");
  return cells_[degree];
}

std::size_t Complex::index_of(const CubicalCell& cell) const {
  CubicalCell c = canonicalize(cell, lattice_);
  int deg = static_cast<int>(c.dirs.size());
  if (deg > k_) throw UnknownCell("cell degree exceeds the skeleton");
  auto it = index_[deg].find(c);
  if (it == index_[deg].end()) throw UnknownCell("cell is not part of the complex: " + cell_id(c));
  return it->second;
}

bool Complex::has_cell(const CubicalCell& cell) const {
  CubicalCell c = canonicalize(cell, lattice_);
  int deg = static_cast<int>(c.dirs.size());
  if (deg > k_) return false;
  return index_[deg].count(c) > 0;
}

IntMatrix Complex::boundary_matrix(int degree) const {
  if (degree < 1 || degree > k_) throw InvalidDegree("boundary degree must satisfy 1 <= degree <= k");
  IntMatrix b(cell_count(degree - 1), cell_count(degree));
  const auto& cols = cells_[degree];
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const CubicalCell& cell = cols[c];
    for (std::size_t p = 0; p < cell.dirs.size(); ++p) {
      std::int64_t sign = (p % 2 == 0) ? 1 : -1;
      std::vector<int> sub;
      sub.reserve(cell.dirs.size() - 1);
      for (std::size_t q = 0; q < cell.dirs.size(); ++q)
        if (q != p) sub.push_back(cell.dirs[q]);
      CubicalCell near{cell.anchor, sub};
      CubicalCell far = near;
      far.anchor[cell.dirs[p]] = checked_add(far.anchor[cell.dirs[p]], 2);
      b.at(index_of(far), c) += sign;
      b.at(index_of(near), c) -= sign;
    }
  }
  return b;
}

void serialize(const Complex& complex, std::ostream& out) {
  out << "COMPLEX n=" << complex.n() << " k=" << complex.k() << "\n";
  for (const Vec& g : complex.lattice().generators()) out << "LATTICE " << format_vec(g) << "\n";
  out << "OFFSET " << format_vec(complex.offset()) << "\n";
  for (int deg = 0; deg <= complex.k(); ++deg)
    for (const CubicalCell& c : complex.cells(deg))
      out << "CELL " << deg << " " << format_vec(c.anchor) << " " << format_dirs(c.dirs) << "\n";
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

Vec parse_vec(const std::string& s, int n, std::size_t line) {
  Vec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) parse_fail(line, "bad integer '" + tok + "'");
    } catch (const std::logic_error&) {
      parse_fail(line, "bad integer '" + tok + "'");
    }
  }
  if (n >= 0 && v.size() != static_cast<std::size_t>(n))
    parse_fail(line, "expected " + std::to_string(n) + " coordinates");
  return v;
}

}  // namespace

Complex parse_complex(std::istream& in) {
  std::string line;
  std::size_t ln = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++ln;
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("line 1: missing COMPLEX header");
  int n = -1, k = -1;
  {
    std::stringstream ss(line);
    std::string word, nfield, kfield;
    ss >> word >> nfield >> kfield;
    if (word != "COMPLEX" || nfield.rfind("n=", 0) != 0 || kfield.rfind("k=", 0) != 0)
      parse_fail(ln, "malformed COMPLEX header");
    try {
      n = std::stoi(nfield.substr(2));
      k = std::stoi(kfield.substr(2));
    } catch (const std::logic_error&) {
      parse_fail(ln, "malformed COMPLEX header");
    }
  }
  if (n <= 0) parse_fail(ln, "dimension must be positive");

  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i) {
    if (!next_line()) parse_fail(ln + 1, "missing LATTICE row");
    if (line.rfind("LATTICE ", 0) != 0) parse_fail(ln, "expected LATTICE row");
    gens.push_back(parse_vec(line.substr(8), n, ln));
  }
  if (!next_line()) parse_fail(ln + 1, "missing OFFSET row");
  if (line.rfind("OFFSET ", 0) != 0) parse_fail(ln, "expected OFFSET row");
  Vec offset = parse_vec(line.substr(7), n, ln);

  std::size_t header_ln = ln;
  Complex built = [&] {
    try {
      return Complex::build_skeleton(n, k, LatticeBasis(n, gens), offset);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(header_ln) + ": " + e.what());
    }
  }();

  // The cell list must reproduce the canonical enumeration exactly.
  for (int deg = 0; deg <= k; ++deg) {
    for (const CubicalCell& expect : built.cells(deg)) {
      if (!next_line()) parse_fail(ln + 1, "missing CELL row");
      std::stringstream ss(line);
      std::string word, degtok, anchortok, dirtok;
      ss >> word >> degtok >> anchortok >> dirtok;
      if (word != "CELL" || degtok.empty() || anchortok.empty() || dirtok.empty())
        parse_fail(ln, "malformed CELL row");
      CubicalCell got;
      got.anchor = parse_vec(anchortok, n, ln);
      if (dirtok != "-") {
        for (Coord c : parse_vec(dirtok, -1, ln)) got.dirs.push_back(static_cast<int>(c));
      }
      if (degtok != std::to_string(deg) || !(got == expect))
        parse_fail(ln, "cell list does not match the canonical enumeration (expected " +
                           cell_id(expect) + ")");
    }
  }
  if (next_line()) parse_fail(ln, "unexpected trailing content");
  return built;
}

LatticeBasis cubic_lattice(int n, Coord side_original) {
  if (side_original <= 0) throw InvalidLattice("side length must be positive");
  std::vector<Vec> gens(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) gens[i][i] = checked_mul(2, side_original);
  return LatticeBasis(n, std::move(gens));
}

}  // namespace cubical
}  // namespace widthkit
