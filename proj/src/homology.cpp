#include "widthkit/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "widthkit/checked.hpp"

namespace widthkit {
namespace homology {

ChainComplexGF2::ChainComplexGF2(std::vector<std::size_t> dims, std::vector<gf2::BitMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
  if (dims_.empty()) throw Error("chain complex needs at least one degree");
  if (boundaries_.size() + 1 != dims_.size())
    throw Error("chain complex needs one boundary per positive degree");
  for (std::size_t j = 0; j < boundaries_.size(); ++j) {
    if (boundaries_[j].rows() != dims_[j] || boundaries_[j].cols() != dims_[j + 1])
      throw Error("boundary matrix shape mismatch at degree " + std::to_string(j + 1));
  }
  for (std::size_t j = 0; j + 1 < boundaries_.size(); ++j) {
    gf2::BitMatrix prod = boundaries_[j] * boundaries_[j + 1];
    for (std::size_t i = 0; i < prod.rows(); ++i)
      if (prod.row(i).any())
        throw Error("boundary of boundary is nonzero at degree " + std::to_string(j + 2));
  }
}

ChainComplexGF2 ChainComplexGF2::from_complex(const cubical::Complex& cx) {
  std::vector<std::size_t> dims;
  std::vector<gf2::BitMatrix> bnds;
  for (int deg = 0; deg <= cx.k(); ++deg) dims.push_back(cx.cell_count(deg));
  for (int deg = 1; deg <= cx.k(); ++deg) {
    cubical::IntMatrix b = cx.boundary_matrix(deg);
    gf2::BitMatrix m(b.rows, b.cols);
    for (std::size_t i = 0; i < b.rows; ++i)
      for (std::size_t j = 0; j < b.cols; ++j)
        if (b.at(i, j) % 2 != 0) m.set(i, j, true);
    bnds.push_back(std::move(m));
  }
  return ChainComplexGF2(std::move(dims), std::move(bnds));
}

std::size_t ChainComplexGF2::dim(int degree) const {
  if (degree < 0 || degree > top_degree()) throw cubical::InvalidDegree("degree out of range");
  return dims_[degree];
}

const gf2::BitMatrix& ChainComplexGF2::boundary(int degree) const {
  if (degree < 1 || degree > top_degree()) throw cubical::InvalidDegree("boundary degree out of range");
  return boundaries_[degree - 1];
}

std::size_t betti(const ChainComplexGF2& cc, int degree) {
  if (degree < 0 || degree > cc.top_degree()) throw cubical::InvalidDegree("degree out of range");
  std::size_t rank_d = degree >= 1 ? gf2::rank_forward(cc.boundary(degree)) : 0;
  std::size_t rank_next = degree + 1 <= cc.top_degree() ? gf2::rank_forward(cc.boundary(degree + 1)) : 0;
  return cc.dim(degree) - rank_d - rank_next;
}

std::size_t betti_gf2(const cubical::Complex& cx, int degree) {
  return betti(ChainComplexGF2::from_complex(cx), degree);
}

SmithResult smith_normal_form(const cubical::IntMatrix& input) {
  if (input.rows > 512 || input.cols > 512)
    throw MatrixTooLarge("smith_normal_form accepts at most 512x512");
  cubical::IntMatrix m = input;
  std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::int64_t> diag;

  std::size_t r = 0;
  while (r < rows && r < cols) {
    // Locate the entry of smallest nonzero magnitude in the working block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (m.at(i, j) != 0 &&
            (pi == rows || std::llabs(m.at(i, j)) < std::llabs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, r), m.at(i, pj));

    bool dirty = false;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, r) != 0) {
        std::int64_t q = m.at(i, r) / m.at(r, r);
        for (std::size_t j = 0; j < cols; ++j)
          m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(r, j)));
        if (m.at(i, r) != 0) dirty = true;
      }
    }
    for (std::size_t j = r + 1; j < cols; ++j) {
      if (m.at(r, j) != 0) {
        std::int64_t q = m.at(r, j) / m.at(r, r);
        for (std::size_t i = 0; i < rows; ++i)
          m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(i, r)));
        if (m.at(r, j) != 0) dirty = true;
      }
    }
    if (dirty) continue;  // smaller remainders appeared; re-pick the pivot
    diag.push_back(std::llabs(m.at(r, r)));
    ++r;
  }

  // Enforce the divisibility chain with gcd/lcm pair moves on the diagonal.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      std::int64_t g = std::gcd(diag[i], diag[j]);
      if (g != 0 && diag[i] % g == 0 && diag[j] % g == 0 && diag[i] != g) {
        std::int64_t l = checked_mul(diag[i] / g, diag[j]);
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  SmithResult res;
  res.factors = std::move(diag);
  res.rank = res.factors.size();
  return res;
}

Cochain2::Cochain2(std::shared_ptr<const cubical::Complex> host, CoeffMode mode)
    : host_(std::move(host)), mode_(mode) {
  if (!host_) throw Error("cochain needs a host complex");
  if (host_->k() < 2) throw cubical::InvalidDegree("host complex carries no 2-cells");
  values_.assign(host_->cell_count(2), 0);
  present_.assign(host_->cell_count(2), false);
}

void Cochain2::set(const cubical::CubicalCell& cell, std::int64_t value) {
  if (cell.dirs.size() != 2) throw cubical::InvalidCell("cochain values live on 2-cells");
  if (mode_ == CoeffMode::mod2) value = ((value % 2) + 2) % 2;
  std::size_t i = host_->index_of(cell);
  values_[i] = value;
  present_[i] = true;
}

bool Cochain2::has(const cubical::CubicalCell& cell) const {
  if (cell.dirs.size() != 2) return false;
  if (!host_->has_cell(cell)) return false;
  return present_[host_->index_of(cell)];
}

std::int64_t Cochain2::value(const cubical::CubicalCell& cell) const {
  if (cell.dirs.size() != 2) throw cubical::InvalidCell("cochain values live on 2-cells");
  std::size_t i = host_->index_of(cell);
  return value_at(i);
}

std::int64_t Cochain2::value_at(std::size_t index) const {
  if (index >= values_.size()) throw cubical::UnknownCell("2-cell index out of range");
  if (!present_[index])
    throw IncompleteCochain("no value assigned to " + cubical::cell_id(host_->cells(2)[index]));
  return values_[index];
}

bool Cochain2::complete() const {
  return std::all_of(present_.begin(), present_.end(), [](bool b) { return b; });
}

std::int64_t evaluate_pairing(const Cochain2& psi, const Chain2& chain) {
  std::int64_t acc = 0;
  for (const auto& [cell, coeff] : chain) {
    std::size_t i = psi.host().index_of(cell);
    acc = checked_add(acc, checked_mul(coeff, psi.value_at(i)));
  }
  if (psi.mode() == CoeffMode::mod2) acc = ((acc % 2) + 2) % 2;
  return acc;
}

bool is_cocycle(const Cochain2& psi) {
  const cubical::Complex& cx = psi.host();
  if (cx.k() < 3) return true;  // no 3-cells to test against
  for (const cubical::CubicalCell& cube : cx.cells(3)) {
    std::int64_t acc = 0;
    for (std::size_t p = 0; p < 3; ++p) {
      std::int64_t sign = (p % 2 == 0) ? 1 : -1;
      std::vector<int> sub;
      for (std::size_t q = 0; q < 3; ++q)
        if (q != p) sub.push_back(cube.dirs[q]);
      cubical::CubicalCell near{cube.anchor, sub};
      cubical::CubicalCell far = near;
      far.anchor[cube.dirs[p]] += 2;
      acc += sign * (psi.value(far) - psi.value(near));
    }
    if (psi.mode() == CoeffMode::mod2 ? (acc % 2 != 0) : (acc != 0)) return false;
  }
  return true;
}

void save_cochain(const Cochain2& psi, std::ostream& out) {
  out << "COCHAIN mode=" << (psi.mode() == CoeffMode::integer ? "integer" : "mod2") << "\n";
  const auto& cells = psi.host().cells(2);
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (psi.has(cells[i])) out << "PSI " << cubical::cell_id(cells[i]) << " " << psi.value_at(i) << "\n";
}

namespace {

cubical::CubicalCell parse_cell_id(const std::string& id, std::size_t line) {
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(line) + ": " + what);
  };
  std::size_t c1 = id.find(':');
  std::size_t c2 = id.rfind(':');
  if (c1 == std::string::npos || c2 == c1) fail("malformed cell id '" + id + "'");
  cubical::CubicalCell cell;
  try {
    std::size_t deg = std::stoul(id.substr(0, c1));
    std::stringstream anchor(id.substr(c1 + 1, c2 - c1 - 1));
    std::string tok;
    while (std::getline(anchor, tok, ',')) cell.anchor.push_back(std::stoll(tok));
    std::string dirs = id.substr(c2 + 1);
    if (dirs != "-") {
      std::stringstream ds(dirs);
      while (std::getline(ds, tok, ',')) cell.dirs.push_back(std::stoi(tok));
    }
    if (cell.dirs.size() != deg) fail("cell id degree disagrees with its direction list");
  } catch (const std::logic_error&) {
    fail("malformed cell id '" + id + "'");
  }
  return cell;
}

}  // namespace

Cochain2 load_cochain(std::istream& in, std::shared_ptr<const cubical::Complex> host) {
  std::string line;
  std::size_t ln = 0;
  if (!std::getline(in, line)) throw ParseError("line 1: missing COCHAIN header");
  ++ln;
  CoeffMode mode;
  if (line == "COCHAIN mode=integer")
    mode = CoeffMode::integer;
  else if (line == "COCHAIN mode=mod2")
    mode = CoeffMode::mod2;
  else
    throw ParseError("line 1: malformed COCHAIN header");
  Cochain2 psi(std::move(host), mode);
  while (std::getline(in, line)) {
    ++ln;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string word, id, val;
    ss >> word >> id >> val;
    if (word != "PSI" || id.empty() || val.empty())
      throw ParseError("line " + std::to_string(ln) + ": expected PSI <cell-id> <value>");
    cubical::CubicalCell cell = parse_cell_id(id, ln);
    try {
      psi.set(cell, std::stoll(val));
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(ln) + ": bad value '" + val + "'");
    }
  }
  return psi;
}

void save_int_matrix(const cubical::IntMatrix& m, std::ostream& out) {
  out << m.rows << "\t" << m.cols << "\n";
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) out << "\t";
      out << m.at(i, j);
    }
    out << "\n";
  }
}

cubical::IntMatrix load_int_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1: missing matrix header");
  std::stringstream hs(line);
  std::size_t rows, cols;
  if (!(hs >> rows >> cols)) throw ParseError("line 1: malformed matrix header");
  cubical::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) throw ParseError("line " + std::to_string(i + 2) + ": missing row");
    std::stringstream ss(line);
    for (std::size_t j = 0; j < cols; ++j)
      if (!(ss >> m.at(i, j)))
        throw ParseError("line " + std::to_string(i + 2) + ": expected " + std::to_string(cols) +
                         " entries");
  }
  return m;
}

void save_gf2_matrix(const gf2::BitMatrix& m, std::ostream& out) {
  out << m.rows() << "\t" << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << "\t";
      out << (m.get(i, j) ? 1 : 0);
    }
    out << "\n";
  }
}

gf2::BitMatrix load_gf2_matrix(std::istream& in) {
  cubical::IntMatrix raw = load_int_matrix(in);
  gf2::BitMatrix m(raw.rows, raw.cols);
  for (std::size_t i = 0; i < raw.rows; ++i)
    for (std::size_t j = 0; j < raw.cols; ++j) {
      if (raw.at(i, j) != 0 && raw.at(i, j) != 1)
        throw ParseError("GF(2) matrix entries must be 0 or 1");
      m.set(i, j, raw.at(i, j) != 0);
    }
  return m;
}

}  // namespace homology
}  // namespace widthkit
