#include "widthkit/charclass.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace widthkit {
namespace charclass {

namespace {

std::string ref(int p, std::size_t i) {
  return std::to_string(p) + "." + std::to_string(i);
}

// Parses a "p.i" basis reference.
std::pair<int, std::size_t> parse_ref(const std::string& tok, int line_no) {
  const auto dot = tok.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size()) {
    throw RingParseError("line " + std::to_string(line_no) + ": malformed basis reference '" +
                         tok + "'");
  }
  try {
    const int p = std::stoi(tok.substr(0, dot));
    const long long i = std::stoll(tok.substr(dot + 1));
    if (p < 0 || i < 0) throw std::out_of_range("negative");
    return {p, static_cast<std::size_t>(i)};
  } catch (const std::exception&) {
    throw RingParseError("line " + std::to_string(line_no) + ": malformed basis reference '" +
                         tok + "'");
  }
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  if (a.degree != b.degree || a.coeffs.size() != b.coeffs.size()) {
    throw DegreeMismatch("sum of classes in different degrees");
  }
  RingElement r = a;
  r.coeffs ^= b.coeffs;
  return r;
}

CohomRing::CohomRing(int d, std::vector<std::vector<std::string>> labels, CupTables tables,
                     gf2::BitVec w1, gf2::BitVec w2)
    : d_(d),
      labels_(std::move(labels)),
      tables_(std::move(tables)),
      w1_(std::move(w1)),
      w2_(std::move(w2)) {
  validate();
}

const std::string& CohomRing::label(int p, std::size_t i) const {
  if (i >= dim(p)) throw DegreeMismatch("basis index out of range in degree " + std::to_string(p));
  return labels_[static_cast<std::size_t>(p)][i];
}

RingElement CohomRing::zero(int p) const { return RingElement{p, gf2::BitVec(dim(p))}; }

RingElement CohomRing::basis(int p, std::size_t i) const {
  RingElement e = zero(p);
  if (i >= dim(p)) throw DegreeMismatch("basis index out of range in degree " + std::to_string(p));
  e.coeffs.set(i, true);
  return e;
}

const gf2::BitVec& CohomRing::table_entry(int p, std::size_t i, int q, std::size_t j) const {
  if (p > q) {
    std::swap(p, q);
    std::swap(i, j);
  }
  const auto it = tables_.find({p, q});
  if (it == tables_.end()) {
    throw RingValidationError("missing cup table for degrees " + std::to_string(p) + "," +
                              std::to_string(q));
  }
  return it->second[i * dim(q) + j];
}

RingElement CohomRing::cup(const RingElement& a, const RingElement& b) const {
  if (a.degree < 0 || b.degree < 0) throw DegreeMismatch("negative degree");
  if (a.coeffs.size() != dim(a.degree) || b.coeffs.size() != dim(b.degree)) {
    throw DegreeMismatch("class width does not match its degree's basis");
  }
  const int r = a.degree + b.degree;
  if (a.degree == 0) {
    RingElement out = a.coeffs.size() == 1 && a.coeffs.get(0) ? b : zero(b.degree);
    return out;
  }
  if (b.degree == 0) {
    return b.coeffs.size() == 1 && b.coeffs.get(0) ? a : zero(a.degree);
  }
  RingElement out = zero(r);
  if (r > d_) return out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (!a.coeffs.get(i)) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (!b.coeffs.get(j)) continue;
      out.coeffs ^= table_entry(a.degree, i, b.degree, j);
    }
  }
  return out;
}

bool CohomRing::top_coefficient(const RingElement& a) const {
  if (a.degree != d_) throw DegreeMismatch("top coefficient requires a top-degree class");
  if (a.coeffs.size() != dim(d_)) throw DegreeMismatch("class width does not match the top basis");
  return a.coeffs.get(0);
}

RingElement CohomRing::w1() const { return RingElement{1, w1_}; }
RingElement CohomRing::w2() const { return RingElement{2, w2_}; }

bool CohomRing::operator==(const CohomRing& o) const {
  return d_ == o.d_ && labels_ == o.labels_ && tables_ == o.tables_ && w1_ == o.w1_ &&
         w2_ == o.w2_;
}

void CohomRing::validate() const {
  if (d_ < 0) throw RingValidationError("negative dimension");
  if (labels_.size() != static_cast<std::size_t>(d_) + 1) {
    throw RingValidationError("need one basis list per degree 0.." + std::to_string(d_));
  }
  if (dim(0) != 1) throw RingValidationError("degree 0 must be spanned by the unit alone");
  if (dim(d_) != 1) throw RingValidationError("top degree must be one-dimensional");
  if (w1_.size() != dim(1)) throw RingValidationError("w1 width does not match degree 1");
  if (w2_.size() != dim(2)) throw RingValidationError("w2 width does not match degree 2");

  // Table shape: exactly the keys 1 <= p <= q, p+q <= d with nonempty bases.
  for (int p = 1; p <= d_; ++p) {
    for (int q = p; p + q <= d_; ++q) {
      const bool want = dim(p) > 0 && dim(q) > 0;
      const auto it = tables_.find({p, q});
      if (!want) {
        if (it != tables_.end() && !it->second.empty()) {
          throw RingValidationError("cup table present for an empty degree pair " +
                                    std::to_string(p) + "," + std::to_string(q));
        }
        continue;
      }
      if (it == tables_.end() || it->second.size() != dim(p) * dim(q)) {
        throw RingValidationError("cup table for degrees " + std::to_string(p) + "," +
                                  std::to_string(q) + " has the wrong size");
      }
      for (const auto& v : it->second) {
        if (v.size() != dim(p + q)) {
          throw RingValidationError("cup table value width mismatch in degrees " +
                                    std::to_string(p) + "," + std::to_string(q));
        }
      }
    }
  }
  for (const auto& [key, tab] : tables_) {
    const auto [p, q] = key;
    if (p < 1 || q < p || p + q > d_) {
      throw RingValidationError("unexpected cup table key " + std::to_string(p) + "," +
                                std::to_string(q));
    }
    (void)tab;
  }

  // Symmetry (mod 2 graded commutativity has no signs).
  for (int p = 1; 2 * p <= d_; ++p) {
    for (std::size_t i = 0; i < dim(p); ++i) {
      for (std::size_t j = 0; j < dim(p); ++j) {
        if (!(table_entry(p, i, p, j) == table_entry(p, j, p, i))) {
          throw RingValidationError("cup product not symmetric at " + ref(p, i) + " and " +
                                    ref(p, j));
        }
      }
    }
  }

  // Associativity on all basis triples of positive degree.
  for (int p = 1; p <= d_; ++p) {
    for (int q = 1; p + q <= d_; ++q) {
      for (int r = 1; p + q + r <= d_; ++r) {
        for (std::size_t i = 0; i < dim(p); ++i) {
          for (std::size_t j = 0; j < dim(q); ++j) {
            for (std::size_t k = 0; k < dim(r); ++k) {
              const RingElement left = cup(cup(basis(p, i), basis(q, j)), basis(r, k));
              const RingElement right = cup(basis(p, i), cup(basis(q, j), basis(r, k)));
              if (!(left == right)) {
                throw RingValidationError("associativity fails at " + ref(p, i) + " " +
                                          ref(q, j) + " " + ref(r, k));
              }
            }
          }
        }
      }
    }
  }

  // Non-degenerate duality pairing in every degree.
  for (int p = 0; p <= d_; ++p) {
    if (dim(p) != dim(d_ - p)) {
      throw RingValidationError("duality dimension mismatch between degrees " +
                                std::to_string(p) + " and " + std::to_string(d_ - p));
    }
    const std::size_t n = dim(p);
    if (n == 0) continue;
    gf2::BitMatrix pairing(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        pairing.set(i, j, top_coefficient(cup(basis(p, i), basis(d_ - p, j))));
      }
    }
    gf2::BitMatrix inv;
    if (!gf2::invert(pairing, inv)) {
      throw RingValidationError("duality pairing degenerate in degree " + std::to_string(p));
    }
  }
}

CohomRing CohomRing::parse(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::vector<std::string>& toks) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      toks = split_ws(line);
      if (!toks.empty()) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> RingParseError {
    return RingParseError("line " + std::to_string(line_no) + ": " + msg);
  };

  std::vector<std::string> toks;
  if (!next_line(toks) || toks.size() != 2 || toks[0] != "RING" ||
      toks[1].rfind("d=", 0) != 0) {
    throw fail("expected 'RING d=<dimension>'");
  }
  int d = 0;
  try {
    d = std::stoi(toks[1].substr(2));
  } catch (const std::exception&) {
    throw fail("bad dimension");
  }
  if (d < 0) throw fail("bad dimension");

  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(d) + 1);
  for (int p = 0; p <= d; ++p) {
    if (!next_line(toks)) throw fail("missing 'H " + std::to_string(p) + "' line");
    if (toks.size() < 3 || toks[0] != "H" || toks[1] != std::to_string(p)) {
      throw fail("expected 'H " + std::to_string(p) + " <dim> <labels...>'");
    }
    long long n = 0;
    try {
      n = std::stoll(toks[2]);
    } catch (const std::exception&) {
      throw fail("bad basis size");
    }
    if (n < 0 || toks.size() != static_cast<std::size_t>(3 + n)) {
      throw fail("basis size does not match the number of labels");
    }
    labels[static_cast<std::size_t>(p)].assign(toks.begin() + 3, toks.end());
  }
  auto dim_of = [&](int p) -> std::size_t {
    return (p < 0 || p > d) ? 0 : labels[static_cast<std::size_t>(p)].size();
  };

  // Reads the sum on the right of '->' (or after W1/W2) into a coefficient
  // vector of the stated degree; '-' denotes zero, '+' tokens are separators.
  auto read_terms = [&](const std::vector<std::string>& ts, std::size_t from, int degree) {
    gf2::BitVec acc(dim_of(degree));
    if (from < ts.size() && ts[from] == "-" && ts.size() == from + 1) return acc;
    for (std::size_t t = from; t < ts.size(); ++t) {
      if (ts[t] == "+") continue;
      const auto [p, i] = parse_ref(ts[t], line_no);
      if (p != degree) {
        throw fail("term '" + ts[t] + "' is not in degree " + std::to_string(degree));
      }
      if (i >= dim_of(p)) throw fail("term '" + ts[t] + "' is out of range");
      acc.flip(i);
    }
    return acc;
  };

  CupTables tables;
  std::map<std::pair<int, int>, std::vector<bool>> seen;
  for (int p = 1; p <= d; ++p) {
    for (int q = p; p + q <= d; ++q) {
      if (dim_of(p) == 0 || dim_of(q) == 0) continue;
      tables[{p, q}].assign(dim_of(p) * dim_of(q), gf2::BitVec(dim_of(p + q)));
      seen[{p, q}].assign(dim_of(p) * dim_of(q), false);
    }
  }

  if (!next_line(toks)) throw fail("missing cup table and trailer");
  while (toks[0] == "CUP") {
    if (toks.size() < 5 || toks[3] != "->") throw fail("expected 'CUP p.i q.j -> terms'");
    const auto [p, i] = parse_ref(toks[1], line_no);
    const auto [q, j] = parse_ref(toks[2], line_no);
    if (p < 1 || q < p || p + q > d) throw fail("cup degrees out of range");
    if (i >= dim_of(p) || j >= dim_of(q)) throw fail("cup basis index out of range");
    if (p == q && j < i) throw fail("store each same-degree pair once, with i <= j");
    const gf2::BitVec value = read_terms(toks, 4, p + q);
    auto& tab = tables[{p, q}];
    auto& mark = seen[{p, q}];
    if (mark[i * dim_of(q) + j]) throw fail("duplicate cup entry");
    mark[i * dim_of(q) + j] = true;
    tab[i * dim_of(q) + j] = value;
    if (p == q) {
      mark[j * dim_of(q) + i] = true;
      tab[j * dim_of(q) + i] = value;
    }
    if (!next_line(toks)) throw fail("missing trailer after cup table");
  }
  for (const auto& [key, mark] : seen) {
    for (std::size_t t = 0; t < mark.size(); ++t) {
      if (!mark[t]) {
        const std::size_t i = t / dim_of(key.second);
        const std::size_t j = t % dim_of(key.second);
        if (key.first == key.second && j < i) continue;
        throw fail("missing cup entry CUP " + ref(key.first, i) + " " + ref(key.second, j));
      }
    }
  }

  if (toks[0] != "W1") throw fail("expected 'W1'");
  gf2::BitVec w1 = read_terms(toks, 1, 1);
  if (!next_line(toks) || toks[0] != "W2") throw fail("expected 'W2'");
  gf2::BitVec w2 = read_terms(toks, 1, 2);
  if (!next_line(toks) || toks.size() != 2 || toks[0] != "TOP") throw fail("expected 'TOP d.0'");
  const auto [tp, ti] = parse_ref(toks[1], line_no);
  if (tp != d || ti != 0) {
    throw fail("the fundamental class must be the sole top-degree basis element " +
               ref(d, 0));
  }
  if (next_line(toks)) throw fail("unexpected content after TOP");

  return CohomRing(d, std::move(labels), std::move(tables), std::move(w1), std::move(w2));
}

CohomRing CohomRing::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

void CohomRing::serialize(std::ostream& out) const {
  out << "RING d=" << d_ << "\n";
  for (int p = 0; p <= d_; ++p) {
    out << "H " << p << " " << dim(p);
    for (const auto& l : labels_[static_cast<std::size_t>(p)]) out << " " << l;
    out << "\n";
  }
  auto write_terms = [&](const gf2::BitVec& v, int degree) {
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v.get(i)) continue;
      if (!first) out << " + ";
      out << ref(degree, i);
      first = false;
    }
    if (first) out << "-";
  };
  for (const auto& [key, tab] : tables_) {
    const auto [p, q] = key;
    for (std::size_t i = 0; i < dim(p); ++i) {
      for (std::size_t j = (p == q ? i : 0); j < dim(q); ++j) {
        out << "CUP " << ref(p, i) << " " << ref(q, j) << " -> ";
        write_terms(tab[i * dim(q) + j], p + q);
        out << "\n";
      }
    }
  }
  out << "W1 ";
  write_terms(w1_, 1);
  out << "\nW2 ";
  write_terms(w2_, 2);
  out << "\nTOP " << ref(d_, 0) << "\n";
}

std::string CohomRing::to_text() const {
  std::ostringstream out;
  serialize(out);
  return out.str();
}

RingElement wu_class(const CohomRing& ring) {
  if (ring.dimension() < 2) return ring.zero(2);
  return ring.w2() + ring.cup(ring.w1(), ring.w1());
}

bool is_pin_minus(const CohomRing& ring) { return wu_class(ring).is_zero(); }

RingElement sq2_codim2(const CohomRing& ring, const RingElement& x) {
  if (x.degree != ring.dimension() - 2) {
    throw DegreeMismatch("second square input must have degree " +
                         std::to_string(ring.dimension() - 2));
  }
  return ring.cup(wu_class(ring), x);
}

RingElement find_xi(const CohomRing& ring, const CircleBundleData& bundle) {
  const int d = ring.dimension();
  if (d < 2) throw DegreeMismatch("need dimension at least 2");
  if (bundle.euler2.degree != 2 || bundle.euler2.coeffs.size() != ring.dim(2)) {
    throw DegreeMismatch("Euler class must live in degree 2 of the ring");
  }
  const std::size_t n = ring.dim(d - 2);
  gf2::BitMatrix pairing(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    pairing.set(0, i, ring.top_coefficient(ring.cup(ring.basis(d - 2, i), bundle.euler2)));
  }
  gf2::BitVec rhs(1);
  rhs.set(0, true);
  gf2::BitVec x;
  if (!gf2::solve(pairing, rhs, x)) {
    throw FStarNonzero("no class cups with the Euler class onto the top class");
  }
  return RingElement{d - 2, x};
}

bool hopf_obstruction(const CohomRing& ring, const CircleBundleData& bundle,
                      const RingElement& xi) {
  const int d = ring.dimension();
  if (xi.degree != d - 2) throw DegreeMismatch("xi must have degree " + std::to_string(d - 2));
  if (bundle.euler2.degree != 2) throw DegreeMismatch("Euler class must live in degree 2");
  const RingElement total = wu_class(ring) + bundle.euler2;
  return ring.top_coefficient(ring.cup(total, xi));
}

WidthReport width_lower_bound(double hs, int codim, bool fstar_nonzero, bool hopf_nonzero) {
  if (!(hs >= 0.0)) throw Error("hypersphericity must be nonnegative");
  if (codim != 1 && codim != 2) throw Error("codimension must be 1 or 2");
  WidthReport report;
  report.hypersphericity = hs;
  if (codim == 1) {
    report.bound_codim1 = 0.5 * hs;
    report.branch = "codim1";
    return report;
  }
  if (fstar_nonzero) {
    report.branch = "fstar-nonzero";
  } else if (hopf_nonzero) {
    report.branch = "hopf-nonzero";
  } else {
    throw NoCertificate("codimension 2 needs the direct branch or the Hopf branch");
  }
  report.bound_codim2 = 0.5 * hs;
  return report;
}

CohomRing tensor_product(const CohomRing& a, const CohomRing& b) {
  const int da = a.dimension(), db = b.dimension();
  const int d = da + db;

  // Degree r of the product splits into blocks (p, r-p), p ascending.
  auto block_offset = [&](int r, int p) {
    std::size_t off = 0;
    for (int s = std::max(0, r - db); s < p; ++s) off += a.dim(s) * b.dim(r - s);
    return off;
  };
  auto flat = [&](int p, std::size_t i, int q, std::size_t j) {
    return block_offset(p + q, p) + i * b.dim(q) + j;
  };
  auto dim_of = [&](int r) {
    std::size_t n = 0;
    for (int p = std::max(0, r - db); p <= std::min(da, r); ++p) n += a.dim(p) * b.dim(r - p);
    return n;
  };

  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(d) + 1);
  for (int r = 0; r <= d; ++r) {
    for (int p = std::max(0, r - db); p <= std::min(da, r); ++p) {
      const int q = r - p;
      for (std::size_t i = 0; i < a.dim(p); ++i) {
        for (std::size_t j = 0; j < b.dim(q); ++j) {
          std::string l;
          if (p == 0) {
            l = b.label(q, j);
          } else if (q == 0) {
            l = a.label(p, i);
          } else {
            l = a.label(p, i) + "*" + b.label(q, j);
          }
          labels[static_cast<std::size_t>(r)].push_back(std::move(l));
        }
      }
    }
  }

  CohomRing::CupTables tables;
  for (int s = 1; s <= d; ++s) {
    for (int t = s; s + t <= d; ++t) {
      if (dim_of(s) == 0 || dim_of(t) == 0) continue;
      auto& tab = tables[{s, t}];
      tab.assign(dim_of(s) * dim_of(t), gf2::BitVec(dim_of(s + t)));
      for (int p = std::max(0, s - db); p <= std::min(da, s); ++p) {
        const int q = s - p;
        for (int pp = std::max(0, t - db); pp <= std::min(da, t); ++pp) {
          const int qq = t - pp;
          if (p + pp > da || q + qq > db) continue;
          for (std::size_t i = 0; i < a.dim(p); ++i) {
            for (std::size_t j = 0; j < b.dim(q); ++j) {
              for (std::size_t ii = 0; ii < a.dim(pp); ++ii) {
                for (std::size_t jj = 0; jj < b.dim(qq); ++jj) {
                  const RingElement za = a.cup(a.basis(p, i), a.basis(pp, ii));
                  const RingElement zb = b.cup(b.basis(q, j), b.basis(qq, jj));
                  auto& cell = tab[flat(p, i, q, j) * dim_of(t) + flat(pp, ii, qq, jj)];
                  for (std::size_t ka = 0; ka < za.coeffs.size(); ++ka) {
                    if (!za.coeffs.get(ka)) continue;
                    for (std::size_t kb = 0; kb < zb.coeffs.size(); ++kb) {
                      if (!zb.coeffs.get(kb)) continue;
                      cell.flip(flat(p + pp, ka, q + qq, kb));
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  gf2::BitVec w1(dim_of(1));
  for (std::size_t j = 0; j < b.dim(1); ++j) {
    if (b.w1().coeffs.get(j)) w1.flip(flat(0, 0, 1, j));
  }
  for (std::size_t i = 0; i < a.dim(1); ++i) {
    if (a.w1().coeffs.get(i)) w1.flip(flat(1, i, 0, 0));
  }
  gf2::BitVec w2(dim_of(2));
  for (std::size_t j = 0; j < b.dim(2); ++j) {
    if (b.w2().coeffs.get(j)) w2.flip(flat(0, 0, 2, j));
  }
  for (std::size_t i = 0; i < a.dim(1); ++i) {
    if (!a.w1().coeffs.get(i)) continue;
    for (std::size_t j = 0; j < b.dim(1); ++j) {
      if (b.w1().coeffs.get(j)) w2.flip(flat(1, i, 1, j));
    }
  }
  for (std::size_t i = 0; i < a.dim(2); ++i) {
    if (a.w2().coeffs.get(i)) w2.flip(flat(2, i, 0, 0));
  }

  return CohomRing(d, std::move(labels), std::move(tables), std::move(w1), std::move(w2));
}

CohomRing apply_basis_change(const CohomRing& ring, const std::vector<gf2::BitMatrix>& change) {
  const int d = ring.dimension();
  if (change.size() != static_cast<std::size_t>(d) + 1) {
    throw Error("need one change matrix per degree");
  }
  // Coordinates transform through the inverse transpose; basis vectors
  // through the rows of the change matrix itself.
  std::vector<gf2::BitMatrix> to_new(change.size());
  for (int p = 0; p <= d; ++p) {
    const auto& m = change[static_cast<std::size_t>(p)];
    if (m.rows() != ring.dim(p) || m.cols() != ring.dim(p)) {
      throw Error("change matrix shape mismatch in degree " + std::to_string(p));
    }
    if (ring.dim(p) == 0) continue;
    gf2::BitMatrix inv;
    if (!gf2::invert(m.transposed(), inv)) {
      throw Error("basis change not invertible in degree " + std::to_string(p));
    }
    to_new[static_cast<std::size_t>(p)] = std::move(inv);
  }

  auto new_basis_in_old = [&](int p, std::size_t i) {
    return RingElement{p, change[static_cast<std::size_t>(p)].row(i)};
  };

  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(d) + 1);
  for (int p = 0; p <= d; ++p) {
    for (std::size_t i = 0; i < ring.dim(p); ++i) {
      labels[static_cast<std::size_t>(p)].push_back("e" + std::to_string(p) + "_" +
                                                    std::to_string(i));
    }
  }

  CohomRing::CupTables tables;
  for (int p = 1; p <= d; ++p) {
    for (int q = p; p + q <= d; ++q) {
      if (ring.dim(p) == 0 || ring.dim(q) == 0) continue;
      auto& tab = tables[{p, q}];
      tab.assign(ring.dim(p) * ring.dim(q), gf2::BitVec(ring.dim(p + q)));
      for (std::size_t i = 0; i < ring.dim(p); ++i) {
        for (std::size_t j = 0; j < ring.dim(q); ++j) {
          const RingElement z = ring.cup(new_basis_in_old(p, i), new_basis_in_old(q, j));
          tab[i * ring.dim(q) + j] = to_new[static_cast<std::size_t>(p + q)].apply(z.coeffs);
        }
      }
    }
  }

  gf2::BitVec w1 = ring.dim(1) ? to_new[1].apply(ring.w1().coeffs) : gf2::BitVec(0);
  gf2::BitVec w2 = ring.dim(2) ? to_new[2].apply(ring.w2().coeffs) : gf2::BitVec(0);
  return CohomRing(d, std::move(labels), std::move(tables), std::move(w1), std::move(w2));
}

}  // namespace charclass
}  // namespace widthkit
