#include "jpst/matrices.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jpst {

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::vector<int> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

IndexSet IndexSet::range(int first, int last) {
  std::vector<int> l;
  for (int i = first; i <= last; ++i) l.push_back(i);
  return IndexSet(l);
}

bool IndexSet::contains(int l) const { return std::binary_search(labels_.begin(), labels_.end(), l); }

bool IndexSet::disjoint(const IndexSet& o) const {
  for (int l : labels_)
    if (o.contains(l)) return false;
  return true;
}

IndexSet IndexSet::unite(const IndexSet& o) const {
  std::vector<int> l = labels_;
  l.insert(l.end(), o.labels_.begin(), o.labels_.end());
  return IndexSet(l);
}

// ---------------------------------------------------------------- FinMatrix

FinMatrix::FinMatrix(RingSpec::Ptr ring, IndexSet rows, IndexSet cols)
    : ring_(std::move(ring)), rows_(std::move(rows)), cols_(std::move(cols)) {}

FinMatrix FinMatrix::identity(RingSpec::Ptr ring, const IndexSet& n) {
  FinMatrix m(ring, n, n);
  m.offset_ = 1 % ring->characteristic();
  return m;
}

FinMatrix::Code FinMatrix::raw(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? 0 : it->second;
}

FinMatrix::Code FinMatrix::at(int r, int c) const {
  Code x = raw(r, c);
  if (r == c && offset_) x = ring_->add(x, ring_->scalar_code(offset_));
  return x;
}

void FinMatrix::set(int r, int c, Code a) {
  if (!rows_.contains(r) || !cols_.contains(c))
    throw Error("FinMatrix: entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside the index sets");
  if (a == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = a;
}

void FinMatrix::assign(int r, int c, Code a) {
  if (r == c && offset_) a = ring_->sub(a, ring_->scalar_code(offset_));
  set(r, c, a);
}

void FinMatrix::set_offset(Coeff s) {
  if (s % ring_->characteristic() && !(rows_ == cols_)) throw Error("FinMatrix: offset on a non-square matrix");
  offset_ = s % ring_->characteristic();
}

void FinMatrix::check_same_shape(const FinMatrix& o) const {
  if (!(rows_ == o.rows_) || !(cols_ == o.cols_)) throw Error("FinMatrix: shape mismatch");
}

FinMatrix FinMatrix::operator+(const FinMatrix& o) const {
  check_same_shape(o);
  FinMatrix r = *this;
  r.offset_ = mod_add(offset_, o.offset_, ring_->characteristic());
  for (auto& [k, v] : o.entries_) r.set(k.first, k.second, ring_->add(r.raw(k.first, k.second), v));
  return r;
}

FinMatrix FinMatrix::operator-() const {
  FinMatrix r = *this;
  r.offset_ = mod_neg(offset_, ring_->characteristic());
  for (auto& [k, v] : r.entries_) v = ring_->neg(v);
  return r;
}

FinMatrix FinMatrix::operator-(const FinMatrix& o) const { return *this + (-o); }

FinMatrix FinMatrix::scaled(Coeff s) const {
  FinMatrix r(ring_, rows_, cols_);
  Coeff n = ring_->characteristic();
  r.offset_ = mod_mul(offset_, s, n);
  Code sc = ring_->scalar_code(s);
  for (auto& [k, v] : entries_) r.set(k.first, k.second, ring_->mul(sc, v));
  return r;
}

FinMatrix FinMatrix::operator*(const FinMatrix& o) const {
  if (!(cols_ == o.rows_)) throw Error("FinMatrix: shape mismatch in product");
  FinMatrix r(ring_, rows_, o.cols_);
  Coeff n = ring_->characteristic();
  r.offset_ = mod_mul(offset_, o.offset_, n);
  std::map<int, std::vector<std::pair<int, Code>>> by_row;
  for (auto& [k, v] : o.entries_) by_row[k.first].push_back({k.second, v});
  std::map<Key, Code> acc;
  for (auto& [k, v] : entries_) {
    auto it = by_row.find(k.second);
    if (it == by_row.end()) continue;
    for (auto& [c, w] : it->second) {
      Code& slot = acc[{k.first, c}];
      slot = ring_->add(slot, ring_->mul(v, w));
    }
  }
  if (offset_) {
    Code s = ring_->scalar_code(offset_);
    for (auto& [k, w] : o.entries_) {
      Code& slot = acc[k];
      slot = ring_->add(slot, ring_->mul(s, w));
    }
  }
  if (o.offset_) {
    Code t = ring_->scalar_code(o.offset_);
    for (auto& [k, v] : entries_) {
      Code& slot = acc[k];
      slot = ring_->add(slot, ring_->mul(v, t));
    }
  }
  for (auto& [k, v] : acc)
    if (v) r.entries_[k] = v;
  return r;
}

FinMatrix FinMatrix::conjugate_transpose() const {
  FinMatrix r(ring_, cols_, rows_);
  r.offset_ = offset_;
  for (auto& [k, v] : entries_) r.entries_[{k.second, k.first}] = ring_->involution(v);
  return r;
}

namespace {

using Dense = std::vector<std::vector<RingSpec::Code>>;

Dense dense_mul(const RingSpec& ring, const Dense& a, const Dense& b) {
  std::size_t k = a.size();
  Dense r(k, std::vector<RingSpec::Code>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (!a[i][l]) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (b[l][j]) r[i][j] = ring.add(r[i][j], ring.mul(a[i][l], b[l][j]));
    }
  return r;
}

Dense dense_identity(const RingSpec& ring, std::size_t k) {
  Dense r(k, std::vector<RingSpec::Code>(k, 0));
  for (std::size_t i = 0; i < k; ++i) r[i][i] = ring.one_code();
  return r;
}

// Gauss-Jordan with unit pivots; falls back to powering for rings where a
// unit pivot need not exist.
Dense dense_inverse(const RingSpec& ring, const Dense& m) {
  std::size_t k = m.size();
  Dense a = m, inv = dense_identity(ring, k);
  bool ok = true;
  for (std::size_t c = 0; c < k && ok; ++c) {
    std::size_t sel = c;
    std::optional<RingSpec::Code> u;
    for (; sel < k; ++sel)
      if ((u = ring.unit_inverse(a[sel][c]))) break;
    if (sel == k) {
      ok = false;
      break;
    }
    std::swap(a[sel], a[c]);
    std::swap(inv[sel], inv[c]);
    for (std::size_t j = 0; j < k; ++j) {
      a[c][j] = ring.mul(*u, a[c][j]);
      inv[c][j] = ring.mul(*u, inv[c][j]);
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || !a[r][c]) continue;
      RingSpec::Code f = a[r][c];
      for (std::size_t j = 0; j < k; ++j) {
        a[r][j] = ring.sub(a[r][j], ring.mul(f, a[c][j]));
        inv[r][j] = ring.sub(inv[r][j], ring.mul(f, inv[c][j]));
      }
    }
  }
  if (ok) return inv;
  Dense id = dense_identity(ring, k);
  Dense prev = id, p = m;
  for (std::size_t it = 0; it < 100000; ++it) {
    if (p == id) return prev;
    prev = p;
    p = dense_mul(ring, p, m);
  }
  throw Error("matrix is not invertible");
}

}  // namespace

FinMatrix FinMatrix::inverse() const {
  if (!(rows_ == cols_)) throw Error("FinMatrix: inverse of a non-square matrix");
  Coeff n = ring_->characteristic();
  Coeff sinv = offset_ ? mod_inverse(offset_, n) : 0;
  std::vector<int> support;
  if (sinv) {
    std::set<int> s;
    for (auto& [k, v] : entries_) {
      s.insert(k.first);
      s.insert(k.second);
    }
    support.assign(s.begin(), s.end());
  } else {
    support = rows_.labels();
  }
  std::size_t k = support.size();
  Dense m(k, std::vector<Code>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) m[a][b] = at(support[a], support[b]);
  Dense y = k ? dense_inverse(*ring_, m) : Dense{};
  FinMatrix r(ring_, rows_, cols_);
  r.offset_ = sinv;
  Code s = ring_->scalar_code(sinv);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Code v = y[a][b];
      if (a == b) v = ring_->sub(v, s);
      if (v) r.entries_[{support[a], support[b]}] = v;
    }
  return r;
}

std::size_t FinMatrix::hash() const {
  std::size_t h = offset_;
  for (auto& [k, v] : entries_)
    h = (h * 1000003u) ^ (static_cast<std::size_t>(k.first) * 7919u + static_cast<std::size_t>(k.second) * 104729u +
                          v);
  return h;
}

std::string FinMatrix::str() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  if (offset_) {
    os << offset_ << "*1";
    first = false;
  }
  for (auto& [k, v] : entries_) {
    os << (first ? "" : " + ") << "(" << ring_->str(v) << ")E" << k.first << "," << k.second;
    first = false;
  }
  if (first) os << "0";
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- builders

FinMatrix unit_matrix(RingSpec::Ptr ring, const IndexSet& rows, const IndexSet& cols, int i, int j,
                      RingSpec::Code a) {
  FinMatrix m(std::move(ring), rows, cols);
  m.set(i, j, a);
  return m;
}

FinMatrix elementary(RingSpec::Ptr ring, const IndexSet& n, int i, int j, RingSpec::Code a) {
  if (i == j) throw Error("elementary matrix needs i != j");
  FinMatrix m = FinMatrix::identity(ring, n);
  m.set(i, j, a);
  return m;
}

FinMatrix e_block(Sign s, const FinMatrix& w, const IndexSet& i, const IndexSet& j) {
  if (!i.disjoint(j)) throw Error("e_block: I and J must be disjoint");
  bool plus = s == Sign::Plus;
  if (!(w.rows() == (plus ? i : j)) || !(w.cols() == (plus ? j : i)))
    throw Error("e_block: block has the wrong shape");
  IndexSet n = i.unite(j);
  FinMatrix m = FinMatrix::identity(w.ring(), n);
  for (auto& [k, v] : w.entries()) m.set(k.first, k.second, plus ? v : w.ring()->neg(v));
  return m;
}

FinMatrix commutator(const FinMatrix& g, const FinMatrix& h) { return g * h * g.inverse() * h.inverse(); }

FinMatrix block_matrix(const FinMatrix& a, const FinMatrix& b, const FinMatrix& c, const FinMatrix& d,
                       const IndexSet& i, const IndexSet& j) {
  IndexSet n = i.unite(j);
  auto ring = a.ring();
  FinMatrix m(ring, n, n);
  bool same = a.offset() == d.offset();
  if (same) m.set_offset(a.offset());
  auto put = [&](const FinMatrix& blk, bool diag) {
    for (auto& [k, v] : blk.entries()) m.set(k.first, k.second, ring->add(m.raw(k.first, k.second), v));
    if (diag && !same && blk.offset()) {
      for (int l : blk.rows().labels())
        m.set(l, l, ring->add(m.raw(l, l), ring->scalar_code(blk.offset())));
    }
  };
  put(a, true);
  put(b, false);
  put(c, false);
  put(d, true);
  return m;
}

std::vector<FinMatrix> all_matrices(RingSpec::Ptr ring, const IndexSet& rows, const IndexSet& cols,
                                    std::size_t cap) {
  std::size_t cells = rows.size() * cols.size();
  std::uint64_t card = ring->cardinality();
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    total *= card;
    if (total > cap) throw BudgetExceeded("matrix enumeration exceeds cap", cap);
  }
  std::vector<FinMatrix> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    FinMatrix m(ring, rows, cols);
    std::uint64_t x = code;
    for (std::size_t c = 0; c < cells; ++c) {
      auto a = static_cast<RingSpec::Code>(x % card);
      x /= card;
      m.set(rows[c / cols.size()], cols[c % cols.size()], a);
    }
    out.push_back(std::move(m));
  }
  return out;
}

MatrixGroup el_group(RingSpec::Ptr ring, const IndexSet& n, std::size_t cap) {
  std::vector<FinMatrix> gens;
  for (int i : n.labels())
    for (int j : n.labels()) {
      if (i == j) continue;
      for (std::size_t t = 0; t < ring->dim(); ++t)
        gens.push_back(elementary(ring, n, i, j, ring->code(vec::unit(ring->dim(), t))));
    }
  return MatrixGroup::closure(gens, FinMatrix::identity(ring, n),
                              [](const FinMatrix& a, const FinMatrix& b) { return a * b; }, cap);
}

// ---------------------------------------------------------------- suites

namespace {

struct Counter {
  std::size_t used = 0, cap;
  void tick() {
    if (++used > cap) throw BudgetExceeded("relation instances exceed budget", cap);
  }
};

std::string el_str(int i, int j, const RingSpec& r, RingSpec::Code a) {
  return "e" + std::to_string(i) + std::to_string(j) + "(" + r.str(a) + ")";
}

void suite_e(const RingSpec::Ptr& ring, const IndexSet& n, Report& rep, Counter& cnt) {
  auto& e1 = rep.check("E1");
  auto& e2 = rep.check("E2");
  auto& e3 = rep.check("E3");
  auto& e4 = rep.check("E4");
  auto card = static_cast<RingSpec::Code>(ring->cardinality());
  const RingSpec& r = *ring;
  auto e = [&](int i, int j, RingSpec::Code a) { return elementary(ring, n, i, j, a); };
  const auto& L = n.labels();
  for (int i : L)
    for (int j : L) {
      if (i == j) continue;
      for (RingSpec::Code a = 0; a < card; ++a) {
        FinMatrix ea = e(i, j, a);
        for (RingSpec::Code b = 0; b < card; ++b) {
          cnt.tick();
          e1.expect(ea * e(i, j, b) == e(i, j, r.add(a, b)),
                    el_str(i, j, r, a) + el_str(i, j, r, b) + " != " + el_str(i, j, r, r.add(a, b)));
          for (int k : L)
            for (int l : L) {
              if (k == l) continue;
              if (j != k && i != l) {
                cnt.tick();
                e2.expect(commutator(ea, e(k, l, b)).is_identity(),
                          "((" + el_str(i, j, r, a) + ", " + el_str(k, l, r, b) + ")) != 1");
              }
              if (k == j && l != i && l != j) {
                cnt.tick();
                e3.expect(commutator(ea, e(j, l, b)) == e(i, l, r.mul(a, b)),
                          "((" + el_str(i, j, r, a) + ", " + el_str(j, l, r, b) + ")) != " +
                              el_str(i, l, r, r.mul(a, b)));
              }
              if (l == i && k != i && k != j) {
                cnt.tick();
                RingSpec::Code rhs = r.neg(r.mul(b, a));
                e4.expect(commutator(ea, e(k, i, b)) == e(k, j, rhs),
                          "((" + el_str(i, j, r, a) + ", " + el_str(k, i, r, b) + ")) != " + el_str(k, j, r, rhs));
              }
            }
        }
      }
    }
}

std::vector<std::pair<int, int>> cells(const IndexSet& rows, const IndexSet& cols) {
  std::vector<std::pair<int, int>> out;
  for (int a : rows.labels())
    for (int b : cols.labels()) out.push_back({a, b});
  return out;
}

void suite_ej(const RingSpec::Ptr& ring, const IndexSet& I, const IndexSet& J, Report& rep, Counter& cnt) {
  auto& ej1 = rep.check("EJ1");
  auto& ej2 = rep.check("EJ2");
  auto& ej3 = rep.check("EJ3");
  auto card = static_cast<RingSpec::Code>(ring->cardinality());
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const IndexSet& R = s == Sign::Plus ? I : J;
    const IndexSet& C = s == Sign::Plus ? J : I;
    auto all = all_matrices(ring, R, C);
    for (auto& u : all)
      for (auto& w : all) {
        cnt.tick();
        ej1.expect(e_block(s, u, I, J) * e_block(s, w, I, J) == e_block(s, u + w, I, J),
                   std::string("e") + sign_str(s) + "(" + u.str() + ") e" + sign_str(s) + "(" + w.str() +
                       ") != e" + sign_str(s) + "(sum)");
      }
    // root spaces: alpha = (i,j) with i in I, j in J; V^+_alpha = A E_ij, V^-_alpha = A E_ji
    auto roots = cells(I, J);
    for (auto [i, j] : roots)
      for (auto [k, l] : roots) {
        int pairing = (i == k) + (j == l);
        if (pairing == 2) continue;
        for (RingSpec::Code a = 0; a < card; ++a)
          for (RingSpec::Code b = 0; b < card; ++b) {
            // u in V^s_alpha, v in V^{-s}_beta
            FinMatrix u = s == Sign::Plus ? unit_matrix(ring, I, J, i, j, a) : unit_matrix(ring, J, I, j, i, a);
            FinMatrix v = s == Sign::Plus ? unit_matrix(ring, J, I, l, k, b) : unit_matrix(ring, I, J, k, l, b);
            FinMatrix eu = e_block(s, u, I, J);
            FinMatrix ev = e_block(opposite(s), v, I, J);
            if (pairing == 0) {
              cnt.tick();
              ej2.expect(commutator(eu, ev).is_identity(),
                         "((e(" + u.str() + "), e(" + v.str() + "))) != 1");
            } else {
              FinMatrix inner = commutator(eu, ev);
              for (auto& z : all) {
                cnt.tick();
                FinMatrix t = u * v * z + z * v * u;
                ej3.expect(commutator(inner, e_block(s, z, I, J)) == e_block(s, -t, I, J),
                           std::string("sigma=") + sign_str(s) + " u=" + u.str() + " v=" + v.str() + " z=" + z.str());
              }
            }
          }
      }
  }
}

void suite_exc2(const RingSpec::Ptr& ring, const IndexSet& I, const IndexSet& J, Report& rep, Counter& cnt) {
  auto& c = rep.check("exc2");
  auto us = all_matrices(ring, I, J);
  auto vs = all_matrices(ring, J, I);
  FinMatrix one_i = FinMatrix::identity(ring, I), one_j = FinMatrix::identity(ring, J);
  for (auto& u : us)
    for (auto& v : vs) {
      cnt.tick();
      FinMatrix uv = u * v, vu = v * u;
      FinMatrix rhs = block_matrix(one_i - uv + uv * uv, u * v * u, v * u * v, one_j + vu, I, J);
      FinMatrix lhs = commutator(e_block(Sign::Plus, u, I, J), e_block(Sign::Minus, v, I, J));
      c.expect(lhs == rhs, "u=" + u.str() + " v=" + v.str() + ": " + lhs.str() + " != " + rhs.str());
    }
  rep.data()["pairs"] = us.size() * vs.size();
}

void suite_generation(const RingSpec::Ptr& ring, const IndexSet& I, const IndexSet& J, Report& rep,
                      std::size_t max_group) {
  IndexSet n = I.unite(J);
  std::vector<FinMatrix> gens;
  for (int i : I.labels())
    for (int j : J.labels())
      for (std::size_t t = 0; t < ring->dim(); ++t) {
        auto a = ring->code(vec::unit(ring->dim(), t));
        gens.push_back(e_block(Sign::Plus, unit_matrix(ring, I, J, i, j, a), I, J));
        gens.push_back(e_block(Sign::Minus, unit_matrix(ring, J, I, j, i, a), I, J));
      }
  auto blocks = MatrixGroup::closure(gens, FinMatrix::identity(ring, n),
                                     [](const FinMatrix& a, const FinMatrix& b) { return a * b; }, max_group);
  auto el = el_group(ring, n, max_group);
  auto& c = rep.check("generation");
  c.expect(blocks.order() == el.order(), "closure of e+(V+) and e-(V-) has order " +
                                             std::to_string(blocks.order()) + ", EL has " +
                                             std::to_string(el.order()));
  for (auto& g : el.generators()) c.expect(blocks.contains(g), "EL generator " + g.str() + " not reached");
  rep.data()["order"] = blocks.order();
}

}  // namespace

Report verify_elementary_relations(const RingSpec::Ptr& ring, const ElementaryOptions& opt) {
  Counter cnt{0, opt.max_instances};
  switch (opt.suite) {
    case ElementarySuite::E: {
      if (opt.n.size() < 3) throw Error("E suite needs |N| >= 3");
      Report rep("elementary relations E1-E4 over " + ring->name() + ", n=" + std::to_string(opt.n.size()));
      suite_e(ring, opt.n, rep, cnt);
      return rep;
    }
    case ElementarySuite::EJ: {
      Report rep("EJ relations over " + ring->name());
      suite_ej(ring, opt.i, opt.j, rep, cnt);
      return rep;
    }
    case ElementarySuite::Exc2: {
      Report rep("block commutator formula over " + ring->name());
      suite_exc2(ring, opt.i, opt.j, rep, cnt);
      return rep;
    }
    case ElementarySuite::Generation: {
      Report rep("generation of EL by block unipotents over " + ring->name());
      suite_generation(ring, opt.i, opt.j, rep, opt.max_group);
      return rep;
    }
  }
  throw Error("unknown suite");
}

}  // namespace jpst
