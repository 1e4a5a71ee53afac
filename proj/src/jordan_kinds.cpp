#include <memory>

#include "jpst/jordan.hpp"

namespace jpst {

namespace {

// Dense rows x cols matrix with entries in A (coordinate vectors).
struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<Vec> e;
  Vec& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
  const Vec& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
};

Dense dense_zero(const RingSpec& a, std::size_t rows, std::size_t cols) {
  return Dense{rows, cols, std::vector<Vec>(rows * cols, a.zero())};
}

Dense dense_mul(const RingSpec& a, const Dense& x, const Dense& y) {
  Dense out = dense_zero(a, x.rows, y.cols);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Vec& xv = x.at(r, k);
      if (vec::is_zero(xv)) continue;
      for (std::size_t c = 0; c < y.cols; ++c) {
        const Vec& yv = y.at(k, c);
        if (vec::is_zero(yv)) continue;
        out.at(r, c) = a.add(out.at(r, c), a.mul(xv, yv));
      }
    }
  return out;
}

Vec slice(const Vec& v, std::size_t off, std::size_t len) {
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + len));
}

void put(Vec& v, std::size_t off, const Vec& a) {
  for (std::size_t t = 0; t < a.size(); ++t) v[off + t] = a[t];
}

std::string ring_label(const RingSpec& a, std::size_t t) { return a.dim() == 1 ? "" : a.labels()[t] + "."; }

}  // namespace

JordanPair rect_pair(const RingSpec::Ptr& ring, std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw Error("rectangular pair needs nonempty I and J");
  const RingSpec& a = *ring;
  std::size_t da = a.dim();
  Coeff n = a.characteristic();
  std::size_t dp = p * q * da;
  auto rp = ring;
  auto to_plus = [rp, p, q, da](const Vec& x) {
    Dense m = dense_zero(*rp, p, q);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < q; ++c) m.at(r, c) = slice(x, (r * q + c) * da, da);
    return m;
  };
  auto to_minus = [rp, p, q, da](const Vec& y) {
    Dense m = dense_zero(*rp, q, p);
    for (std::size_t c = 0; c < q; ++c)
      for (std::size_t r = 0; r < p; ++r) m.at(c, r) = slice(y, (c * p + r) * da, da);
    return m;
  };
  auto flat = [da](const Dense& m) {
    Vec v(m.rows * m.cols * da, 0);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) put(v, (r * m.cols + c) * da, m.at(r, c));
    return v;
  };
  JordanPair::QFunc qp = [rp, to_plus, to_minus, flat](const Vec& x, const Vec& y) {
    Dense X = to_plus(x), Y = to_minus(y);
    return flat(dense_mul(*rp, dense_mul(*rp, X, Y), X));
  };
  JordanPair::QFunc qm = [rp, to_plus, to_minus, flat](const Vec& y, const Vec& x) {
    Dense X = to_plus(x), Y = to_minus(y);
    return flat(dense_mul(*rp, dense_mul(*rp, Y, X), Y));
  };
  std::string name = "rect(" + a.name() + "," + std::to_string(p) + "," + std::to_string(q) + ")";
  JordanPair pair = JordanPair::from_closures(name, PairKind::Rect, n, {dp, dp}, {qp, qm});
  std::vector<int> il, jl;
  for (std::size_t r = 0; r < p; ++r) il.push_back(static_cast<int>(r + 1));
  for (std::size_t c = 0; c < q; ++c) jl.push_back(static_cast<int>(p + c + 1));
  std::vector<std::optional<Block>> bp(dp), bm(dp);
  std::vector<std::string> lp(dp), lm(dp);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < q; ++c)
      for (std::size_t t = 0; t < da; ++t) {
        std::size_t ip = (r * q + c) * da + t, im = (c * p + r) * da + t;
        bp[ip] = Block{il[r], jl[c]};
        bm[im] = Block{jl[c], il[r]};
        lp[ip] = ring_label(a, t) + "E" + std::to_string(il[r]) + "," + std::to_string(jl[c]);
        lm[im] = ring_label(a, t) + "E" + std::to_string(jl[c]) + "," + std::to_string(il[r]);
      }
  pair.set_blocks(Sign::Plus, bp);
  pair.set_blocks(Sign::Minus, bm);
  pair.set_labels(Sign::Plus, lp);
  pair.set_labels(Sign::Minus, lm);
  pair.set_ring(ring);
  pair.set_indices(IndexSet(il), IndexSet(jl));
  return pair;
}

JordanPair full_pair(const RingSpec::Ptr& ring) {
  JordanPair pair = rect_pair(ring, 1, 1);
  JordanPair out = JordanPair::from_closures(
      "full(" + ring->name() + ")", PairKind::Full, ring->characteristic(),
      {ring->dim(), ring->dim()},
      {[ring](const Vec& x, const Vec& y) { return ring->mul(ring->mul(x, y), x); },
       [ring](const Vec& y, const Vec& x) { return ring->mul(ring->mul(y, x), y); }});
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    out.set_blocks(s, pair.blocks(s));
    out.set_labels(s, ring->labels());
  }
  out.set_ring(ring);
  out.set_indices(pair.index_i(), pair.index_j());
  return out;
}

namespace {

// Coordinates of a symmetric-type matrix pair: one slot per (i, j), i <= j
// (i < j only when diagonal is false).
struct SymLayout {
  std::size_t m = 0;
  std::size_t da = 0, dh = 0;
  bool diagonal = true;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::size_t> offset;
  std::size_t dim = 0;

  SymLayout(std::size_t m_, std::size_t da_, std::size_t dh_, bool diag) : m(m_), da(da_), dh(dh_), diagonal(diag) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = diag ? i : i + 1; j < m; ++j) {
        slots.push_back({i, j});
        offset.push_back(dim);
        dim += i == j ? dh : da;
      }
  }
};

}  // namespace

JordanPair hermitian_pair(const RingSpec::Ptr& ring, std::size_t m) {
  if (m < 2) throw Error("hermitian pair needs |I| >= 2");
  const RingSpec& a = *ring;
  if (!a.has_involution() && !a.commutative()) throw Error("hermitian pair needs a ring with involution");
  Coeff n = a.characteristic();
  std::size_t da = a.dim();
  ModMatrix jm = a.has_involution() ? *a.involution_matrix() : ModMatrix::identity(da, n);
  auto h = std::make_shared<Submodule>(kernel_module(jm - ModMatrix::identity(da, n)));
  if (!h->is_free()) throw Error("symmetric elements of " + a.name() + " do not form a free module");
  auto lay = std::make_shared<SymLayout>(m, da, h->rank(), true);
  auto invol = [ring, jm](const Vec& x) { return ring->has_involution() ? jm.apply(x) : x; };
  auto embed = [ring, lay, h, invol](const Vec& x) {
    Dense d = dense_zero(*ring, lay->m, lay->m);
    for (std::size_t s = 0; s < lay->slots.size(); ++s) {
      auto [i, j] = lay->slots[s];
      if (i == j) {
        d.at(i, i) = h->combine(slice(x, lay->offset[s], lay->dh));
      } else {
        Vec v = slice(x, lay->offset[s], lay->da);
        d.at(i, j) = v;
        d.at(j, i) = invol(v);
      }
    }
    return d;
  };
  auto extract = [lay, h](const Dense& d) {
    Vec out(lay->dim, 0);
    for (std::size_t s = 0; s < lay->slots.size(); ++s) {
      auto [i, j] = lay->slots[s];
      if (i == j) {
        auto c = h->coordinates(d.at(i, i));
        if (!c) throw Error("diagonal entry is not symmetric");
        put(out, lay->offset[s], *c);
      } else {
        put(out, lay->offset[s], d.at(i, j));
      }
    }
    return out;
  };
  JordanPair::QFunc q = [ring, embed, extract](const Vec& x, const Vec& y) {
    Dense X = embed(x), Y = embed(y);
    return extract(dense_mul(*ring, dense_mul(*ring, X, Y), X));
  };
  std::string name = "H" + std::to_string(m) + "(" + a.name() + ")";
  JordanPair pair = JordanPair::from_closures(name, PairKind::Hermitian, n, {lay->dim, lay->dim}, {q, q});
  std::vector<std::optional<Block>> blocks;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < lay->slots.size(); ++s) {
    auto [i, j] = lay->slots[s];
    std::size_t len = i == j ? lay->dh : lay->da;
    for (std::size_t t = 0; t < len; ++t) {
      blocks.push_back(Block{static_cast<int>(i + 1), static_cast<int>(j + 1)});
      std::string lab = i == j ? (lay->dh == 1 ? "" : "s" + std::to_string(t) + ".") : ring_label(a, t);
      labels.push_back(lab + "h" + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  }
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    pair.set_blocks(s, blocks);
    pair.set_labels(s, labels);
  }
  pair.set_ring(ring);
  pair.set_indices(IndexSet::range(1, static_cast<int>(m)), IndexSet());
  return pair;
}

JordanPair alternating_pair(const RingSpec::Ptr& ring, std::size_t m) {
  if (m < 2) throw Error("alternating pair needs |I| >= 2");
  const RingSpec& a = *ring;
  if (!a.commutative()) throw Error("alternating pair needs a commutative ring");
  Coeff n = a.characteristic();
  auto lay = std::make_shared<SymLayout>(m, a.dim(), 0, false);
  auto embed = [ring, lay](const Vec& x) {
    Dense d = dense_zero(*ring, lay->m, lay->m);
    for (std::size_t s = 0; s < lay->slots.size(); ++s) {
      auto [i, j] = lay->slots[s];
      Vec v = slice(x, lay->offset[s], lay->da);
      d.at(i, j) = v;
      d.at(j, i) = ring->neg(v);
    }
    return d;
  };
  auto extract = [lay](const Dense& d) {
    Vec out(lay->dim, 0);
    for (std::size_t s = 0; s < lay->slots.size(); ++s) put(out, lay->offset[s], d.at(lay->slots[s].first, lay->slots[s].second));
    return out;
  };
  JordanPair::QFunc q = [ring, embed, extract](const Vec& x, const Vec& y) {
    Dense X = embed(x), Y = embed(y);
    return extract(dense_mul(*ring, dense_mul(*ring, X, Y), X));
  };
  std::string name = "Alt" + std::to_string(m) + "(" + a.name() + ")";
  JordanPair pair = JordanPair::from_closures(name, PairKind::Alternating, n, {lay->dim, lay->dim}, {q, q});
  std::vector<std::optional<Block>> blocks;
  std::vector<std::string> labels;
  for (auto [i, j] : lay->slots)
    for (std::size_t t = 0; t < a.dim(); ++t) {
      blocks.push_back(Block{static_cast<int>(i + 1), static_cast<int>(j + 1)});
      labels.push_back(ring_label(a, t) + "a" + std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    pair.set_blocks(s, blocks);
    pair.set_labels(s, labels);
  }
  pair.set_ring(ring);
  pair.set_indices(IndexSet::range(1, static_cast<int>(m)), IndexSet());
  return pair;
}

JordanPair quadform_pair(Coeff n, const Vec& q, const ModMatrix& b,
                         std::optional<std::pair<std::size_t, std::size_t>> hyperbolic) {
  std::size_t d = q.size();
  if (b.rows() != d || b.cols() != d || b.modulus() != n) throw Error("polar form has the wrong shape");
  for (std::size_t i = 0; i < d; ++i) {
    if (b.at(i, i) != mod_mul(2, q[i], n)) throw Error("polar form diagonal is not 2q");
    for (std::size_t j = 0; j < d; ++j)
      if (b.at(i, j) != b.at(j, i)) throw Error("polar form is not symmetric");
  }
  if (hyperbolic) {
    auto [hp, hm] = *hyperbolic;
    if (hp >= d || hm >= d || hp == hm || q[hp] != 0 || q[hm] != 0 || b.at(hp, hm) != 1 % n)
      throw Error("marked vectors are not a hyperbolic pair");
  }
  auto qform = [q, b, n](const Vec& x) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      s += std::uint64_t{mod_mul(q[i], mod_mul(x[i], x[i], n), n)};
      for (std::size_t j = i + 1; j < x.size(); ++j) s += mod_mul(b.at(i, j), mod_mul(x[i], x[j], n), n);
    }
    return static_cast<Coeff>(s % n);
  };
  auto bform = [b, n](const Vec& x, const Vec& y) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) s += mod_mul(b.at(i, j), mod_mul(x[i], y[j], n), n);
    return static_cast<Coeff>(s % n);
  };
  JordanPair::QFunc qf = [qform, bform, n](const Vec& x, const Vec& y) {
    return vec::sub(vec::scale(bform(x, y), x, n), vec::scale(qform(x), y, n), n);
  };
  std::string name = "J(M" + std::to_string(d) + ",q,Z/" + std::to_string(n) + ")";
  JordanPair pair = JordanPair::from_closures(name, PairKind::Quadform, n, {d, d}, {qf, qf});
  pair.set_form(q, b);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("m" + std::to_string(i));
  if (hyperbolic) {
    pair.set_hyperbolic(*hyperbolic);
    labels[hyperbolic->first] = "h+";
    labels[hyperbolic->second] = "h-";
  }
  for (Sign s : {Sign::Plus, Sign::Minus}) pair.set_labels(s, labels);
  return pair;
}

JordanPair quadform_hyperbolic(Coeff n, const Vec& extra) {
  std::size_t d = 2 + extra.size();
  Vec q(d, 0);
  ModMatrix b(d, d, n);
  b.at(0, 1) = b.at(1, 0) = 1 % n;
  for (std::size_t k = 0; k < extra.size(); ++k) {
    q[2 + k] = extra[k] % n;
    b.at(2 + k, 2 + k) = mod_mul(2, q[2 + k], n);
  }
  JordanPair p = quadform_pair(n, q, b, std::pair<std::size_t, std::size_t>{0, 1});
  std::string name = "J(hyp";
  for (auto e : extra) name += "+<" + std::to_string(e) + ">";
  p.set_name(name + ",Z/" + std::to_string(n) + ")");
  return p;
}

JordanPair rect_subpair(const RingSpec::Ptr& ring, std::size_t p, std::size_t q, const Submodule& a,
                        const Submodule& b) {
  JordanPair r = rect_pair(ring, p, q);
  std::size_t da = ring->dim();
  if (a.ambient_dim() != da || b.ambient_dim() != da) throw Error("submodules must live in the ring");
  auto gen_list = [](const Submodule& m) {
    if (m.is_field() || m.is_free()) return m.basis();
    std::vector<Vec> out;
    for (auto& e : m.elements())
      if (!vec::is_zero(e)) out.push_back(e);
    return out;
  };
  std::array<std::vector<Vec>, 2> gens;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    auto src = gen_list(s == Sign::Plus ? a : b);
    std::size_t d = r.dim(s);
    for (std::size_t blk = 0; blk < p * q; ++blk)
      for (auto& g : src) {
        Vec v(d, 0);
        put(v, blk * da, g);
        gens[idx(s)].push_back(v);
      }
  }
  Coeff n = ring->characteristic();
  PairIdeal sub{Submodule(n, r.dim(Sign::Plus), gens[0]), Submodule(n, r.dim(Sign::Minus), gens[1])};
  JordanPair out = subpair(r, sub);
  out.set_name("rect(" + ring->name() + "," + std::to_string(p) + "," + std::to_string(q) + ";a,b)");
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    std::vector<std::string> labels;
    for (auto& v : out.parent_basis(s)) {
      std::string l = "[";
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) l += (l.size() > 1 ? "+" : "") + std::to_string(v[k]) + r.labels(s)[k];
      labels.push_back(l + "]");
    }
    out.set_labels(s, labels);
  }
  return out;
}

}  // namespace jpst
