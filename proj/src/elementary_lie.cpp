#include "jpst/elementary_lie.hpp"

namespace jpst {

namespace {

Vec slice(const Vec& v, std::size_t off, std::size_t len) {
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + len));
}

void put(Vec& v, std::size_t off, const Vec& a) {
  for (std::size_t t = 0; t < a.size(); ++t) v[off + t] = a[t];
}

std::vector<Vec> ring_units(const RingSpec& a) {
  std::vector<Vec> out;
  for (std::size_t t = 0; t < a.dim(); ++t) out.push_back(vec::unit(a.dim(), t));
  return out;
}

}  // namespace

ElementaryLie ElementaryLie::build(RingSpec::Ptr ring, std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw Error("elementary Lie algebra needs nonempty I and J");
  ElementaryLie e;
  e.ring_ = std::move(ring);
  e.p_ = p;
  e.q_ = q;
  std::size_t n = e.size();
  std::vector<Vec> gens{e.e1(), e.e2()};
  for (auto& a : ring_units(*e.ring_))
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = p; c < n; ++c) {
        gens.push_back(e.entry(r, c, a));
        gens.push_back(e.entry(c, r, a));
      }
  Submodule s(e.modulus(), e.ambient_dim(), gens);
  for (;;) {
    std::vector<Vec> next = s.basis();
    bool grew = false;
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        Vec c = e.bracket(b[i], b[j]);
        if (!s.contains(c)) {
          next.push_back(c);
          grew = true;
        }
      }
    if (!grew) break;
    s = Submodule(e.modulus(), e.ambient_dim(), next);
  }
  e.span_ = s;
  return e;
}

Vec ElementaryLie::e1() const {
  Vec v(ambient_dim(), 0);
  for (std::size_t r = 0; r < p_; ++r) v = vec::add(v, entry(r, r, ring_->one()), modulus());
  return v;
}

Vec ElementaryLie::e2() const {
  Vec v(ambient_dim(), 0);
  for (std::size_t r = p_; r < size(); ++r) v = vec::add(v, entry(r, r, ring_->one()), modulus());
  return v;
}

Vec ElementaryLie::entry(std::size_t r, std::size_t c, const Vec& a) const {
  Vec v(ambient_dim(), 0);
  put(v, (r * size() + c) * ring_->dim(), a);
  return v;
}

Vec ElementaryLie::get(const Vec& m, std::size_t r, std::size_t c) const {
  return slice(m, (r * size() + c) * ring_->dim(), ring_->dim());
}

Vec ElementaryLie::product(const Vec& a, const Vec& b) const {
  std::size_t n = size(), da = ring_->dim();
  Vec out(ambient_dim(), 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      Vec x = get(a, r, k);
      if (vec::is_zero(x)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        Vec y = get(b, k, c);
        if (vec::is_zero(y)) continue;
        std::size_t off = (r * n + c) * da;
        put(out, off, ring_->add(slice(out, off, da), ring_->mul(x, y)));
      }
    }
  return out;
}

Vec ElementaryLie::bracket(const Vec& a, const Vec& b) const {
  return vec::sub(product(a, b), product(b, a), modulus());
}

Vec ElementaryLie::from_fin(const FinMatrix& g) const {
  if (g.rows().size() != size() || g.cols().size() != size())
    throw Error("matrix of size " + std::to_string(g.rows().size()) + " on N of size " + std::to_string(size()));
  Vec v(ambient_dim(), 0);
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c)
      put(v, (r * size() + c) * ring_->dim(), ring_->coords(g.at(g.rows()[r], g.cols()[c])));
  return v;
}

FinMatrix pair_block(const RingSpec::Ptr& ring, std::size_t p, std::size_t q, Sign s, const Vec& w) {
  std::size_t da = ring->dim();
  if (w.size() != p * q * da) throw Error("block: wrong coordinate length");
  IndexSet i = IndexSet::range(1, static_cast<int>(p)), j = IndexSet::range(static_cast<int>(p) + 1, static_cast<int>(p + q));
  bool plus = s == Sign::Plus;
  FinMatrix m(ring, plus ? i : j, plus ? j : i);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < q; ++c) {
      std::size_t off = (plus ? r * q + c : c * p + r) * da;
      auto code = ring->code(slice(w, off, da));
      if (plus)
        m.set(i[r], j[c], code);
      else
        m.set(j[c], i[r], code);
    }
  return m;
}

FinMatrix ElementaryLie::block(Sign s, const Vec& w) const { return pair_block(ring_, p_, q_, s, w); }

FinMatrix ElementaryLie::e(Sign s, const Vec& w) const { return e_block(s, block(s, w), index_i(), index_j()); }

Submodule ElementaryLie::centre() const {
  const auto& b = basis();
  std::size_t m = b.size(), d = ambient_dim();
  ModMatrix eq(m * d, m, modulus());
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < m; ++j) {
      Vec c = bracket(b[k], b[j]);
      for (std::size_t s = 0; s < d; ++s) eq.at(j * d + s, k) = c[s];
    }
  std::vector<Vec> gens;
  Submodule ker = kernel_module(eq);
  for (auto& l : ker.basis()) gens.push_back(span_.combine(l));
  return Submodule(modulus(), d, gens);
}

Submodule ElementaryLie::centre_formula() const {
  std::size_t da = ring_->dim();
  auto units = ring_units(*ring_);
  ModMatrix eq(da * da, da, modulus());
  for (std::size_t u = 0; u < da; ++u)
    for (std::size_t t = 0; t < da; ++t) {
      Vec c = ring_->sub(ring_->mul(units[u], units[t]), ring_->mul(units[t], units[u]));
      for (std::size_t s = 0; s < da; ++s) eq.at(t * da + s, u) = c[s];
    }
  std::vector<Vec> gens;
  Submodule centre_a = kernel_module(eq);
  for (auto& z : centre_a.basis()) {
    Vec v(ambient_dim(), 0);
    for (std::size_t r = 0; r < size(); ++r) v = vec::add(v, entry(r, r, z), modulus());
    gens.push_back(v);
  }
  return Submodule(modulus(), ambient_dim(), gens).intersect(span_);
}

Submodule ElementaryLie::span_formula() const {
  std::size_t n = size();
  auto units = ring_units(*ring_);
  std::vector<Vec> gens{e1(), e2()};
  for (auto& a : units) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) gens.push_back(entry(r, c, a));
    for (std::size_t r = 1; r < n; ++r) gens.push_back(vec::sub(entry(0, 0, a), entry(r, r, a), modulus()));
    for (auto& b : units) gens.push_back(entry(0, 0, ring_->sub(ring_->mul(a, b), ring_->mul(b, a))));
  }
  return Submodule(modulus(), ambient_dim(), gens);
}

PsiMap::PsiMap(const ElementaryLie& e, const TkkAlgebra& alg) : e_(&e), alg_(&alg) {
  const auto& pair = alg.pair();
  if (pair.dim(Sign::Plus) != e.p() * e.q() * e.ring()->dim() || pair.modulus() != e.modulus())
    throw Error("Psi needs the rectangular pair of the same shape");
  std::vector<Vec> images;
  for (auto& b : e.basis()) images.push_back(apply(b));
  ModMatrix m = ModMatrix::from_columns(images, alg.dim(), alg.modulus());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    auto l = solve(m, vec::unit(alg.dim(), i));
    if (!l) {
      preimage_.clear();
      return;
    }
    preimage_.push_back(e.span().combine(*l));
  }
}

Vec PsiMap::apply(const Vec& m) const {
  const auto& e = *e_;
  const auto& a = *e.ring();
  std::size_t p = e.p(), q = e.q(), da = a.dim(), dp = p * q * da;
  Coeff n = e.modulus();
  Vec x(dp, 0), y(dp, 0);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < q; ++c) {
      put(x, (r * q + c) * da, e.get(m, r, p + c));
      put(y, (c * p + r) * da, a.neg(e.get(m, p + c, r)));
    }
  // Delta+(u) = a u - u d on p x q matrices, Delta-(v) = d v - v a on q x p.
  OpPair ops{ModMatrix(dp, dp, n), ModMatrix(dp, dp, n)};
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < q; ++c)
      for (std::size_t t = 0; t < da; ++t) {
        Vec u = vec::unit(da, t);
        Vec dplus(dp, 0), dminus(dp, 0);
        auto acc = [&](Vec& out, std::size_t off, const Vec& val) { put(out, off, a.add(slice(out, off, da), val)); };
        for (std::size_t k = 0; k < p; ++k) {
          // (a u)_{k c} = a_{k r} u ; (v a)_{c k} = v a_{r k}
          acc(dplus, (k * q + c) * da, a.mul(e.get(m, k, r), u));
          acc(dminus, (c * p + k) * da, a.neg(a.mul(u, e.get(m, r, k))));
        }
        for (std::size_t k = 0; k < q; ++k) {
          // (u d)_{r k} = u d_{c k} ; (d v)_{k r} = d_{k c} v
          acc(dplus, (r * q + k) * da, a.neg(a.mul(u, e.get(m, p + c, p + k))));
          acc(dminus, (k * p + r) * da, a.mul(e.get(m, p + k, p + c), u));
        }
        ops.plus.set_column((r * q + c) * da + t, dplus);
        ops.minus.set_column((c * p + r) * da + t, dminus);
      }
  Vec out = alg_->from_ops(ops);
  out = vec::add(out, alg_->from_plus(x), n);
  return vec::add(out, alg_->from_minus(y), n);
}

ModMatrix PsiMap::uad(const FinMatrix& g) const {
  if (preimage_.empty() && alg_->dim() > 0) throw Error("Psi is not surjective");
  const auto& e = *e_;
  Vec gm = e.from_fin(g), gi = e.from_fin(g.inverse());
  ModMatrix out(alg_->dim(), alg_->dim(), alg_->modulus());
  for (std::size_t k = 0; k < preimage_.size(); ++k) {
    Vec img = e.product(e.product(gm, preimage_[k]), gi);
    if (!e.span().contains(img)) throw Error("Ad g does not stabilize e");
    out.set_column(k, apply(img));
  }
  return out;
}

Report verify_psi(const RingSpec::Ptr& ring, std::size_t p, std::size_t q) {
  if (!is_prime(ring->characteristic())) throw Error("Psi check needs prime characteristic");
  auto e = ElementaryLie::build(ring, p, q);
  auto alg = TkkAlgebra::build(rect_pair(ring, p, q));
  PsiMap psi(e, alg);
  Coeff n = e.modulus();
  const auto& b = e.basis();
  std::vector<Vec> img;
  for (auto& v : b) img.push_back(psi.apply(v));

  Report rep("psi " + ring->name() + " " + std::to_string(p) + "," + std::to_string(q));
  auto& lin = rep.check("linear");
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      Coeff c = static_cast<Coeff>((i + 2 * j + 1) % n);
      Vec lhs = psi.apply(vec::add(b[i], vec::scale(c, b[j], n), n));
      lin.expect(lhs == vec::add(img[i], vec::scale(c, img[j], n), n),
                 "basis " + std::to_string(i) + ", " + std::to_string(j));
    }
  auto& br = rep.check("bracket");
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      br.expect(psi.apply(e.bracket(b[i], b[j])) == alg.bracket(img[i], img[j]),
                "basis " + std::to_string(i) + ", " + std::to_string(j));

  Submodule image(n, alg.dim(), img);
  rep.check("surjective").expect(image.rank() == alg.dim(), "image rank " + std::to_string(image.rank()) + " of " + std::to_string(alg.dim()));

  ModMatrix pm = ModMatrix::from_columns(img, alg.dim(), n);
  std::vector<Vec> ker;
  Submodule ker_coords = kernel_module(pm);
  for (auto& l : ker_coords.basis()) ker.push_back(e.span().combine(l));
  Submodule kernel(n, e.ambient_dim(), ker);
  Submodule centre = e.centre();
  rep.check("kernel is centre").expect(kernel == centre, "kernel rank " + std::to_string(kernel.rank()) + ", centre rank " + std::to_string(centre.rank()));
  rep.check("centre formula").expect(centre == e.centre_formula(), "centre differs");
  rep.check("span formula").expect(e.span() == e.span_formula(), "e differs");
  rep.check("dimensions").expect(e.dim() == centre.rank() + alg.dim(), std::to_string(e.dim()) + " != " + std::to_string(centre.rank()) + " + " + std::to_string(alg.dim()));
  auto& z = rep.check("zeta");
  z.expect(psi.apply(e.e1()) == alg.zeta(), "Psi(e1) != zeta");
  z.expect(psi.apply(e.e2()) == vec::neg(alg.zeta(), n), "Psi(e2) != -zeta");

  rep.data()["dim e"] = e.dim();
  rep.data()["dim centre"] = centre.rank();
  rep.data()["dim tkk"] = alg.dim();
  return rep;
}

}  // namespace jpst
