#include "jpst/steinberg.hpp"

namespace jpst {

namespace {

std::function<FinMatrix(const FinMatrix&, const FinMatrix&)> fin_mul() {
  return [](const FinMatrix& a, const FinMatrix& b) { return a * b; };
}

struct RectShape {
  RingSpec::Ptr ring;
  std::size_t p = 0, q = 0;
};

RectShape rect_shape(const JordanPair& pair) {
  if (pair.kind() != PairKind::Rect && pair.kind() != PairKind::Full)
    throw Error(pair.name() + " is not a rectangular matrix pair");
  return {pair.ring(), pair.index_i().size(), pair.index_j().size()};
}

FinMatrix e_of(const RectShape& r, Sign s, const Vec& w) {
  return e_block(s, pair_block(r.ring, r.p, r.q, s, w), IndexSet::range(1, static_cast<int>(r.p)),
                 IndexSet::range(static_cast<int>(r.p) + 1, static_cast<int>(r.p + r.q)));
}

// a E_ij in V+ (i in I, j in J) or in V- (i in J, j in I); labels from 1.
Vec unit_block(const RectShape& r, Sign s, std::size_t i, std::size_t j, const Vec& a) {
  std::size_t da = r.ring->dim();
  Vec v(r.p * r.q * da, 0);
  std::size_t off = s == Sign::Plus ? ((i - 1) * r.q + (j - r.p - 1)) * da : ((i - r.p - 1) * r.p + (j - 1)) * da;
  for (std::size_t t = 0; t < da; ++t) v[off + t] = a[t];
  return v;
}

std::vector<Vec> ring_elements(const RingSpec& a) {
  std::vector<Vec> out;
  for (std::uint64_t c = 0; c < a.cardinality(); ++c) out.push_back(a.coords(static_cast<RingSpec::Code>(c)));
  return out;
}

}  // namespace

Homomorphism<FinMatrix> linear_hom(const Presentation& p) {
  if (p.kind() != PresentationKind::Linear) throw Error("linear_hom needs a linear presentation");
  auto ring = p.ring();
  IndexSet n = IndexSet::range(1, static_cast<int>(p.size()));
  Homomorphism<FinMatrix> h{{}, {}, FinMatrix::identity(ring, n), fin_mul()};
  for (auto& g : p.generators()) {
    h.images.push_back(elementary(ring, n, g.row, g.col, ring->code(g.element)));
    h.inverses.push_back(elementary(ring, n, g.row, g.col, ring->code(ring->neg(g.element))));
  }
  return h;
}

Homomorphism<FinMatrix> rect_hom(const Presentation& p) {
  if (!p.pair()) throw Error("rect_hom needs a pair presentation");
  RectShape r = rect_shape(*p.pair());
  Coeff n = p.pair()->modulus();
  Homomorphism<FinMatrix> h{{}, {}, FinMatrix::identity(r.ring, IndexSet::range(1, static_cast<int>(r.p + r.q))),
                            fin_mul()};
  for (auto& g : p.generators()) {
    h.images.push_back(e_of(r, g.sign, g.element));
    h.inverses.push_back(e_of(r, g.sign, vec::neg(g.element, n)));
  }
  return h;
}

Homomorphism<ModMatrix> pi_hom(const Presentation& p, const TkkAlgebra& alg) {
  if (!p.pair()) throw Error("pi_hom needs a pair presentation");
  Coeff n = alg.modulus();
  Homomorphism<ModMatrix> h{{}, {}, ModMatrix::identity(alg.dim(), n),
                            [](const ModMatrix& a, const ModMatrix& b) { return a * b; }};
  for (auto& g : p.generators()) {
    h.images.push_back(exp_aut(alg, g.sign, g.element, false));
    h.inverses.push_back(exp_aut(alg, g.sign, vec::neg(g.element, n), false));
  }
  return h;
}

Report verify_phi_triangle(const RingSpec::Ptr& ring, std::size_t p, std::size_t q) {
  auto pres = rect_ej_presentation(ring, p, q);
  auto h = rect_hom(pres);
  RectShape r{ring, p, q};
  IndexSet n = IndexSet::range(1, static_cast<int>(p + q));
  auto elems = ring_elements(*ring);
  Vec one = ring->one();
  Report rep("phi triangle " + pres.name());
  auto& gen = rep.check("generators");
  auto& l1 = rep.check("less1");
  auto& l2 = rep.check("less2");
  auto e = [&](std::size_t i, std::size_t j, const Vec& a) {
    return elementary(ring, n, static_cast<int>(i), static_cast<int>(j), ring->code(a));
  };
  for (auto& a : elems) {
    for (std::size_t i = 1; i <= p; ++i)
      for (std::size_t j = p + 1; j <= p + q; ++j) {
        gen.expect(h.eval(pres.x(Sign::Plus, unit_block(r, Sign::Plus, i, j, a))) == e(i, j, a),
                   "x+(a E" + std::to_string(i) + std::to_string(j) + ")");
        gen.expect(h.eval(pres.x(Sign::Minus, unit_block(r, Sign::Minus, j, i, a))) == e(j, i, ring->neg(a)),
                   "x-(a E" + std::to_string(j) + std::to_string(i) + ")");
      }
    // x_kl(a) = ((x_kj(a), x_jl(1))), x_kj(a) = x+(a E_kj), x_jl(1) = x-(-E_jl)
    for (std::size_t k = 1; k <= p; ++k)
      for (std::size_t l = 1; l <= p; ++l) {
        if (k == l) continue;
        for (std::size_t j = p + 1; j <= p + q; ++j) {
          Word w = comm(pres.x(Sign::Plus, unit_block(r, Sign::Plus, k, j, a)),
                        pres.x(Sign::Minus, unit_block(r, Sign::Minus, j, l, ring->neg(one))));
          l1.expect(h.eval(w) == e(k, l, a), "k=" + std::to_string(k) + " l=" + std::to_string(l) + " j=" + std::to_string(j));
        }
      }
    // x_kl(a) = ((x_ki(a), x_il(1))), x_ki(a) = x-(-a E_ki), x_il(1) = x+(E_il)
    for (std::size_t k = p + 1; k <= p + q; ++k)
      for (std::size_t l = p + 1; l <= p + q; ++l) {
        if (k == l) continue;
        for (std::size_t i = 1; i <= p; ++i) {
          Word w = comm(pres.x(Sign::Minus, unit_block(r, Sign::Minus, k, i, ring->neg(a))),
                        pres.x(Sign::Plus, unit_block(r, Sign::Plus, i, l, one)));
          l2.expect(h.eval(w) == e(k, l, a), "k=" + std::to_string(k) + " l=" + std::to_string(l) + " i=" + std::to_string(i));
        }
      }
  }
  return rep;
}

Report verify_b_words(const RootGrading& g, std::size_t max_instances) {
  const JordanPair& pair = g.pair();
  Coeff n = pair.modulus();
  auto alg = TkkAlgebra::build(pair);
  auto pres = free_presentation(pair, max_instances);
  auto pi = pi_hom(pres, alg);
  std::optional<Homomorphism<FinMatrix>> el;
  if (g.grading().kind() == GradingKind::AI && (pair.kind() == PairKind::Rect || pair.kind() == PairKind::Full))
    el = rect_hom(pres);

  Report rep("b words " + g.name());
  auto& cpe = rep.check("stvr1 PE");
  auto& cel = rep.check("stvr1 EL");
  auto& berg = rep.check("Bergmann");
  std::size_t count = 0;
  for (std::size_t al = 0; al < g.roots().size(); ++al)
    for (std::size_t be = 0; be < g.roots().size(); ++be) {
      if (al == be) continue;
      for (auto& u : g.space(Sign::Plus, al).elements())
        for (auto& v : g.space(Sign::Minus, be).elements()) {
          if (++count > max_instances) throw BudgetExceeded("b word check exceeds the instance budget", count);
          Word b = b_word(pres, g, al, be, u, v);
          Word lhs = pres.x(Sign::Plus, u) * pres.x(Sign::Minus, v);
          Word rhs = pres.x(Sign::Minus, vec::add(v, pair.Q(Sign::Minus, v, u), n)) * b *
                     pres.x(Sign::Plus, vec::add(u, pair.Q(Sign::Plus, u, v), n));
          std::string where = "u = " + vec::str(u) + ", v = " + vec::str(v);
          cpe.expect(pi.eval(lhs) == pi.eval(rhs), where);
          if (el) cel.expect(el->eval(lhs) == el->eval(rhs), where);
          auto bp = bergmann(pair, u, v);
          if (bp.invertible && bp.minus_inverse)
            berg.expect(pi.eval(b) == tkk_of_pair_aut(alg, bp.plus, *bp.minus_inverse), where);
        }
    }
  rep.data()["pairs"] = count;
  rep.data()["EL checked"] = el.has_value();
  return rep;
}

}  // namespace jpst
