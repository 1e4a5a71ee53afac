#include "jpst/pegroup.hpp"

#include <map>

namespace jpst {

namespace {

PeGroup::Mul matrix_mul() {
  return [](const ModMatrix& a, const ModMatrix& b) { return a * b; };
}

std::vector<ModMatrix> exp_generators(const TkkAlgebra& alg) {
  std::vector<ModMatrix> gens;
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (std::size_t k = 0; k < alg.pair().dim(s); ++k)
      gens.push_back(exp_aut(alg, s, vec::unit(alg.pair().dim(s), k), false));
  return gens;
}

Perm cycle(std::size_t n, std::vector<std::uint32_t> pts) {
  Perm p = Perm::identity(n);
  for (std::size_t i = 0; i < pts.size(); ++i) p.img[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

std::string show(const GroupFingerprint& f) { return f.to_json().dump(); }

}  // namespace

PeGroup pe_group(const TkkAlgebra& alg, std::size_t cap) {
  return PeGroup::closure(exp_generators(alg), ModMatrix::identity(alg.dim(), alg.modulus()), matrix_mul(), cap);
}

GroupReport symmetric_fingerprint(std::size_t n) {
  if (n < 2) return fingerprint(perm_group({}, n));
  std::vector<std::uint32_t> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(static_cast<std::uint32_t>(i));
  return fingerprint(perm_group({cycle(n, {0, 1}), cycle(n, all)}, n));
}

GroupReport alternating_fingerprint(std::size_t n) {
  if (n < 3) return fingerprint(perm_group({}, n));
  std::vector<Perm> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(cycle(n, {0, 1, k}));
  return fingerprint(perm_group(gens, n));
}

NamedMatch matches_symmetric(const PeGroup& g, std::size_t n) {
  auto f = group_analyze(g);
  auto ref = symmetric_fingerprint(n);
  if (!(f == ref)) return {false, "fingerprint " + show(f) + " vs S" + std::to_string(n) + " " + show(ref)};
  if (n >= 5) {
    auto d = subgroup_fingerprint(g, derived_subgroup(g));
    auto an = alternating_fingerprint(n);
    if (!(d == an)) return {false, "derived subgroup " + show(d) + " vs A" + std::to_string(n) + " " + show(an)};
  }
  return {true, "S" + std::to_string(n)};
}

NamedMatch matches_alternating(const PeGroup& g, std::size_t n) {
  auto f = group_analyze(g);
  auto ref = alternating_fingerprint(n);
  if (!(f == ref)) return {false, "fingerprint " + show(f) + " vs A" + std::to_string(n) + " " + show(ref)};
  return {true, "A" + std::to_string(n)};
}

Report verify_pe_quotient(const RingSpec::Ptr& ring, std::size_t p, std::size_t q, std::size_t cap) {
  // centre and preimages need linear solves
  if (!is_prime(ring->characteristic())) throw Error("PE quotient check needs field scalars");
  Report rep("pe quotient " + ring->name() + " " + std::to_string(p) + "," + std::to_string(q));
  auto e = ElementaryLie::build(ring, p, q);
  auto alg = TkkAlgebra::build(rect_pair(ring, p, q));
  PsiMap psi(e, alg);
  auto el = el_group(ring, IndexSet::range(1, static_cast<int>(p + q)), cap);
  auto pe = pe_group(alg, cap);

  auto& gen = rep.check("uad on generators");
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (auto& w : alg.pair().elements(s))
      gen.expect(psi.uad(e.e(s, w)) == exp_aut(alg, s, w, false),
                 std::string("uad e") + sign_str(s) + vec::str(w) + " != exp");

  std::vector<ModMatrix> img;
  img.reserve(el.order());
  for (auto& g : el.elements()) img.push_back(psi.uad(g));

  auto& hom = rep.check("uad multiplicative");
  std::vector<ModMatrix> gen_img;
  for (auto& g : el.generators()) gen_img.push_back(psi.uad(g));
  for (std::size_t i = 0; i < el.order(); ++i)
    for (std::size_t s = 0; s < gen_img.size(); ++s)
      hom.expect(img[el.act(i, s)] == img[i] * gen_img[s],
                 "element " + std::to_string(i) + " times generator " + std::to_string(s));

  auto& in = rep.check("image in PE");
  std::unordered_map<ModMatrix, std::size_t, ModMatrixHash> image;
  for (std::size_t i = 0; i < el.order(); ++i) {
    in.expect(pe.contains(img[i]), "uad of element " + std::to_string(i) + " outside PE");
    image.emplace(img[i], i);
  }
  rep.check("onto PE").expect(image.size() == pe.order(), "image order " + std::to_string(image.size()) +
                                                              ", |PE| " + std::to_string(pe.order()));

  std::vector<std::size_t> kernel;
  for (std::size_t i = 0; i < el.order(); ++i)
    if (img[i].is_identity()) kernel.push_back(i);
  auto centre = group_centre(el);
  rep.check("kernel is centre").expect(kernel == centre, "kernel order " + std::to_string(kernel.size()) +
                                                             ", centre order " + std::to_string(centre.size()));
  rep.check("index").expect(el.order() == centre.size() * pe.order(),
                            std::to_string(el.order()) + " / " + std::to_string(centre.size()) +
                                " != " + std::to_string(pe.order()));
  rep.data()["EL order"] = el.order();
  rep.data()["centre order"] = centre.size();
  rep.data()["PE order"] = pe.order();
  return rep;
}

RelativeKernel pe_relative_kernel(const JordanPair& pair, const PairIdeal& ideal, std::size_t cap) {
  JordanPair quot = quotient_pair(pair, ideal, cap);
  auto alg = TkkAlgebra::build(pair);
  auto qalg = TkkAlgebra::build(quot);
  RelativeKernel out;
  out.group = pe_group(alg, cap);

  // canonical projection V -> V/I through coset representatives
  std::array<std::map<Vec, Vec>, 2> proj;
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (auto& c : quot.elements(s, cap)) {
      Vec v(pair.dim(s), 0);
      for (std::size_t k = 0; k < c.size(); ++k) vec::axpy(c[k], quot.parent_basis(s)[k], v, pair.modulus());
      proj[idx(s)][ideal.at(s).canonical(v)] = c;
    }
  auto can = [&](Sign s, const Vec& v) {
    auto it = proj[idx(s)].find(ideal.at(s).canonical(v));
    if (it == proj[idx(s)].end()) throw Error("projection: no coset for " + vec::str(v));
    return it->second;
  };

  std::vector<ModMatrix> gen_img;
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (std::size_t k = 0; k < pair.dim(s); ++k)
      gen_img.push_back(exp_aut(qalg, s, can(s, vec::unit(pair.dim(s), k)), false));
  out.image = PeGroup::closure(gen_img, ModMatrix::identity(qalg.dim(), qalg.modulus()), matrix_mul(), cap);

  const auto& g = out.group;
  std::vector<std::size_t> image_of(g.order(), 0);
  std::vector<char> known(g.order(), 0);
  known[0] = 1;
  auto& hom = out.report.check("well defined");
  // BFS order: every element's parent comes first
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t s = 0; s < gen_img.size(); ++s) {
      std::size_t j = g.act(i, s);
      std::size_t v = out.image.act(image_of[i], s);
      if (!known[j]) {
        image_of[j] = v;
        known[j] = 1;
      } else {
        hom.expect(image_of[j] == v, "element " + std::to_string(i) + " times generator " + std::to_string(s));
      }
    }
  }
  for (std::size_t i = 0; i < g.order(); ++i)
    if (image_of[i] == out.image.identity()) out.kernel.push_back(i);

  auto& normal = out.report.check("normal");
  std::vector<char> in_kernel(g.order(), 0);
  for (auto k : out.kernel) in_kernel[k] = 1;
  for (auto s : g.generator_indices()) {
    std::size_t si = g.inverse(s);
    for (auto k : out.kernel)
      normal.expect(in_kernel[g.mul(g.mul(s, k), si)], "conjugate of kernel element " + std::to_string(k));
  }
  out.report.check("index").expect(g.order() == out.kernel.size() * out.image.order(),
                                   std::to_string(g.order()) + " != " + std::to_string(out.kernel.size()) + " * " +
                                       std::to_string(out.image.order()));
  out.report.data()["PE order"] = g.order();
  out.report.data()["quotient PE order"] = out.image.order();
  out.report.data()["kernel order"] = out.kernel.size();
  return out;
}

Vec pair_inverse(const JordanPair& pair, Sign s, const Vec& b) {
  if (vec::is_zero(b)) throw Error("zero has no inverse");
  auto qi = invert(pair.Q_map(s, b));
  if (!qi) throw Error("Q(" + vec::str(b) + ") is not invertible");
  return qi->apply(b);
}

ModMatrix weyl_element(const TkkAlgebra& alg, const Vec& b) {
  const auto& pair = alg.pair();
  if (vec::is_zero(b)) throw Error("Weyl element needs b != 0");
  if (!is_division_pair(pair)) throw Error(pair.name() + " is not a division pair");
  ModMatrix m = exp_aut(alg, Sign::Minus, pair_inverse(pair, Sign::Plus, b), false);
  return m * exp_aut(alg, Sign::Plus, b, false) * m;
}

Report verify_weyl(const TkkAlgebra& alg) {
  const auto& pair = alg.pair();
  Report rep("weyl " + pair.name());
  auto& c = rep.check("Weyl relation");
  for (auto& b : pair.elements(Sign::Plus)) {
    if (vec::is_zero(b)) continue;
    ModMatrix w = weyl_element(alg, b);
    auto wi = invert(w);
    if (!wi) {
      c.fail("w_" + vec::str(b) + " not invertible");
      continue;
    }
    for (auto& a : pair.elements(Sign::Minus))
      c.expect(w * exp_aut(alg, Sign::Minus, a, false) * *wi ==
                   exp_aut(alg, Sign::Plus, pair.Q(Sign::Plus, b, a), false),
               "b = " + vec::str(b) + ", a = " + vec::str(a));
  }
  return rep;
}

}  // namespace jpst
