#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jpst/pegroup.hpp"
#include "jpst/presentation.hpp"
#include "jpst/todd_coxeter.hpp"

namespace jpst {

// Assignment of target elements to the generators of a presentation.
template <class E>
struct Homomorphism {
  std::vector<E> images;
  std::vector<E> inverses;
  E identity;
  std::function<E(const E&, const E&)> mul;

  E letter(int l) const { return (l & 1) ? inverses[static_cast<std::size_t>(l / 2)] : images[static_cast<std::size_t>(l / 2)]; }
  E eval(const Word& w) const {
    E r = identity;
    for (int l : w) r = mul(r, letter(l));
    return r;
  }
};

// x_ij(a) -> e_ij(a) in EL_n(A).
Homomorphism<FinMatrix> linear_hom(const Presentation& p);
// x+(u) -> e+(u), x-(v) -> e-(v) in EL_N(A), N = I + J.
Homomorphism<FinMatrix> rect_hom(const Presentation& p);
// x_s(u) -> exp_s(u) in PE(V).
Homomorphism<ModMatrix> pi_hom(const Presentation& p, const TkkAlgebra& alg);

// Every relator must evaluate to the identity. With a target order, the
// closure of the generator images must reach it.
template <class E, class Hash>
Report evaluate_hom(const Presentation& p, const Homomorphism<E>& h, std::optional<std::size_t> target_order = {},
                    std::size_t cap = 1'000'000) {
  Report rep("hom " + p.name());
  auto& c = rep.check("relators");
  std::map<std::string, std::size_t> failures;
  for (std::size_t k = 0; k < p.relators().size(); ++k) {
    bool ok = h.eval(p.relators()[k]) == h.identity;
    if (!ok) ++failures[p.schema()[k]];
    c.expect(ok, p.schema()[k] + ": " + p.word_str(p.relators()[k]));
  }
  rep.data()["relators"] = p.relators().size();
  rep.data()["failures by schema"] = failures;
  if (target_order) {
    auto g = FiniteGroup<E, Hash>::closure(h.images, h.identity, h.mul, cap);
    rep.check("surjective").expect(g.order() == *target_order, "image order " + std::to_string(g.order()) +
                                                                   " of " + std::to_string(*target_order));
    rep.data()["image order"] = g.order();
  }
  return rep;
}

// Phi followed by the map to EL agrees with the linear map: generator images,
// and x_kl(a) = ((x_kj(a), x_jl(1))) for k, l in I, j in J (and the J variant).
Report verify_phi_triangle(const RingSpec::Ptr& ring, std::size_t p, std::size_t q);

// x+(u) x-(v) = x-(v + Q_v u) b(u, v) x+(u + Q_u v) in PE, and in EL for A^I
// gradings; b(u, v) acts as (B(u, v), B(v, u)^-1) when invertible.
Report verify_b_words(const RootGrading& g, std::size_t max_instances = 10'000'000);

// Kernel of the map from the enumerated group (complete table, trivial
// subgroup) to the target, and whether it is central.
template <class E, class Hash>
Report kernel_centrality_report(const CosetTable& t, const Homomorphism<E>& h) {
  if (!t.complete) throw Error("kernel centrality needs a closed coset table");
  Report rep("kernel centrality");
  std::size_t n = t.size(), gens = t.generators;
  // image of each coset along the BFS tree; then check every edge
  std::vector<std::optional<E>> img(n);
  std::vector<Word> words(n);
  img[0] = h.identity;
  std::vector<std::size_t> order{0};
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t s = 0; s < gens; ++s) {
      auto d = static_cast<std::size_t>(t.act(static_cast<int>(order[k]), static_cast<int>(2 * s)));
      if (!img[d]) {
        img[d] = h.mul(*img[order[k]], h.images[s]);
        words[d] = words[order[k]];
        words[d].push_back(static_cast<int>(2 * s));
        order.push_back(d);
      }
    }
  auto& wd = rep.check("well defined");
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t s = 0; s < gens; ++s) {
      auto d = static_cast<std::size_t>(t.act(static_cast<int>(c), static_cast<int>(2 * s)));
      wd.expect(*img[d] == h.mul(*img[c], h.images[s]), "coset " + std::to_string(c) + " generator " + std::to_string(s));
    }
  std::vector<std::size_t> kernel;
  std::unordered_map<E, std::size_t, Hash> distinct;
  for (std::size_t c = 0; c < n; ++c) {
    distinct.emplace(*img[c], c);
    if (*img[c] == h.identity) kernel.push_back(c);
  }
  // kernel element g = coset 0.g commutes with generator s iff (0.s).g == 0.g.s
  auto& central = rep.check("kernel central");
  for (auto g : kernel)
    for (std::size_t s = 0; s < gens; ++s) {
      int gs = t.act(static_cast<int>(g), static_cast<int>(2 * s));
      int sg = t.act(t.act(0, static_cast<int>(2 * s)), words[g]);
      central.expect(gs == sg, "kernel coset " + std::to_string(g) + " and generator " + std::to_string(s));
    }
  rep.data()["group order"] = n;
  rep.data()["image order"] = distinct.size();
  rep.data()["kernel order"] = kernel.size();
  rep.data()["verdict"] = central.passed() ? "central" : "not central";
  return rep;
}

}  // namespace jpst
