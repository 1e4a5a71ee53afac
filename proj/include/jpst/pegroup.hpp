#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jpst/elementary_lie.hpp"
#include "jpst/finite_group.hpp"
#include "jpst/tkk.hpp"

namespace jpst {

// Automorphisms of tkk as matrices in the tkk basis.
using PeGroup = FiniteGroup<ModMatrix, ModMatrixHash>;
using GroupReport = GroupFingerprint;

// Closure of exp+(x), exp-(y) over basis vectors x, y. Generator order:
// exp+ of each V+ basis vector, then exp- of each V- basis vector.
PeGroup pe_group(const TkkAlgebra& alg, std::size_t cap = 1'000'000);

template <class G>
GroupReport group_analyze(const G& g) {
  return fingerprint(g);
}

// Fingerprint of the subgroup on the given element indices, as a group of its own.
template <class G>
GroupReport subgroup_fingerprint(const G& g, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{g.identity()};
  for (auto m : members) {
    if (std::binary_search(span.begin(), span.end(), m)) continue;
    gens.push_back(m);
    span = subgroup_closure(g, gens);
    if (span.size() == members.size()) break;
  }
  std::vector<typename std::decay_t<decltype(g[0])>> elems;
  for (auto i : gens) elems.push_back(g[i]);
  auto h = std::decay_t<G>::closure(elems, g[g.identity()], g.multiplication(), members.size() + 1);
  return fingerprint(h);
}

GroupReport symmetric_fingerprint(std::size_t n);
GroupReport alternating_fingerprint(std::size_t n);

struct NamedMatch {
  bool matches = false;
  std::string detail;
};
// S_n: fingerprint equal, and for n >= 5 the derived subgroup matches A_n.
NamedMatch matches_symmetric(const PeGroup& g, std::size_t n);
NamedMatch matches_alternating(const PeGroup& g, std::size_t n);

// EL_N(A) -> PE(rect pair) via uad: kernel equals the centre, |EL|/|Z| = |PE|.
Report verify_pe_quotient(const RingSpec::Ptr& ring, std::size_t p, std::size_t q,
                          std::size_t cap = 1'000'000);

struct RelativeKernel {
  PeGroup group;                      // PE(V)
  PeGroup image;                      // PE(V/I)
  std::vector<std::size_t> kernel;    // indices into group
  Report report;                      // homomorphism and normality checks
};
// Kernel of PE(V) -> PE(V/I).
RelativeKernel pe_relative_kernel(const JordanPair& pair, const PairIdeal& ideal, std::size_t cap = 1'000'000);

// b^-1 = Q(b)^-1 b in a division pair.
Vec pair_inverse(const JordanPair& pair, Sign s, const Vec& b);
// w_b = exp-(b^-1) exp+(b) exp-(b^-1).
ModMatrix weyl_element(const TkkAlgebra& alg, const Vec& b);
// w_b exp-(a) w_b^-1 = exp+(Q_b a) for all a and all b != 0.
Report verify_weyl(const TkkAlgebra& alg);

}  // namespace jpst
