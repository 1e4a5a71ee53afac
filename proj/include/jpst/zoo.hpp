#pragma once

#include <string>
#include <vector>

#include "jpst/grading.hpp"
#include "jpst/jordan.hpp"

namespace jpst {

// F<q>, Z<n> or Z/<n>, Mat<m>(<ring>).
RingSpec::Ptr ring_from_name(const std::string& name);

// kind: full, rect, hermitian, alternating, quadform.
// rect uses i x j; hermitian and alternating use size i; quadform is a
// hyperbolic plane plus j vectors with q = 1.
struct PairSelector {
  std::string kind = "full";
  RingSpec::Ptr ring;
  std::size_t i = 1, j = 1;
};

JordanPair zoo_pair(const PairSelector& sel);
// A^I for full and rect, C^her, D^alt, B^qf.
GradingKind default_grading(const std::string& kind);
RootGrading zoo_grading(const PairSelector& sel);

struct ZooEntry {
  std::string label;
  PairSelector selector;
  bool exhaustive = true;  // identities small enough to check on every tuple
};

// Pairs with a root grading, over F2 and F3.
std::vector<ZooEntry> graded_zoo();
// graded_zoo plus full(Z/4) and full(Mat2(F2)).
std::vector<ZooEntry> pair_zoo();

}  // namespace jpst
