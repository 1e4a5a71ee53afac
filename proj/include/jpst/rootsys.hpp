#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jpst/matrices.hpp"
#include "jpst/report.hpp"

namespace jpst {

// Finitely supported integer vector over epsilon labels.
class Root {
 public:
  Root() = default;
  static Root eps(int label, int coeff = 1);

  int coeff(int label) const;
  const std::vector<std::pair<int, int>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int coeff_sum() const;

  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root operator-() const { return scaled(-1); }
  Root scaled(int k) const;
  bool operator==(const Root& o) const { return terms_ == o.terms_; }
  bool operator!=(const Root& o) const { return terms_ != o.terms_; }
  bool operator<(const Root& o) const { return terms_ < o.terms_; }
  std::string str() const;

 private:
  std::vector<std::pair<int, int>> terms_;  // sorted by label, nonzero
};

int inner(const Root& a, const Root& b);
// <a, b^vee> = 2(a|b)/(b|b)
int pairing(const Root& a, const Root& b);
Root reflect(const Root& a, const Root& x);

enum class RootFamily { A, B, C, D, BC };
std::string family_name(RootFamily f);

class RootSystemSpec {
 public:
  RootSystemSpec(RootFamily family, IndexSet labels);

  RootFamily family() const { return family_; }
  const IndexSet& labels() const { return labels_; }
  bool contains(const Root& r) const;
  // All roots including 0, sorted.
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t rank() const;
  std::string name() const;

 private:
  RootFamily family_;
  IndexSet labels_;
  std::vector<Root> roots_;
};

RootSystemSpec make_root_system(RootFamily family, const IndexSet& labels);

// Irreducible components of the nonzero roots under non-orthogonality.
std::vector<std::vector<Root>> components(const RootSystemSpec& r);

enum class GradingKind { AI, Bqf, Cher, Dqf, Dalt };
std::string grading_kind_name(GradingKind k);

class ThreeGrading {
 public:
  ThreeGrading(RootSystemSpec system, GradingKind kind, IndexSet part_labels, int distinguished);

  const RootSystemSpec& system() const { return system_; }
  GradingKind kind() const { return kind_; }
  // I for A^I; empty otherwise.
  const IndexSet& part_labels() const { return part_; }
  int distinguished() const { return dist_; }
  int part(const Root& r) const;
  bool in_r1(const Root& r) const { return system_.contains(r) && part(r) == 1; }
  const std::vector<Root>& r1() const { return r1_; }
  const std::vector<Root>& r0() const { return r0_; }
  const std::vector<Root>& rm1() const { return rm1_; }
  std::string name() const;

 private:
  RootSystemSpec system_;
  GradingKind kind_;
  IndexSet part_;
  int dist_;
  std::vector<Root> r1_, r0_, rm1_;
};

struct GradingParams {
  IndexSet part;          // A^I
  int distinguished = 0;  // B^qf, D^qf
};

ThreeGrading make_three_grading(const RootSystemSpec& system, GradingKind kind, const GradingParams& params = {});

enum class RootRelation { Equal, Orthogonal, Edge, ArrowOut, ArrowIn };
std::string relation_name(RootRelation r);

// Relation of a, b in R1. ArrowOut: <a,b^vee> = 2, <b,a^vee> = 1.
RootRelation classify_pair(const ThreeGrading& g, const Root& a, const Root& b);

// mu = a - b with a, b in R1 and a, b joined by an edge; smallest labels first.
std::pair<Root, Root> decompose_R0(const ThreeGrading& g, const Root& mu);

enum class RootSuite { Axioms, Grading, Gra2 };
Report verify_root_suite(const RootSystemSpec& system);
Report verify_root_suite(const ThreeGrading& g, RootSuite suite);

}  // namespace jpst
