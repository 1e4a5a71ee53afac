#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jpst/jordan.hpp"
#include "jpst/rootsys.hpp"

namespace jpst {

using Idempotent = std::pair<Vec, Vec>;

// V = sum over R1 of V_alpha, with an optional idempotent family.
class RootGrading {
 public:
  RootGrading(JordanPair pair, ThreeGrading grading, std::array<std::vector<Submodule>, 2> spaces);

  const JordanPair& pair() const { return pair_; }
  const ThreeGrading& grading() const { return grading_; }
  const std::vector<Root>& roots() const { return grading_.r1(); }
  std::optional<std::size_t> root_index(const Root& a) const;
  const Submodule& space(Sign s, std::size_t k) const { return spaces_[idx(s)][k]; }
  const Submodule& space(Sign s, const Root& a) const;
  // Root of a nonzero x lying in a single root space.
  std::optional<std::size_t> root_of(Sign s, const Vec& x) const;

  const std::map<Root, Idempotent>& family() const { return family_; }
  void set_family(std::map<Root, Idempotent> f) { family_ = std::move(f); }
  // Known answer to full idempotence; unset when not decided at construction.
  std::optional<bool> fully_idempotent() const { return fully_idempotent_; }
  void set_fully_idempotent(bool b) { fully_idempotent_ = b; }

  std::string name() const;

 private:
  JordanPair pair_;
  ThreeGrading grading_;
  std::array<std::vector<Submodule>, 2> spaces_;
  std::map<Root, Idempotent> family_;
  std::optional<bool> fully_idempotent_;
};

// Rect, full, and graded subpairs/quotients carry blocks -> A^I; hermitian ->
// C^her; alternating -> D^alt; quadform with marked hyperbolic pair -> B^qf.
RootGrading make_grading(const JordanPair& pair, GradingKind kind);

// V_beta = intersection over the family of V_{<beta, alpha^vee>}(e_alpha).
// Throws unless the result passes verify_grading_suite and matches reference.
RootGrading grading_from_cog(const JordanPair& pair, const ThreeGrading& grading,
                             const std::map<Root, Idempotent>& family, const RootGrading* reference = nullptr);

// direct sum, RG1 Q, RG1 triple, RG2, rgjp4, rgjp5, and the family when recorded.
Report verify_grading_suite(const RootGrading& g);

struct FullIdempotence {
  bool holds = false;
  std::map<Root, Idempotent> family;
  std::string reason;  // first root without an idempotent
};

// Searches root spaces of at most max_space elements per sign.
FullIdempotence is_fully_idempotent(const RootGrading& g, std::size_t max_space = 4096);

}  // namespace jpst
