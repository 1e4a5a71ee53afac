#pragma once

#include <vector>

#include "jpst/linalg.hpp"
#include "jpst/matrices.hpp"
#include "jpst/report.hpp"
#include "jpst/tkk.hpp"

namespace jpst {

// The Lie subalgebra e of Mat_N(A)^(-), N = I + J with I = {1..p},
// J = {p+1..p+q}, generated by e1 = 1_I, e2 = 1_J and the off-diagonal
// blocks. Matrices are vectors over Z/n: entry (r, c) occupies
// coordinates (r N + c) dA .. (r N + c) dA + dA - 1.
class ElementaryLie {
 public:
  static ElementaryLie build(RingSpec::Ptr ring, std::size_t p, std::size_t q);

  const RingSpec::Ptr& ring() const { return ring_; }
  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }
  std::size_t size() const { return p_ + q_; }
  std::size_t ambient_dim() const { return size() * size() * ring_->dim(); }
  Coeff modulus() const { return ring_->characteristic(); }

  const Submodule& span() const { return span_; }
  const std::vector<Vec>& basis() const { return span_.basis(); }
  std::size_t dim() const { return span_.rank(); }

  Vec e1() const;
  Vec e2() const;
  Vec entry(std::size_t r, std::size_t c, const Vec& a) const;
  Vec get(const Vec& m, std::size_t r, std::size_t c) const;
  Vec product(const Vec& a, const Vec& b) const;
  Vec bracket(const Vec& a, const Vec& b) const;
  Vec from_fin(const FinMatrix& g) const;
  IndexSet index_i() const { return IndexSet::range(1, static_cast<int>(p_)); }
  IndexSet index_j() const { return IndexSet::range(static_cast<int>(p_) + 1, static_cast<int>(size())); }
  // Pair coordinates as an I x J (plus) or J x I (minus) block, and e_s of it.
  FinMatrix block(Sign s, const Vec& w) const;
  FinMatrix e(Sign s, const Vec& w) const;

  // Centre of e, by linear solve.
  Submodule centre() const;
  // e0 intersected with Z(A) 1_N.
  Submodule centre_formula() const;
  // k e1 + k e2 + sl_N(A), sl_N(A) = {x : trace x in [A, A]}.
  Submodule span_formula() const;

 private:
  RingSpec::Ptr ring_;
  std::size_t p_ = 0, q_ = 0;
  Submodule span_;
};

// Pair coordinates of rect(A, p, q) as an I x J (plus) or J x I (minus) block.
FinMatrix pair_block(const RingSpec::Ptr& ring, std::size_t p, std::size_t q, Sign s, const Vec& w);

// Psi(a b; c d) = b + Delta(a, d) + (-c) into tkk of the rectangular pair.
class PsiMap {
 public:
  PsiMap(const ElementaryLie& e, const TkkAlgebra& alg);

  Vec apply(const Vec& m) const;
  // Automorphism of tkk induced by Ad g on e; throws unless Ad g stabilizes e.
  ModMatrix uad(const FinMatrix& g) const;

 private:
  const ElementaryLie* e_;
  const TkkAlgebra* alg_;
  std::vector<Vec> preimage_;  // of each tkk basis vector
};

Report verify_psi(const RingSpec::Ptr& ring, std::size_t p, std::size_t q);

}  // namespace jpst
