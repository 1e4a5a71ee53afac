#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jpst/jordan.hpp"

namespace jpst {

// Operator pair (D+, D-) acting on (V+, V-).
struct OpPair {
  ModMatrix plus, minus;
};

// V+ + L0 + V- with L0 spanned by zeta = (Id, -Id) and delta(x, y) =
// (D(x, y), -D(y, x)). Elements are coordinate vectors in the basis
// (V+ basis, L0 basis with zeta first when nonzero, V- basis).
class TkkAlgebra {
 public:
  static TkkAlgebra build(const JordanPair& pair);

  const JordanPair& pair() const { return pair_; }
  Coeff modulus() const { return pair_.modulus(); }
  std::size_t dim() const { return dp_ + d0_ + dm_; }
  std::size_t dim_plus() const { return dp_; }
  std::size_t dim0() const { return d0_; }
  std::size_t dim_minus() const { return dm_; }
  int degree(std::size_t i) const { return i < dp_ ? 1 : (i < dp_ + d0_ ? 0 : -1); }
  // The zero pair has L0 = 0; its algebra is flagged rather than refused.
  bool degenerate() const { return pair_.is_zero(); }
  std::string name() const { return "tkk(" + pair_.name() + ")"; }

  Vec zero() const { return Vec(dim(), 0); }
  Vec from_plus(const Vec& x) const;
  Vec from_minus(const Vec& y) const;
  // Throws when (D+, D-) is outside L0.
  Vec from_ops(const OpPair& d) const;
  Vec zeta() const;
  Vec delta(const Vec& x, const Vec& y) const;
  OpPair delta_ops(const Vec& x, const Vec& y) const;

  Vec plus_part(const Vec& a) const;
  Vec minus_part(const Vec& a) const;
  OpPair ops(const Vec& a) const;  // operators of the L0 component

  Vec bracket(const Vec& a, const Vec& b) const;
  const Vec& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  // Overwrites one structure constant column; for mutation tests.
  void set_basis_bracket(std::size_t i, std::size_t j, Vec v) { table_[i * dim() + j] = std::move(v); }
  bool zeta_in_basis() const { return zeta_first_; }

 private:
  JordanPair pair_;
  std::size_t dp_ = 0, d0_ = 0, dm_ = 0;
  Submodule l0_;
  std::vector<OpPair> l0_basis_;
  bool zeta_first_ = false;
  std::vector<Vec> table_;
};

// Flattened (D+, D-) as a vector for span computations.
Vec flatten(const OpPair& d);
// Is (D+, D-) in the span of zeta and the delta(x, y)? Works over any Z/n.
bool l0_contains(const JordanPair& pair, const OpPair& d, std::size_t cap = std::size_t{1} << 20);

// Matrices act on coordinate columns.
bool preserves_bracket(const TkkAlgebra& alg, const ModMatrix& a, std::string* witness = nullptr);
// exp_s(w); throws when the bracket is not preserved.
ModMatrix exp_aut(const TkkAlgebra& alg, Sign s, const Vec& w, bool verify = true);
// x + D + y -> f+(x) + f D f^-1 + f-(y)
ModMatrix tkk_of_pair_aut(const TkkAlgebra& alg, const ModMatrix& fp, const ModMatrix& fm);

Submodule tkk_centre(const TkkAlgebra& alg);
// alternating, Jacobi, grading, centre, delta vs triple.
Report verify_tkk_suite(const TkkAlgebra& alg);

}  // namespace jpst
