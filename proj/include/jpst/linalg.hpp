#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "jpst/common.hpp"

namespace jpst {

// Dense matrix over Z/n, row-major. Echelon-based routines need n prime.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols, Coeff n)
      : rows_(rows), cols_(cols), n_(n), data_(rows * cols, 0) {}
  static ModMatrix identity(std::size_t d, Coeff n);
  static ModMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows, Coeff n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff modulus() const { return n_; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Vec& data() const { return data_; }

  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  Vec row(std::size_t r) const;

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix operator+(const ModMatrix& o) const;
  ModMatrix operator-(const ModMatrix& o) const;
  Vec apply(const Vec& v) const;
  ModMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;
  bool operator==(const ModMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const ModMatrix& o) const { return !(*this == o); }
  std::size_t hash() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Coeff n_ = 2;
  Vec data_;
};

struct ModMatrixHash {
  std::size_t operator()(const ModMatrix& m) const { return m.hash(); }
};

// Field routines (prime modulus).
std::size_t rank(const ModMatrix& m);
std::vector<Vec> kernel_basis(const ModMatrix& m);  // {x : m x = 0}
std::optional<Vec> solve(const ModMatrix& m, const Vec& b);
std::optional<ModMatrix> inverse(const ModMatrix& m);
// Any modulus: unimodular row reduction; nullopt when the determinant is not a unit.
std::optional<ModMatrix> invert(const ModMatrix& m);

// Z/n-submodule of (Z/n)^d. Prime n uses echelon forms; other n enumerate.
class Submodule {
 public:
  Submodule() = default;
  Submodule(Coeff n, std::size_t d, const std::vector<Vec>& generators,
            std::size_t cap = std::size_t{1} << 20);
  static Submodule whole(Coeff n, std::size_t d);
  static Submodule zero(Coeff n, std::size_t d) { return Submodule(n, d, {}); }

  Coeff modulus() const { return n_; }
  std::size_t ambient_dim() const { return d_; }
  bool is_field() const { return field_; }
  bool is_free() const { return free_; }
  // Basis (a subset of the generators where possible); the nonzero generators when not free.
  const std::vector<Vec>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  std::uint64_t size() const;

  bool contains(const Vec& v) const;
  // Coordinates relative to basis(); nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  Vec combine(const Vec& coords) const;
  // Fixed representative of the coset v + M.
  Vec canonical(const Vec& v) const;
  std::vector<Vec> elements(std::size_t cap = std::size_t{1} << 20) const;

  Submodule intersect(const Submodule& o) const;
  Submodule sum(const Submodule& o) const;
  bool subset_of(const Submodule& o) const;
  bool operator==(const Submodule& o) const { return subset_of(o) && o.subset_of(*this); }

 private:
  void build_field(const std::vector<Vec>& gens);
  void build_ring(const std::vector<Vec>& gens, std::size_t cap);
  std::optional<Vec> reduce(const Vec& v) const;  // field: coefficients on echelon rows

  Coeff n_ = 2;
  std::size_t d_ = 0;
  bool field_ = true;
  bool free_ = true;
  std::size_t cap_ = std::size_t{1} << 20;
  std::vector<Vec> basis_;
  // field data: echelon rows with pivots, and their expression in basis_
  std::vector<Vec> ech_;
  std::vector<std::size_t> piv_;
  std::vector<Vec> ech_in_basis_;
  // ring data
  std::unordered_set<std::uint64_t> elems_;
  std::unordered_map<std::uint64_t, Vec> coords_;
};

// {x : m x = 0} as a submodule of the domain.
Submodule kernel_module(const ModMatrix& m, std::size_t cap = std::size_t{1} << 20);

}  // namespace jpst
