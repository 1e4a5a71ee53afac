#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jpst/finite_group.hpp"
#include "jpst/report.hpp"
#include "jpst/scalars.hpp"

namespace jpst {

// Finite set of integer labels, kept sorted.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> labels);
  static IndexSet range(int first, int last);  // {first, ..., last}

  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool contains(int l) const;
  bool disjoint(const IndexSet& o) const;
  IndexSet unite(const IndexSet& o) const;
  bool operator==(const IndexSet& o) const { return labels_ == o.labels_; }
  int operator[](std::size_t i) const { return labels_[i]; }

 private:
  std::vector<int> labels_;
};

// Element of k1 + Mat(A) with finite support: offset * 1 + sparse part. Zero
// entries are never stored, so equality is equality of data.
class FinMatrix {
 public:
  using Code = RingSpec::Code;
  using Key = std::pair<int, int>;

  FinMatrix() = default;
  FinMatrix(RingSpec::Ptr ring, IndexSet rows, IndexSet cols);
  static FinMatrix identity(RingSpec::Ptr ring, const IndexSet& n);

  const RingSpec::Ptr& ring() const { return ring_; }
  const IndexSet& rows() const { return rows_; }
  const IndexSet& cols() const { return cols_; }
  Coeff offset() const { return offset_; }
  const std::map<Key, Code>& entries() const { return entries_; }

  // Entry of the sparse part.
  Code raw(int r, int c) const;
  // Entry of offset*1 + sparse part.
  Code at(int r, int c) const;
  void set(int r, int c, Code a);
  // Sets the sparse part so that at(r, c) == a.
  void assign(int r, int c, Code a);
  void set_offset(Coeff s);

  FinMatrix operator+(const FinMatrix& o) const;
  FinMatrix operator-(const FinMatrix& o) const;
  FinMatrix operator-() const;
  FinMatrix operator*(const FinMatrix& o) const;
  FinMatrix scaled(Coeff s) const;
  // Transpose with the ring involution applied entrywise.
  FinMatrix conjugate_transpose() const;
  FinMatrix inverse() const;

  bool operator==(const FinMatrix& o) const { return offset_ == o.offset_ && entries_ == o.entries_; }
  bool operator!=(const FinMatrix& o) const { return !(*this == o); }
  bool is_zero() const { return offset_ == 0 && entries_.empty(); }
  bool is_identity() const { return offset_ == 1 % ring_->characteristic() && entries_.empty(); }
  std::size_t hash() const;
  std::string str() const;

 private:
  void check_same_shape(const FinMatrix& o) const;

  RingSpec::Ptr ring_;
  IndexSet rows_, cols_;
  Coeff offset_ = 0;
  std::map<Key, Code> entries_;
};

struct FinMatrixHash {
  std::size_t operator()(const FinMatrix& m) const { return m.hash(); }
};

using MatrixGroup = FiniteGroup<FinMatrix, FinMatrixHash>;

// a E_ij as a rectangular matrix, and 1 + a E_ij.
FinMatrix unit_matrix(RingSpec::Ptr ring, const IndexSet& rows, const IndexSet& cols, int i, int j,
                      RingSpec::Code a);
FinMatrix elementary(RingSpec::Ptr ring, const IndexSet& n, int i, int j, RingSpec::Code a);

enum class Sign : int { Plus = 0, Minus = 1 };
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int idx(Sign s) { return static_cast<int>(s); }
inline const char* sign_str(Sign s) { return s == Sign::Plus ? "+" : "-"; }

// e_+(u) = [[1, u], [0, 1]] and e_-(v) = [[1, 0], [-v, 1]] on N = I + J.
// u is an I x J matrix, v a J x I matrix.
FinMatrix e_block(Sign s, const FinMatrix& w, const IndexSet& i, const IndexSet& j);

// g h g^-1 h^-1
FinMatrix commutator(const FinMatrix& g, const FinMatrix& h);

// Stack four blocks into one matrix over I + J.
FinMatrix block_matrix(const FinMatrix& a, const FinMatrix& b, const FinMatrix& c, const FinMatrix& d,
                       const IndexSet& i, const IndexSet& j);

// All I x J matrices over the ring.
std::vector<FinMatrix> all_matrices(RingSpec::Ptr ring, const IndexSet& rows, const IndexSet& cols,
                                    std::size_t cap = 1 << 20);

MatrixGroup el_group(RingSpec::Ptr ring, const IndexSet& n, std::size_t cap = 1'000'000);

enum class ElementarySuite { E, EJ, Exc2, Generation };

struct ElementaryOptions {
  ElementarySuite suite = ElementarySuite::E;
  IndexSet n;        // E suite
  IndexSet i, j;     // block suites
  std::size_t max_instances = 10'000'000;
  std::size_t max_group = 1'000'000;
};

Report verify_elementary_relations(const RingSpec::Ptr& ring, const ElementaryOptions& opt);

}  // namespace jpst
