#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jpst/linalg.hpp"
#include "jpst/matrices.hpp"
#include "jpst/report.hpp"
#include "jpst/scalars.hpp"

namespace jpst {

enum class PairKind { Full, Rect, Hermitian, Alternating, Quadform, Quotient, Subpair, Custom };
std::string pair_kind_name(PairKind k);

struct PairElement {
  Sign sign = Sign::Plus;
  Vec v;
};

// Matrix position of a coordinate for the matrix kinds: (row, col) label.
using Block = std::pair<int, int>;

// A Jordan pair over Z/n with V+ = (Z/n)^d+ and V- = (Z/n)^d-. The quadratic
// maps are stored as coefficient tensors: Q(b_i) and Q(b_i, b_k), i < k, as
// matrices V^-s -> V^s.
class JordanPair {
 public:
  // Q(s)(x) y for x in V^s, y in V^-s.
  using QFunc = std::function<Vec(const Vec& x, const Vec& y)>;

  JordanPair() = default;
  static JordanPair from_closures(std::string name, PairKind kind, Coeff n, std::array<std::size_t, 2> dims,
                                  std::array<QFunc, 2> q);
  // tensors[s][k(k+1)/2 + i], i <= k: Q(b_i) for i == k, Q(b_i, b_k) otherwise.
  static JordanPair from_tensors(std::string name, PairKind kind, Coeff n, std::array<std::size_t, 2> dims,
                                 std::array<std::vector<ModMatrix>, 2> tensors);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  PairKind kind() const { return kind_; }
  Coeff modulus() const { return n_; }
  bool over_field() const { return is_prime(n_); }
  std::size_t dim(Sign s) const { return dims_[idx(s)]; }
  std::uint64_t cardinality(Sign s, std::uint64_t cap = std::uint64_t{1} << 40) const;
  bool is_zero() const { return dims_[0] == 0 && dims_[1] == 0; }

  Vec zero(Sign s) const { return Vec(dim(s), 0); }
  Vec Q(Sign s, const Vec& x, const Vec& y) const;
  // Q(x, z) y = Q(x+z)y - Q(x)y - Q(z)y
  Vec Qpolar(Sign s, const Vec& x, const Vec& z, const Vec& y) const;
  // {x y z}, x, z in V^s
  Vec triple(Sign s, const Vec& x, const Vec& y, const Vec& z) const;
  // Evaluates the defining closure when one was given; otherwise the tensor.
  Vec Q_closure(Sign s, const Vec& x, const Vec& y) const;
  bool has_closure() const { return static_cast<bool>(closure_[0]); }

  PairElement q_op(const PairElement& x, const PairElement& y) const;
  PairElement triple(const PairElement& x, const PairElement& y, const PairElement& z) const;

  // Q(x) : V^-s -> V^s
  ModMatrix Q_map(Sign s, const Vec& x) const;
  // D(x, y) : z -> {x y z} on V^s
  ModMatrix D_map(Sign s, const Vec& x, const Vec& y) const;

  const std::vector<ModMatrix>& tensors(Sign s) const { return tensors_[idx(s)]; }
  std::vector<Vec> elements(Sign s, std::size_t cap = std::size_t{1} << 20) const;

  // Layout data for the matrix kinds and the quadratic-form kind.
  const std::vector<std::optional<Block>>& blocks(Sign s) const { return blocks_[idx(s)]; }
  void set_blocks(Sign s, std::vector<std::optional<Block>> b) { blocks_[idx(s)] = std::move(b); }
  const std::vector<std::string>& labels(Sign s) const { return labels_[idx(s)]; }
  void set_labels(Sign s, std::vector<std::string> l) { labels_[idx(s)] = std::move(l); }
  const RingSpec::Ptr& ring() const { return ring_; }
  void set_ring(RingSpec::Ptr r) { ring_ = std::move(r); }
  const IndexSet& index_i() const { return i_; }
  const IndexSet& index_j() const { return j_; }
  void set_indices(IndexSet i, IndexSet j) {
    i_ = std::move(i);
    j_ = std::move(j);
  }
  // Quadratic form data: q on the basis and the polar form.
  const Vec& form_q() const { return form_q_; }
  const ModMatrix& form_b() const { return form_b_; }
  void set_form(Vec q, ModMatrix b) {
    form_q_ = std::move(q);
    form_b_ = std::move(b);
  }
  // Basis indices of a marked hyperbolic pair (h+, h-).
  const std::optional<std::pair<std::size_t, std::size_t>>& hyperbolic() const { return hyperbolic_; }
  void set_hyperbolic(std::pair<std::size_t, std::size_t> h) { hyperbolic_ = h; }
  // For quotients and subpairs: modulus of the parent and the basis
  // representatives (subpair) or lifts (quotient) in the parent.
  Coeff parent_modulus() const { return parent_n_; }
  const std::vector<Vec>& parent_basis(Sign s) const { return parent_basis_[idx(s)]; }
  void set_parent(Coeff n, std::array<std::vector<Vec>, 2> basis) {
    parent_n_ = n;
    parent_basis_ = std::move(basis);
  }
  // Image in the parent of a subpair/quotient coordinate vector.
  Vec lift(Sign s, const Vec& coords) const;

 private:
  std::string name_;
  PairKind kind_ = PairKind::Custom;
  Coeff n_ = 2;
  std::array<std::size_t, 2> dims_{0, 0};
  std::array<std::vector<ModMatrix>, 2> tensors_;
  std::array<QFunc, 2> closure_;
  std::array<std::vector<std::optional<Block>>, 2> blocks_;
  std::array<std::vector<std::string>, 2> labels_;
  RingSpec::Ptr ring_;
  IndexSet i_, j_;
  Vec form_q_;
  ModMatrix form_b_;
  std::optional<std::pair<std::size_t, std::size_t>> hyperbolic_;
  Coeff parent_n_ = 0;
  std::array<std::vector<Vec>, 2> parent_basis_;
};

inline std::size_t tensor_index(std::size_t i, std::size_t k) { return k * (k + 1) / 2 + i; }

// ------------------------------------------------------------------ kinds

// (A, A) with Q_x y = xyx.
JordanPair full_pair(const RingSpec::Ptr& ring);
// (Mat_IJ(A), Mat_JI(A)); I = {1..p}, J = {p+1..p+q}.
JordanPair rect_pair(const RingSpec::Ptr& ring, std::size_t p, std::size_t q);
// Hermitian I x I matrices over A with its involution; I = {1..m}, m >= 2.
JordanPair hermitian_pair(const RingSpec::Ptr& ring, std::size_t m);
// Alternating I x I matrices over a commutative ring; I = {1..m}.
JordanPair alternating_pair(const RingSpec::Ptr& ring, std::size_t m);
// (M, M) with Q_x y = b(x, y) x - q(x) y; q on the basis, b symmetric with
// b_ii = 2 q_i.
JordanPair quadform_pair(Coeff n, const Vec& q, const ModMatrix& b,
                         std::optional<std::pair<std::size_t, std::size_t>> hyperbolic = std::nullopt);
// Hyperbolic plane (h+, h-) followed by orthogonal vectors m_k with q(m_k) = extra[k].
JordanPair quadform_hyperbolic(Coeff n, const Vec& extra);
// Subpair (Mat_IJ(a), Mat_JI(b)) of rect(A) for submodules a, b of A.
JordanPair rect_subpair(const RingSpec::Ptr& ring, std::size_t p, std::size_t q, const Submodule& a,
                        const Submodule& b);
JordanPair zero_pair(Coeff n);

// ------------------------------------------------------------ identities

enum class SampleMode { Auto, Exhaustive, Sample };

struct JordanOptions {
  SampleMode mode = SampleMode::Auto;
  std::size_t exhaustive_cap = std::size_t{1} << 16;  // tuples per identity and sign
  std::size_t samples = 10'000;
  std::size_t linearization_samples = 256;
  std::uint64_t seed = 20240611;
};

// JP1-JP3, the displayed x-linearization of JP1, and the full
// multilinearizations, for both signs.
Report verify_jp_suite(const JordanPair& pair, const JordanOptions& opt = {});
// Q(sx) = s^2 Q(x), bilinearity of Q(x, z), closure against tensor.
Report verify_quadratic_contract(const JordanPair& pair, const JordanOptions& opt = {});

// --------------------------------------------------- idempotents, Peirce

bool is_idempotent(const JordanPair& pair, const Vec& ep, const Vec& em);

struct PeirceDecomp {
  // spaces[s][i] = V_i^s
  std::array<std::array<Submodule, 3>, 2> spaces;
  // projections[s][i]; only over fields and free Z/n
  std::array<std::array<ModMatrix, 3>, 2> projections;
  Report report;
  std::array<std::size_t, 3> ranks(Sign s) const;
};

PeirceDecomp peirce(const JordanPair& pair, const Vec& ep, const Vec& em);

struct BergmannPair {
  ModMatrix plus;   // B(u, v) on V+
  ModMatrix minus;  // B(v, u) on V-
  bool invertible = false;
  std::optional<ModMatrix> minus_inverse;
};

BergmannPair bergmann(const JordanPair& pair, const Vec& u, const Vec& v);

// ------------------------------------------------------ ideals, quotients

struct PairIdeal {
  Submodule plus, minus;
  const Submodule& at(Sign s) const { return s == Sign::Plus ? plus : minus; }
};

Report verify_ideal(const JordanPair& pair, const PairIdeal& ideal);
JordanPair quotient_pair(const JordanPair& pair, const PairIdeal& ideal, std::size_t cap = std::size_t{1} << 20);
JordanPair subpair(const JordanPair& pair, const PairIdeal& sub, std::size_t cap = std::size_t{1} << 20);

// ---------------------------------------------------------------- misc

// Every nonzero x has Q(x) invertible, both signs.
bool is_division_pair(const JordanPair& pair, std::size_t cap = std::size_t{1} << 16);
// f_s(Q(x)y) = Q(f_s x)(f_-s y) on basis data.
bool is_automorphism(const JordanPair& pair, const ModMatrix& fp, const ModMatrix& fm, std::string* witness = nullptr);

}  // namespace jpst
