#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "jpst/common.hpp"
#include "jpst/linalg.hpp"
#include "jpst/report.hpp"

namespace jpst {

enum class RingKind { PrimeField, FiniteField, Modular, StructureConstants, Matrix };

// A finite unital associative ring, free of finite rank over its prime ring Z/n.
// Elements are coordinate vectors over the basis; products come from structure
// constants. Small rings also get addition/multiplication tables on codes.
class RingSpec {
 public:
  using Code = std::uint32_t;
  using Ptr = std::shared_ptr<const RingSpec>;

  static Ptr prime_field(Coeff p);
  static Ptr modular(Coeff n);
  // poly: monic, coefficients low to high, length k+1.
  static Ptr finite_field(Coeff p, const Vec& poly, std::string name = {});
  static Ptr finite_field_q(std::uint32_t q);
  // table[i][j] = coordinates of e_i e_j.
  static Ptr structure_constants(std::string name, std::vector<std::string> labels, Coeff n,
                                 std::vector<std::vector<Vec>> table, Vec unit,
                                 std::optional<ModMatrix> involution = std::nullopt);
  static Ptr from_json(const nlohmann::json& j);
  // Mat_m(base); involution is the conjugate transpose when available.
  static Ptr matrix(Ptr base, std::size_t m);

  RingKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  Coeff characteristic() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::uint64_t cardinality() const { return card_; }
  bool commutative() const { return commutative_; }
  bool has_involution() const { return invol_.has_value(); }
  bool is_field() const { return field_; }
  const std::vector<std::vector<Vec>>& table() const { return table_; }
  const std::optional<ModMatrix>& involution_matrix() const { return invol_; }
  // Base ring and size for Mat_m rings.
  Ptr matrix_base() const { return mat_base_; }
  std::size_t matrix_size() const { return mat_size_; }

  Vec zero() const { return Vec(dim_, 0); }
  Vec one() const { return one_; }
  Vec add(const Vec& a, const Vec& b) const { return vec::add(a, b, n_); }
  Vec sub(const Vec& a, const Vec& b) const { return vec::sub(a, b, n_); }
  Vec neg(const Vec& a) const { return vec::neg(a, n_); }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec involution(const Vec& a) const;
  Vec scalar(Coeff s) const { return vec::scale(s, one_, n_); }

  Code code(const Vec& a) const { return static_cast<Code>(encode(a, n_)); }
  Vec coords(Code c) const { return decode(c, n_, dim_); }
  Code zero_code() const { return 0; }
  Code one_code() const { return one_code_; }
  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code involution(Code a) const;
  Code scalar_code(Coeff s) const { return code(scalar(s)); }
  // Two-sided inverse when a is a unit.
  std::optional<Code> unit_inverse(Code a) const;
  std::string str(Code a) const;

 private:
  RingSpec() = default;
  void finalize();

  RingKind kind_ = RingKind::Modular;
  std::string name_;
  Coeff n_ = 2;
  std::size_t dim_ = 1;
  std::uint64_t card_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> table_;
  Vec one_;
  Code one_code_ = 0;
  std::optional<ModMatrix> invol_;
  bool commutative_ = true;
  bool field_ = false;
  Ptr mat_base_;
  std::size_t mat_size_ = 0;
  // code tables for small rings
  std::vector<Code> add_t_, mul_t_, neg_t_, inv_t_;
  mutable std::vector<std::int64_t> unit_inv_;  // -1 unknown, -2 non-unit
};

class RingElement {
 public:
  RingElement(RingSpec::Ptr ring, Vec coords) : ring_(std::move(ring)), coords_(std::move(coords)) {}
  RingElement(RingSpec::Ptr ring, RingSpec::Code c) : ring_(ring), coords_(ring->coords(c)) {}

  const RingSpec::Ptr& ring() const { return ring_; }
  const Vec& coords() const { return coords_; }
  RingSpec::Code code() const { return ring_->code(coords_); }

  RingElement operator+(const RingElement& o) const { return {ring_, ring_->add(coords_, o.coords_)}; }
  RingElement operator-(const RingElement& o) const { return {ring_, ring_->sub(coords_, o.coords_)}; }
  RingElement operator-() const { return {ring_, ring_->neg(coords_)}; }
  RingElement operator*(const RingElement& o) const { return {ring_, ring_->mul(coords_, o.coords_)}; }
  RingElement involution() const { return {ring_, ring_->involution(coords_)}; }
  bool operator==(const RingElement& o) const { return coords_ == o.coords_; }
  bool operator!=(const RingElement& o) const { return coords_ != o.coords_; }
  bool is_zero() const { return vec::is_zero(coords_); }
  std::string str() const { return ring_->str(code()); }

 private:
  RingSpec::Ptr ring_;
  Vec coords_;
};

Report verify_ring_axioms(const RingSpec& ring);
std::vector<RingElement> enumerate_units(const RingSpec::Ptr& ring, std::size_t cap = 4096);

}  // namespace jpst
