#include "jpst/scalars.hpp"

#include <random>
#include <sstream>

namespace jpst {

namespace {

constexpr std::uint64_t kTableCap = 256;

// Remainder of a modulo monic-free g over F_p (coefficients low to high).
Vec poly_mod(Vec a, const Vec& g, Coeff p) {
  std::size_t dg = g.size() - 1;
  Coeff lead_inv = mod_inverse(g.back(), p);
  while (a.size() > dg) {
    Coeff c = a.back();
    if (c) {
      Coeff f = mod_mul(c, lead_inv, p);
      std::size_t shift = a.size() - 1 - dg;
      for (std::size_t i = 0; i <= dg; ++i)
        a[shift + i] = mod_sub(a[shift + i], mod_mul(f, g[i], p), p);
    }
    a.pop_back();
  }
  return a;
}

bool poly_irreducible(const Vec& f, Coeff p) {
  std::size_t k = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= k; ++d) {
    std::uint64_t total = checked_power(p, d, std::uint64_t{1} << 24);
    for (std::uint64_t code = 0; code < total; ++code) {
      Vec g = decode(code, p, d);
      g.push_back(1);
      if (vec::is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::string coeff_label(Coeff c, const std::string& label) {
  if (label == "1") return std::to_string(c);
  return c == 1 ? label : std::to_string(c) + label;
}

}  // namespace

void RingSpec::finalize() {
  card_ = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    card_ *= n_;
    if (card_ > (std::uint64_t{1} << 31)) throw Error("ring too large for element codes: " + name_);
  }
  one_code_ = code(one_);
  commutative_ = true;
  for (std::size_t i = 0; i < dim_ && commutative_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (table_[i][j] != table_[j][i]) {
        commutative_ = false;
        break;
      }
  unit_inv_.assign(card_ <= (std::uint64_t{1} << 16) ? card_ : 0, -1);
  if (card_ <= kTableCap) {
    std::size_t c = card_;
    add_t_.resize(c * c);
    mul_t_.resize(c * c);
    neg_t_.resize(c);
    inv_t_.resize(c);
    std::vector<Vec> el(c);
    for (std::size_t a = 0; a < c; ++a) el[a] = coords(static_cast<Code>(a));
    for (std::size_t a = 0; a < c; ++a) {
      neg_t_[a] = code(vec::neg(el[a], n_));
      inv_t_[a] = code(involution(el[a]));
      for (std::size_t b = 0; b < c; ++b) {
        add_t_[a * c + b] = code(vec::add(el[a], el[b], n_));
        mul_t_[a * c + b] = code(mul(el[a], el[b]));
      }
    }
  }
}

RingSpec::Ptr RingSpec::prime_field(Coeff p) {
  if (!is_prime(p)) throw Error("F_p needs prime p, got " + std::to_string(p));
  auto r = std::shared_ptr<RingSpec>(new RingSpec());
  r->kind_ = RingKind::PrimeField;
  r->name_ = "F" + std::to_string(p);
  r->n_ = p;
  r->dim_ = 1;
  r->labels_ = {"1"};
  r->table_ = {{Vec{1 % p}}};
  r->one_ = Vec{1 % p};
  r->field_ = true;
  r->finalize();
  return r;
}

RingSpec::Ptr RingSpec::modular(Coeff n) {
  if (n < 2) throw Error("Z/n needs n >= 2");
  auto r = std::shared_ptr<RingSpec>(new RingSpec());
  r->kind_ = is_prime(n) ? RingKind::PrimeField : RingKind::Modular;
  r->name_ = (is_prime(n) ? "F" : "Z") + std::to_string(n);
  r->n_ = n;
  r->dim_ = 1;
  r->labels_ = {"1"};
  r->table_ = {{Vec{1}}};
  r->one_ = Vec{1};
  r->field_ = is_prime(n);
  r->finalize();
  return r;
}

RingSpec::Ptr RingSpec::finite_field(Coeff p, const Vec& poly, std::string name) {
  if (!is_prime(p)) throw Error("finite field needs prime characteristic");
  if (poly.size() < 2 || poly.back() % p != 1) throw Error("field polynomial must be monic of degree >= 1");
  std::size_t k = poly.size() - 1;
  Vec f(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) f[i] = poly[i] % p;
  if (!poly_irreducible(f, p))
    throw Error("polynomial " + vec::str(f) + " is reducible over F" + std::to_string(p));
  if (k == 1) return prime_field(p);
  auto r = std::shared_ptr<RingSpec>(new RingSpec());
  r->kind_ = RingKind::FiniteField;
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < k; ++i) q *= p;
  r->name_ = name.empty() ? "F" + std::to_string(q) : std::move(name);
  r->n_ = p;
  r->dim_ = k;
  r->labels_.push_back("1");
  for (std::size_t i = 1; i < k; ++i) r->labels_.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  r->table_.assign(k, std::vector<Vec>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec mono(i + j + 1, 0);
      mono[i + j] = 1;
      Vec red = poly_mod(mono, f, p);
      red.resize(k, 0);
      r->table_[i][j] = red;
    }
  r->one_ = vec::unit(k, 0);
  r->field_ = true;
  r->finalize();
  return r;
}

RingSpec::Ptr RingSpec::finite_field_q(std::uint32_t q) {
  if (is_prime(q)) return prime_field(q);
  switch (q) {
    case 4: return finite_field(2, {1, 1, 1});
    case 8: return finite_field(2, {1, 1, 0, 1});
    case 9: return finite_field(3, {1, 0, 1});
    case 16: return finite_field(2, {1, 1, 0, 0, 1});
    case 25: return finite_field(5, {2, 1, 1});
    case 27: return finite_field(3, {1, 2, 0, 1});
    default: throw Error("no built-in polynomial for F_" + std::to_string(q));
  }
}

RingSpec::Ptr RingSpec::structure_constants(std::string name, std::vector<std::string> labels, Coeff n,
                                            std::vector<std::vector<Vec>> table, Vec unit,
                                            std::optional<ModMatrix> involution) {
  if (n < 2) throw Error("structure-constant ring needs characteristic >= 2");
  std::size_t d = labels.size();
  if (d == 0 || table.size() != d || unit.size() != d)
    throw Error("structure-constant table does not match the basis size");
  for (auto& row : table) {
    if (row.size() != d) throw Error("structure-constant table does not match the basis size");
    for (auto& c : row) {
      if (c.size() != d) throw Error("structure-constant vector has wrong length");
      for (auto& x : c) x %= n;
    }
  }
  for (auto& x : unit) x %= n;
  if (involution && (involution->rows() != d || involution->cols() != d))
    throw Error("involution matrix has wrong shape");
  auto r = std::shared_ptr<RingSpec>(new RingSpec());
  r->kind_ = RingKind::StructureConstants;
  r->name_ = std::move(name);
  r->n_ = n;
  r->dim_ = d;
  r->labels_ = std::move(labels);
  r->table_ = std::move(table);
  r->one_ = std::move(unit);
  r->invol_ = std::move(involution);
  Report rep = verify_ring_axioms(*r);
  if (!rep.passed()) throw Error("ring axioms fail for " + r->name_ + ": " + rep.first_failure());
  r->finalize();
  if (is_prime(n) && r->card_ <= 1024) {
    bool field = true;
    for (Code a = 1; a < r->card_ && field; ++a) field = r->unit_inverse(a).has_value();
    r->field_ = field;
  }
  return r;
}

RingSpec::Ptr RingSpec::from_json(const nlohmann::json& j) {
  Coeff n = j.contains("p") ? j.at("p").get<Coeff>() : j.at("n").get<Coeff>();
  auto labels = j.at("labels").get<std::vector<std::string>>();
  std::size_t d = labels.size();
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d, Vec(d, 0)));
  for (auto& t : j.at("table")) {
    auto i = t.at(0).get<std::size_t>();
    auto k = t.at(1).get<std::size_t>();
    if (i >= d || k >= d) throw Error("structure-constant index out of range");
    table[i][k] = t.at(2).get<Vec>();
  }
  Vec unit = j.at("unit").get<Vec>();
  std::optional<ModMatrix> inv;
  if (j.contains("involution")) {
    auto cols = j.at("involution").get<std::vector<Vec>>();
    if (cols.size() != d) throw Error("involution needs one image per basis element");
    inv = ModMatrix::from_columns(cols, d, n);
  }
  std::string name = j.value("name", std::string("A"));
  return structure_constants(name, labels, n, table, unit, inv);
}

RingSpec::Ptr RingSpec::matrix(Ptr base, std::size_t m) {
  if (m == 0) throw Error("Mat_0 is not unital");
  std::size_t db = base->dim();
  std::size_t d = m * m * db;
  auto idx = [&](std::size_t r, std::size_t c, std::size_t t) { return (r * m + c) * db + t; };
  auto r = std::shared_ptr<RingSpec>(new RingSpec());
  r->kind_ = RingKind::Matrix;
  r->name_ = "Mat" + std::to_string(m) + "(" + base->name() + ")";
  r->n_ = base->characteristic();
  r->dim_ = d;
  r->mat_base_ = base;
  r->mat_size_ = m;
  r->labels_.resize(d);
  r->table_.assign(d, std::vector<Vec>(d, Vec(d, 0)));
  r->one_.assign(d, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t t = 0; t < db; ++t) {
        std::string lab = "E" + std::to_string(a + 1) + std::to_string(b + 1);
        if (db > 1) lab += "*" + base->labels()[t];
        r->labels_[idx(a, b, t)] = lab;
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t t = 0; t < db; ++t) r->one_[idx(a, a, t)] = base->one()[t];
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t t = 0; t < db; ++t)
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t u = 0; u < db; ++u) {
            const Vec& prod = base->table()[t][u];
            for (std::size_t w = 0; w < db; ++w) r->table_[idx(a, b, t)][idx(b, c, u)][idx(a, c, w)] = prod[w];
          }
  if (base->has_involution() || base->commutative()) {
    ModMatrix inv(d, d, r->n_);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t t = 0; t < db; ++t) {
          Vec img = base->involution(vec::unit(db, t));
          for (std::size_t w = 0; w < db; ++w) inv.at(idx(b, a, w), idx(a, b, t)) = img[w];
        }
    r->invol_ = inv;
  }
  r->finalize();
  return r;
}

Vec RingSpec::mul(const Vec& a, const Vec& b) const {
  Vec r(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      vec::axpy(mod_mul(a[i], b[j], n_), table_[i][j], r, n_);
    }
  }
  return r;
}

Vec RingSpec::involution(const Vec& a) const {
  if (invol_) return invol_->apply(a);
  if (commutative_) return a;
  throw Error("ring " + name_ + " has no involution");
}

RingSpec::Code RingSpec::add(Code a, Code b) const {
  if (!add_t_.empty()) return add_t_[a * card_ + b];
  return code(vec::add(coords(a), coords(b), n_));
}

RingSpec::Code RingSpec::sub(Code a, Code b) const { return add(a, neg(b)); }

RingSpec::Code RingSpec::neg(Code a) const {
  if (!neg_t_.empty()) return neg_t_[a];
  return code(vec::neg(coords(a), n_));
}

RingSpec::Code RingSpec::mul(Code a, Code b) const {
  if (!mul_t_.empty()) return mul_t_[a * card_ + b];
  return code(mul(coords(a), coords(b)));
}

RingSpec::Code RingSpec::involution(Code a) const {
  if (!inv_t_.empty()) return inv_t_[a];
  return code(involution(coords(a)));
}

std::optional<RingSpec::Code> RingSpec::unit_inverse(Code a) const {
  if (a < unit_inv_.size() && unit_inv_[a] != -1) {
    if (unit_inv_[a] == -2) return std::nullopt;
    return static_cast<Code>(unit_inv_[a]);
  }
  if (dim_ == 1) {
    Coeff inv = mod_inverse(a, n_);
    std::optional<Code> res;
    if (inv) res = inv;
    if (a < unit_inv_.size()) unit_inv_[a] = res ? std::int64_t{*res} : -2;
    return res;
  }
  if (card_ > (std::uint64_t{1} << 20)) throw BudgetExceeded("unit search in " + name_, card_);
  std::optional<Code> res;
  for (Code b = 0; b < card_; ++b)
    if (mul(a, b) == one_code_ && mul(b, a) == one_code_) {
      res = b;
      break;
    }
  if (a < unit_inv_.size()) unit_inv_[a] = res ? std::int64_t{*res} : -2;
  return res;
}

std::string RingSpec::str(Code a) const {
  Vec c = coords(a);
  if (dim_ == 1) return std::to_string(c[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!c[i]) continue;
    os << (first ? "" : "+") << coeff_label(c[i], labels_[i]);
    first = false;
  }
  return first ? "0" : os.str();
}

Report verify_ring_axioms(const RingSpec& ring) {
  Report rep("ring axioms: " + ring.name());
  std::size_t d = ring.dim();
  Coeff n = ring.characteristic();
  const auto& lab = ring.labels();
  auto& assoc = rep.check("associativity");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec ei = vec::unit(d, i), ej = vec::unit(d, j), ek = vec::unit(d, k);
        bool ok = ring.mul(ring.mul(ei, ej), ek) == ring.mul(ei, ring.mul(ej, ek));
        assoc.expect(ok, "(" + lab[i] + "*" + lab[j] + ")*" + lab[k] + " != " + lab[i] + "*(" + lab[j] +
                             "*" + lab[k] + ")");
      }
  auto& unit = rep.check("unitality");
  for (std::size_t i = 0; i < d; ++i) {
    Vec ei = vec::unit(d, i);
    unit.expect(ring.mul(ring.one(), ei) == ei && ring.mul(ei, ring.one()) == ei,
                "1*" + lab[i] + " or " + lab[i] + "*1 differs from " + lab[i]);
  }
  auto& dist = rep.check("distributivity");
  std::mt19937_64 rng(7);
  std::size_t samples = 256;
  for (std::size_t s = 0; s < samples; ++s) {
    Vec a(d), b(d), c(d);
    for (std::size_t i = 0; i < d; ++i) {
      a[i] = static_cast<Coeff>(rng() % n);
      b[i] = static_cast<Coeff>(rng() % n);
      c[i] = static_cast<Coeff>(rng() % n);
    }
    bool ok = ring.mul(a, vec::add(b, c, n)) == vec::add(ring.mul(a, b), ring.mul(a, c), n) &&
              ring.mul(vec::add(a, b, n), c) == vec::add(ring.mul(a, c), ring.mul(b, c), n);
    dist.expect(ok, "a=" + vec::str(a) + " b=" + vec::str(b) + " c=" + vec::str(c));
  }
  if (ring.has_involution()) {
    auto& inv = rep.check("involution");
    inv.expect(ring.involution(ring.one()) == ring.one(), "involution does not fix 1");
    for (std::size_t i = 0; i < d; ++i) {
      Vec ei = vec::unit(d, i);
      inv.expect(ring.involution(ring.involution(ei)) == ei, "involution is not of order 2 on " + lab[i]);
      for (std::size_t j = 0; j < d; ++j) {
        Vec ej = vec::unit(d, j);
        bool ok = ring.involution(ring.mul(ei, ej)) == ring.mul(ring.involution(ej), ring.involution(ei));
        inv.expect(ok, "(" + lab[i] + "*" + lab[j] + ")^J != " + lab[j] + "^J*" + lab[i] + "^J");
      }
    }
  }
  return rep;
}

std::vector<RingElement> enumerate_units(const RingSpec::Ptr& ring, std::size_t cap) {
  if (ring->cardinality() > cap)
    throw BudgetExceeded("unit enumeration of " + ring->name() + " exceeds cap", cap);
  std::vector<RingElement> out;
  for (RingSpec::Code a = 0; a < ring->cardinality(); ++a)
    if (ring->unit_inverse(a)) out.emplace_back(ring, a);
  return out;
}

}  // namespace jpst
