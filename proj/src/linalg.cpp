#include "jpst/linalg.hpp"

#include <algorithm>
#include <deque>

namespace jpst {

ModMatrix ModMatrix::identity(std::size_t d, Coeff n) {
  ModMatrix m(d, d, n);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1 % n;
  return m;
}

ModMatrix ModMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, Coeff n) {
  ModMatrix m(rows, cols.size(), n);
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vec ModMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void ModMatrix::set_column(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vec ModMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols_ != o.rows_) throw Error("ModMatrix: shape mismatch in product");
  ModMatrix r(rows_, o.cols_, n_);
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      Coeff a = at(i, k);
      if (!a) continue;
      const Coeff* orow = &o.data_[k * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += std::uint64_t{a} * orow[j];
    }
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) = static_cast<Coeff>(acc[j] % n_);
  }
  return r;
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  ModMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = mod_add(data_[i], o.data_[i], n_);
  return r;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const {
  ModMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = mod_sub(data_[i], o.data_[i], n_);
  return r;
}

Vec ModMatrix::apply(const Vec& v) const {
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < cols_; ++k) s += std::uint64_t{at(i, k)} * v[k];
    r[i] = static_cast<Coeff>(s % n_);
  }
  return r;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix r(cols_, rows_, n_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool ModMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u % n_ : 0u)) return false;
  return true;
}

bool ModMatrix::is_zero() const { return vec::is_zero(data_); }

std::size_t ModMatrix::hash() const {
  std::size_t h = rows_ * 1315423911u + cols_;
  for (Coeff c : data_) h = h * 1000003u ^ c;
  return h;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t ncols, Coeff p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Coeff inv = mod_inverse(rows[r][c], p);
    for (auto& x : rows[r]) x = mod_mul(x, inv, p);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c] == 0) continue;
      Coeff f = mod_neg(rows[k][c], p);
      vec::axpy(f, rows[r], rows[k], p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> rows_of(const ModMatrix& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  return rows;
}

void require_prime(Coeff n) {
  if (!is_prime(n)) throw Error("field routine called with non-prime modulus " + std::to_string(n));
}

}  // namespace

std::size_t rank(const ModMatrix& m) {
  require_prime(m.modulus());
  auto rows = rows_of(m);
  return rref(rows, m.cols(), m.modulus()).size();
}

std::vector<Vec> kernel_basis(const ModMatrix& m) {
  Coeff p = m.modulus();
  require_prime(p);
  auto rows = rows_of(m);
  auto piv = rref(rows, m.cols(), p);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = mod_neg(rows[k][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const ModMatrix& m, const Vec& b) {
  Coeff p = m.modulus();
  require_prime(p);
  std::vector<Vec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i] = m.row(i);
    rows[i].push_back(b[i]);
  }
  auto piv = rref(rows, m.cols() + 1, p);
  Vec x(m.cols(), 0);
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == m.cols()) return std::nullopt;
    x[piv[k]] = rows[k][m.cols()];
  }
  return x;
}

std::optional<ModMatrix> inverse(const ModMatrix& m) {
  Coeff p = m.modulus();
  require_prime(p);
  std::size_t d = m.rows();
  if (d != m.cols()) return std::nullopt;
  std::vector<Vec> rows(d);
  for (std::size_t i = 0; i < d; ++i) {
    rows[i] = m.row(i);
    rows[i].resize(2 * d, 0);
    rows[i][d + i] = 1;
  }
  auto piv = rref(rows, d, p);
  if (piv.size() != d) return std::nullopt;
  ModMatrix inv(d, d, p);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) inv.at(i, j) = rows[i][d + j];
  return inv;
}

std::optional<ModMatrix> invert(const ModMatrix& m) {
  Coeff n = m.modulus();
  if (is_prime(n)) return inverse(m);
  std::size_t d = m.rows();
  if (d != m.cols()) return std::nullopt;
  std::vector<Vec> rows(d);
  for (std::size_t i = 0; i < d; ++i) {
    rows[i] = m.row(i);
    rows[i].resize(2 * d, 0);
    rows[i][d + i] = 1 % n;
  }
  auto sub_mul = [&](Vec& a, const Vec& b, Coeff q) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = mod_sub(a[k], mod_mul(q, b[k], n), n);
  };
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t r = c + 1; r < d; ++r) {
      while (rows[r][c] != 0) {
        Coeff q = rows[c][c] / rows[r][c];
        sub_mul(rows[c], rows[r], q);
        std::swap(rows[c], rows[r]);
      }
    }
    Coeff inv = mod_inverse(rows[c][c], n);
    if (inv == 0) return std::nullopt;
    rows[c] = vec::scale(inv, rows[c], n);
    for (std::size_t r = 0; r < d; ++r)
      if (r != c && rows[r][c] != 0) sub_mul(rows[r], rows[c], rows[r][c]);
  }
  ModMatrix out(d, d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.at(i, j) = rows[i][d + j];
  return out;
}

// ---------------------------------------------------------------- Submodule

Submodule::Submodule(Coeff n, std::size_t d, const std::vector<Vec>& generators, std::size_t cap)
    : n_(n), d_(d), field_(is_prime(n)), cap_(cap) {
  if (field_)
    build_field(generators);
  else
    build_ring(generators, cap);
}

Submodule Submodule::whole(Coeff n, std::size_t d) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(vec::unit(d, i));
  return Submodule(n, d, gens);
}

void Submodule::build_field(const std::vector<Vec>& gens) {
  for (const Vec& g : gens) {
    Vec v = g;
    std::size_t r = basis_.size();
    Vec t(r + 1, 0);
    t[r] = 1;
    for (std::size_t k = 0; k < ech_.size(); ++k) {
      Coeff lam = v[piv_[k]];
      if (!lam) continue;
      Coeff f = mod_neg(lam, n_);
      vec::axpy(f, ech_[k], v, n_);
      Vec padded = ech_in_basis_[k];
      padded.resize(r + 1, 0);
      vec::axpy(f, padded, t, n_);
    }
    std::size_t p = 0;
    while (p < d_ && v[p] == 0) ++p;
    if (p == d_) continue;
    Coeff inv = mod_inverse(v[p], n_);
    v = vec::scale(inv, v, n_);
    t = vec::scale(inv, t, n_);
    for (std::size_t k = 0; k < ech_.size(); ++k) {
      Coeff mu = ech_[k][p];
      if (!mu) continue;
      Coeff f = mod_neg(mu, n_);
      vec::axpy(f, v, ech_[k], n_);
      ech_in_basis_[k].resize(r + 1, 0);
      vec::axpy(f, t, ech_in_basis_[k], n_);
    }
    ech_.push_back(v);
    piv_.push_back(p);
    ech_in_basis_.push_back(t);
    basis_.push_back(g);
  }
  for (auto& t : ech_in_basis_) t.resize(basis_.size(), 0);
}

void Submodule::build_ring(const std::vector<Vec>& gens, std::size_t cap) {
  // additive closure
  elems_.insert(encode(vec::zero(d_), n_));
  std::deque<Vec> queue{vec::zero(d_)};
  std::vector<Vec> nz;
  for (auto& g : gens)
    if (!vec::is_zero(g)) nz.push_back(g);
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    for (auto& g : nz) {
      Vec w = vec::add(v, g, n_);
      if (elems_.insert(encode(w, n_)).second) {
        if (elems_.size() > cap) throw BudgetExceeded("submodule enumeration exceeds cap", cap);
        queue.push_back(std::move(w));
      }
    }
  }
  // greedy free basis, generators first
  std::vector<Vec> candidates = nz;
  std::vector<std::uint64_t> sorted(elems_.begin(), elems_.end());
  std::sort(sorted.begin(), sorted.end());
  for (auto c : sorted) candidates.push_back(decode(c, n_, d_));
  std::unordered_set<std::uint64_t> span{encode(vec::zero(d_), n_)};
  for (auto& c : candidates) {
    if (span.size() == elems_.size()) break;
    std::unordered_set<std::uint64_t> next;
    for (auto s : span) {
      Vec sv = decode(s, n_, d_);
      for (Coeff k = 0; k < n_; ++k) next.insert(encode(vec::add(sv, vec::scale(k, c, n_), n_), n_));
    }
    if (next.size() == span.size() * n_) {
      basis_.push_back(c);
      span = std::move(next);
    }
  }
  free_ = span.size() == elems_.size();
  if (!free_) {
    basis_ = nz;  // keep as generators; coordinates unavailable
    return;
  }
  std::uint64_t total = elems_.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    Vec c = decode(code, n_, basis_.size());
    coords_[encode(combine(c), n_)] = c;
  }
}

std::uint64_t Submodule::size() const {
  if (!field_) return elems_.size();
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (s > (std::uint64_t{1} << 62) / n_) return ~std::uint64_t{0};
    s *= n_;
  }
  return s;
}

std::optional<Vec> Submodule::reduce(const Vec& v) const {
  Vec res = v;
  Vec coords(basis_.size(), 0);
  for (std::size_t k = 0; k < ech_.size(); ++k) {
    Coeff lam = res[piv_[k]];
    if (!lam) continue;
    Coeff f = mod_neg(lam, n_);
    vec::axpy(f, ech_[k], res, n_);
    vec::axpy(lam, ech_in_basis_[k], coords, n_);
  }
  if (!vec::is_zero(res)) return std::nullopt;
  return coords;
}

bool Submodule::contains(const Vec& v) const {
  if (field_) return reduce(v).has_value();
  return elems_.count(encode(v, n_)) > 0;
}

std::optional<Vec> Submodule::coordinates(const Vec& v) const {
  if (field_) return reduce(v);
  if (!free_) throw Error("coordinates requested in a non-free submodule");
  auto it = coords_.find(encode(v, n_));
  if (it == coords_.end()) return std::nullopt;
  return it->second;
}

Vec Submodule::combine(const Vec& coords) const {
  Vec v = vec::zero(d_);
  for (std::size_t i = 0; i < coords.size(); ++i) vec::axpy(coords[i], basis_[i], v, n_);
  return v;
}

Vec Submodule::canonical(const Vec& v) const {
  if (field_) {
    Vec res = v;
    for (std::size_t k = 0; k < ech_.size(); ++k) {
      Coeff lam = res[piv_[k]];
      if (lam) vec::axpy(mod_neg(lam, n_), ech_[k], res, n_);
    }
    return res;
  }
  std::uint64_t best = ~std::uint64_t{0};
  for (auto c : elems_) best = std::min(best, encode(vec::add(v, decode(c, n_, d_), n_), n_));
  return decode(best, n_, d_);
}

std::vector<Vec> Submodule::elements(std::size_t cap) const {
  std::vector<Vec> out;
  if (!field_) {
    if (elems_.size() > cap) throw BudgetExceeded("submodule element listing exceeds cap", cap);
    std::vector<std::uint64_t> sorted(elems_.begin(), elems_.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto c : sorted) out.push_back(decode(c, n_, d_));
    return out;
  }
  std::uint64_t total = checked_power(n_, basis_.size(), cap);
  for (std::uint64_t code = 0; code < total; ++code)
    out.push_back(combine(decode(code, n_, basis_.size())));
  return out;
}

Submodule Submodule::intersect(const Submodule& o) const {
  if (field_) {
    std::vector<Vec> cols = basis_;
    for (auto& b : o.basis_) cols.push_back(vec::neg(b, n_));
    if (cols.empty()) return zero(n_, d_);
    ModMatrix m = ModMatrix::from_columns(cols, d_, n_);
    std::vector<Vec> gens;
    for (auto& k : kernel_basis(m)) {
      Vec a(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(basis_.size()));
      gens.push_back(combine(a));
    }
    return Submodule(n_, d_, gens);
  }
  std::vector<Vec> gens;
  for (auto c : elems_)
    if (o.elems_.count(c)) gens.push_back(decode(c, n_, d_));
  std::sort(gens.begin(), gens.end());
  return Submodule(n_, d_, gens, cap_);
}

Submodule Submodule::sum(const Submodule& o) const {
  std::vector<Vec> gens = basis_;
  gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
  return Submodule(n_, d_, gens, cap_);
}

bool Submodule::subset_of(const Submodule& o) const {
  if (field_) {
    for (auto& b : basis_)
      if (!o.contains(b)) return false;
    return true;
  }
  for (auto c : elems_)
    if (!o.elems_.count(c)) return false;
  return true;
}

Submodule kernel_module(const ModMatrix& m, std::size_t cap) {
  Coeff n = m.modulus();
  if (is_prime(n)) return Submodule(n, m.cols(), kernel_basis(m));
  std::uint64_t total = checked_power(n, m.cols(), cap);
  std::vector<Vec> gens;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vec v = decode(code, n, m.cols());
    if (vec::is_zero(m.apply(v))) gens.push_back(std::move(v));
  }
  return Submodule(n, m.cols(), gens, cap);
}

}  // namespace jpst
