#include "jpst/tkk.hpp"

namespace jpst {

namespace {

ModMatrix scaled(const ModMatrix& m, Coeff c) {
  ModMatrix out(m.rows(), m.cols(), m.modulus());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < m.cols(); ++k) out.at(r, k) = mod_mul(c, m.at(r, k), m.modulus());
  return out;
}

OpPair op_zero(std::size_t dp, std::size_t dm, Coeff n) { return {ModMatrix(dp, dp, n), ModMatrix(dm, dm, n)}; }
OpPair op_add(const OpPair& a, const OpPair& b) { return {a.plus + b.plus, a.minus + b.minus}; }
OpPair op_scale(const OpPair& a, Coeff c) { return {scaled(a.plus, c), scaled(a.minus, c)}; }
OpPair op_commutator(const OpPair& a, const OpPair& b) {
  return {a.plus * b.plus - b.plus * a.plus, a.minus * b.minus - b.minus * a.minus};
}

OpPair unflatten(const Vec& v, std::size_t dp, std::size_t dm, Coeff n) {
  OpPair d = op_zero(dp, dm, n);
  std::size_t t = 0;
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t c = 0; c < dp; ++c) d.plus.at(r, c) = v[t++];
  for (std::size_t r = 0; r < dm; ++r)
    for (std::size_t c = 0; c < dm; ++c) d.minus.at(r, c) = v[t++];
  return d;
}

Vec unit(std::size_t d, std::size_t i) {
  Vec v(d, 0);
  v[i] = 1;
  return v;
}

OpPair zeta_ops(const JordanPair& p) {
  Coeff n = p.modulus();
  std::size_t dm = p.dim(Sign::Minus);
  return {ModMatrix::identity(p.dim(Sign::Plus), n), scaled(ModMatrix::identity(dm, n), mod_neg(1, n))};
}

OpPair delta_of(const JordanPair& p, const Vec& x, const Vec& y) {
  Coeff n = p.modulus();
  return {p.D_map(Sign::Plus, x, y), scaled(p.D_map(Sign::Minus, y, x), mod_neg(1, n))};
}

std::vector<Vec> l0_generators(const JordanPair& p) {
  std::vector<Vec> gens{flatten(zeta_ops(p))};
  std::size_t dp = p.dim(Sign::Plus), dm = p.dim(Sign::Minus);
  for (std::size_t i = 0; i < dp; ++i)
    for (std::size_t j = 0; j < dm; ++j) gens.push_back(flatten(delta_of(p, unit(dp, i), unit(dm, j))));
  return gens;
}

std::string show(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

Vec flatten(const OpPair& d) {
  Vec v = d.plus.data();
  v.insert(v.end(), d.minus.data().begin(), d.minus.data().end());
  return v;
}

bool l0_contains(const JordanPair& pair, const OpPair& d, std::size_t cap) {
  Submodule l0(pair.modulus(), d.plus.data().size() + d.minus.data().size(), l0_generators(pair), cap);
  return l0.contains(flatten(d));
}

TkkAlgebra TkkAlgebra::build(const JordanPair& pair) {
  TkkAlgebra a;
  a.pair_ = pair;
  Coeff n = pair.modulus();
  a.dp_ = pair.dim(Sign::Plus);
  a.dm_ = pair.dim(Sign::Minus);
  auto gens = l0_generators(pair);
  a.l0_ = Submodule(n, a.dp_ * a.dp_ + a.dm_ * a.dm_, gens);
  if (!a.l0_.is_free())
    throw Error("L0 of " + pair.name() + " is not a free Z/" + std::to_string(n) + "-module; use l0_contains");
  for (auto& b : a.l0_.basis()) a.l0_basis_.push_back(unflatten(b, a.dp_, a.dm_, n));
  a.d0_ = a.l0_basis_.size();
  a.zeta_first_ = !vec::is_zero(gens[0]) && a.d0_ > 0 && a.l0_.basis()[0] == gens[0];

  std::size_t N = a.dim();
  a.table_.assign(N * N, Vec(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Vec ei = unit(N, i), ej = unit(N, j);
      Vec xa = a.plus_part(ei), xb = a.plus_part(ej), ya = a.minus_part(ei), yb = a.minus_part(ej);
      OpPair da = a.ops(ei), db = a.ops(ej);
      Vec out(N, 0);
      Vec xp = vec::sub(da.plus.apply(xb), db.plus.apply(xa), n);
      Vec ym = vec::sub(da.minus.apply(yb), db.minus.apply(ya), n);
      OpPair l = op_add(op_add(op_scale(delta_of(pair, xa, yb), mod_neg(1, n)), delta_of(pair, xb, ya)),
                        op_commutator(da, db));
      Vec lc = a.from_ops(l);
      for (std::size_t k = 0; k < a.dp_; ++k) out[k] = xp[k];
      for (std::size_t k = 0; k < a.d0_; ++k) out[a.dp_ + k] = lc[a.dp_ + k];
      for (std::size_t k = 0; k < a.dm_; ++k) out[a.dp_ + a.d0_ + k] = ym[k];
      a.table_[i * N + j] = std::move(out);
    }
  return a;
}

Vec TkkAlgebra::from_plus(const Vec& x) const {
  Vec v = zero();
  for (std::size_t k = 0; k < dp_; ++k) v[k] = x[k];
  return v;
}

Vec TkkAlgebra::from_minus(const Vec& y) const {
  Vec v = zero();
  for (std::size_t k = 0; k < dm_; ++k) v[dp_ + d0_ + k] = y[k];
  return v;
}

Vec TkkAlgebra::from_ops(const OpPair& d) const {
  auto c = l0_.coordinates(flatten(d));
  if (!c) throw Error("operator pair is outside L0");
  Vec v = zero();
  for (std::size_t k = 0; k < d0_; ++k) v[dp_ + k] = (*c)[k];
  return v;
}

Vec TkkAlgebra::zeta() const { return from_ops(zeta_ops(pair_)); }
OpPair TkkAlgebra::delta_ops(const Vec& x, const Vec& y) const { return delta_of(pair_, x, y); }
Vec TkkAlgebra::delta(const Vec& x, const Vec& y) const { return from_ops(delta_of(pair_, x, y)); }

Vec TkkAlgebra::plus_part(const Vec& a) const { return Vec(a.begin(), a.begin() + dp_); }
Vec TkkAlgebra::minus_part(const Vec& a) const { return Vec(a.begin() + dp_ + d0_, a.end()); }

OpPair TkkAlgebra::ops(const Vec& a) const {
  Coeff n = modulus();
  OpPair d = op_zero(dp_, dm_, n);
  for (std::size_t k = 0; k < d0_; ++k)
    if (a[dp_ + k]) d = op_add(d, op_scale(l0_basis_[k], a[dp_ + k]));
  return d;
}

Vec TkkAlgebra::bracket(const Vec& a, const Vec& b) const {
  std::size_t N = dim();
  Coeff n = modulus();
  Vec out(N, 0);
  for (std::size_t i = 0; i < N; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < N; ++j) {
      if (!b[j]) continue;
      vec::axpy(mod_mul(a[i], b[j], n), table_[i * N + j], out, n);
    }
  }
  return out;
}

bool preserves_bracket(const TkkAlgebra& alg, const ModMatrix& a, std::string* witness) {
  std::size_t N = alg.dim();
  std::vector<Vec> cols(N);
  for (std::size_t i = 0; i < N; ++i) cols[i] = a.column(i);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (a.apply(alg.basis_bracket(i, j)) != alg.bracket(cols[i], cols[j])) {
        if (witness) *witness = "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
        return false;
      }
  return true;
}

ModMatrix exp_aut(const TkkAlgebra& alg, Sign s, const Vec& w, bool verify) {
  const JordanPair& p = alg.pair();
  Coeff n = alg.modulus();
  std::size_t N = alg.dim(), dp = alg.dim_plus(), d0 = alg.dim0();
  if (w.size() != p.dim(s)) throw Error("exp argument has the wrong length");
  ModMatrix m(N, N, n);
  for (std::size_t k = 0; k < N; ++k) {
    Vec e = unit(N, k);
    Vec col = e;
    if (k >= dp && k < dp + d0) {
      OpPair d = alg.ops(e);
      // D -> D - D_s(w)
      Vec img = vec::neg(s == Sign::Plus ? d.plus.apply(w) : d.minus.apply(w), n);
      col = vec::add(col, s == Sign::Plus ? alg.from_plus(img) : alg.from_minus(img), n);
    } else if (s == Sign::Plus && k >= dp + d0) {
      // y -> y - delta(x, y) + Q_x y
      Vec y = alg.minus_part(e);
      col = vec::add(vec::sub(col, alg.delta(w, y), n), alg.from_plus(p.Q(Sign::Plus, w, y)), n);
    } else if (s == Sign::Minus && k < dp) {
      // x -> x + delta(x, y) + Q_y x
      Vec x = alg.plus_part(e);
      col = vec::add(vec::add(col, alg.delta(x, w), n), alg.from_minus(p.Q(Sign::Minus, w, x)), n);
    }
    m.set_column(k, col);
  }
  std::string wit;
  if (verify && !preserves_bracket(alg, m, &wit))
    throw Error(std::string("exp_") + sign_str(s) + show(w) + " does not preserve the bracket at " + wit);
  return m;
}

ModMatrix tkk_of_pair_aut(const TkkAlgebra& alg, const ModMatrix& fp, const ModMatrix& fm) {
  std::string wit;
  if (!is_automorphism(alg.pair(), fp, fm, &wit)) throw Error("not a pair automorphism: " + wit);
  auto ip = invert(fp), im = invert(fm);
  if (!ip || !im) throw Error("pair automorphism is not invertible");
  std::size_t N = alg.dim(), dp = alg.dim_plus(), d0 = alg.dim0();
  ModMatrix m(N, N, alg.modulus());
  for (std::size_t k = 0; k < N; ++k) {
    Vec e = unit(N, k);
    if (k < dp) {
      m.set_column(k, alg.from_plus(fp.apply(alg.plus_part(e))));
    } else if (k < dp + d0) {
      OpPair d = alg.ops(e);
      m.set_column(k, alg.from_ops({fp * d.plus * *ip, fm * d.minus * *im}));
    } else {
      m.set_column(k, alg.from_minus(fm.apply(alg.minus_part(e))));
    }
  }
  if (!preserves_bracket(alg, m, &wit)) throw Error("induced map does not preserve the bracket at " + wit);
  return m;
}

Submodule tkk_centre(const TkkAlgebra& alg) {
  std::size_t N = alg.dim();
  Coeff n = alg.modulus();
  if (N == 0) return Submodule::zero(n, 0);
  // c -> ([c, b_j])_j
  ModMatrix m(N * N, N, n);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const Vec& t = alg.basis_bracket(i, j);
      for (std::size_t l = 0; l < N; ++l) m.at(j * N + l, i) = t[l];
    }
  return kernel_module(m);
}

Report verify_tkk_suite(const TkkAlgebra& alg) {
  Report rep(alg.name());
  const JordanPair& p = alg.pair();
  std::size_t N = alg.dim();
  Coeff n = alg.modulus();

  auto& alt = rep.check("alternating");
  for (std::size_t i = 0; i < N; ++i) {
    alt.expect(vec::is_zero(alg.basis_bracket(i, i)), "[b" + std::to_string(i) + ", b" + std::to_string(i) + "] != 0");
    for (std::size_t j = i + 1; j < N; ++j)
      alt.expect(vec::add(alg.basis_bracket(i, j), alg.basis_bracket(j, i), n) == Vec(N, 0),
                 "[b" + std::to_string(i) + ", b" + std::to_string(j) + "] not antisymmetric");
  }

  auto& jac = rep.check("Jacobi");
  auto col = [&](const Vec& v, std::size_t k) {
    Vec out(N, 0);
    for (std::size_t l = 0; l < N; ++l)
      if (v[l]) vec::axpy(v[l], alg.basis_bracket(l, k), out, n);
    return out;
  };
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      for (std::size_t k = j + 1; k < N; ++k) {
        Vec s = col(alg.basis_bracket(i, j), k);
        s = vec::add(s, col(alg.basis_bracket(j, k), i), n);
        s = vec::add(s, col(alg.basis_bracket(k, i), j), n);
        jac.expect(vec::is_zero(s), "basis triple (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                        std::to_string(k) + ")");
      }

  auto& gr = rep.check("grading");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      int deg = alg.degree(i) + alg.degree(j);
      const Vec& t = alg.basis_bracket(i, j);
      bool ok = true;
      for (std::size_t l = 0; l < N; ++l)
        if (t[l] && alg.degree(l) != deg) ok = false;
      gr.expect(ok, "[b" + std::to_string(i) + ", b" + std::to_string(j) + "] leaves degree " + std::to_string(deg));
    }

  auto& ce = rep.check("centre");
  Submodule z = tkk_centre(alg);
  if (!alg.degenerate()) ce.expect(z.size() == 1, "centre has " + std::to_string(z.size()) + " elements");
  rep.data()["centre size"] = z.size();

  auto& dt = rep.check("delta vs triple");
  std::size_t dp = alg.dim_plus(), dm = alg.dim_minus();
  for (std::size_t i = 0; i < dp; ++i)
    for (std::size_t j = 0; j < dm; ++j) {
      Vec x = unit(dp, i), y = unit(dm, j);
      Vec d = alg.delta(x, y);
      OpPair o = alg.ops(d);
      dt.expect(o.plus == p.D_map(Sign::Plus, x, y) && o.minus == scaled(p.D_map(Sign::Minus, y, x), mod_neg(1, n)),
                "delta(" + show(x) + ", " + show(y) + ") operators");
      Vec xy = alg.bracket(alg.from_plus(x), alg.from_minus(y));
      Vec yx = alg.bracket(alg.from_minus(y), alg.from_plus(x));
      for (std::size_t k = 0; k < dp; ++k) {
        Vec z3 = unit(dp, k);
        dt.expect(alg.bracket(xy, alg.from_plus(z3)) == alg.from_plus(vec::neg(p.triple(Sign::Plus, x, y, z3), n)),
                  "[[x, y], z] != -{x y z} at x=" + show(x) + ", y=" + show(y) + ", z=" + show(z3));
      }
      for (std::size_t k = 0; k < dm; ++k) {
        Vec w = unit(dm, k);
        dt.expect(alg.bracket(yx, alg.from_minus(w)) == alg.from_minus(vec::neg(p.triple(Sign::Minus, y, x, w), n)),
                  "[[y, x], w] != -{y x w} at x=" + show(x) + ", y=" + show(y) + ", w=" + show(w));
      }
    }

  rep.data()["dim"] = N;
  rep.data()["dim L0"] = alg.dim0();
  rep.data()["zeta in basis"] = alg.zeta_in_basis();
  rep.data()["degenerate"] = alg.degenerate();
  return rep;
}

}  // namespace jpst
