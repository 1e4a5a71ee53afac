#include "jpst/jordan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace jpst {

std::string pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::Full: return "full";
    case PairKind::Rect: return "rect";
    case PairKind::Hermitian: return "hermitian";
    case PairKind::Alternating: return "alternating";
    case PairKind::Quadform: return "quadform";
    case PairKind::Quotient: return "quotient";
    case PairKind::Subpair: return "subpair";
    case PairKind::Custom: return "custom";
  }
  return "?";
}

JordanPair JordanPair::from_closures(std::string name, PairKind kind, Coeff n, std::array<std::size_t, 2> dims,
                                     std::array<QFunc, 2> q) {
  std::array<std::vector<ModMatrix>, 2> t;
  for (int s = 0; s < 2; ++s) {
    std::size_t ds = dims[s], dm = dims[1 - s];
    for (std::size_t k = 0; k < ds; ++k) {
      Vec ek = vec::unit(ds, k);
      for (std::size_t i = 0; i <= k; ++i) {
        Vec ei = vec::unit(ds, i);
        ModMatrix m(ds, dm, n);
        for (std::size_t j = 0; j < dm; ++j) {
          Vec ej = vec::unit(dm, j);
          Vec col = q[s](ek, ej);
          if (i != k) {
            col = vec::sub(q[s](vec::add(ei, ek, n), ej), col, n);
            col = vec::sub(col, q[s](ei, ej), n);
          }
          m.set_column(j, col);
        }
        t[s].push_back(std::move(m));
      }
    }
  }
  JordanPair p = from_tensors(std::move(name), kind, n, dims, std::move(t));
  p.closure_ = std::move(q);
  return p;
}

JordanPair JordanPair::from_tensors(std::string name, PairKind kind, Coeff n, std::array<std::size_t, 2> dims,
                                    std::array<std::vector<ModMatrix>, 2> tensors) {
  JordanPair p;
  p.name_ = std::move(name);
  p.kind_ = kind;
  p.n_ = n;
  p.dims_ = dims;
  for (int s = 0; s < 2; ++s) {
    std::size_t ds = dims[s];
    if (tensors[s].size() != ds * (ds + 1) / 2) throw Error("tensor count does not match the dimension");
    for (auto& m : tensors[s])
      if (m.rows() != ds || m.cols() != dims[1 - s] || m.modulus() != n) throw Error("tensor has the wrong shape");
    p.blocks_[s].assign(ds, std::nullopt);
    for (std::size_t i = 0; i < ds; ++i) p.labels_[s].push_back("b" + std::to_string(i));
  }
  p.tensors_ = std::move(tensors);
  return p;
}

std::uint64_t JordanPair::cardinality(Sign s, std::uint64_t cap) const { return checked_power(n_, dim(s), cap); }

namespace {
void check_len(const Vec& v, std::size_t d, const char* what) {
  if (v.size() != d) throw Error(std::string("wrong coordinate length for ") + what);
}
}  // namespace

Vec JordanPair::Q(Sign s, const Vec& x, const Vec& y) const {
  std::size_t ds = dim(s), dm = dim(opposite(s));
  check_len(x, ds, "Q argument");
  check_len(y, dm, "Q operand");
  Vec out(ds, 0);
  const auto& t = tensors_[idx(s)];
  for (std::size_t k = 0; k < ds; ++k) {
    if (!x[k]) continue;
    for (std::size_t i = 0; i <= k; ++i) {
      if (!x[i]) continue;
      Coeff c = mod_mul(x[i], x[k], n_);
      if (!c) continue;
      const ModMatrix& m = t[tensor_index(i, k)];
      for (std::size_t r = 0; r < ds; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < dm; ++j) acc += std::uint64_t{m.at(r, j)} * y[j];
        out[r] = mod_add(out[r], mod_mul(c, static_cast<Coeff>(acc % n_), n_), n_);
      }
    }
  }
  return out;
}

Vec JordanPair::Qpolar(Sign s, const Vec& x, const Vec& z, const Vec& y) const {
  std::size_t ds = dim(s), dm = dim(opposite(s));
  check_len(x, ds, "triple argument");
  check_len(z, ds, "triple argument");
  check_len(y, dm, "triple operand");
  Vec out(ds, 0);
  const auto& t = tensors_[idx(s)];
  for (std::size_t i = 0; i < ds; ++i) {
    if (!x[i]) continue;
    for (std::size_t k = 0; k < ds; ++k) {
      if (!z[k]) continue;
      Coeff c = mod_mul(x[i], z[k], n_);
      if (i == k) c = mod_add(c, c, n_);
      if (!c) continue;
      const ModMatrix& m = t[i <= k ? tensor_index(i, k) : tensor_index(k, i)];
      for (std::size_t r = 0; r < ds; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < dm; ++j) acc += std::uint64_t{m.at(r, j)} * y[j];
        out[r] = mod_add(out[r], mod_mul(c, static_cast<Coeff>(acc % n_), n_), n_);
      }
    }
  }
  return out;
}

Vec JordanPair::triple(Sign s, const Vec& x, const Vec& y, const Vec& z) const { return Qpolar(s, x, z, y); }

Vec JordanPair::Q_closure(Sign s, const Vec& x, const Vec& y) const {
  if (closure_[idx(s)]) return closure_[idx(s)](x, y);
  return Q(s, x, y);
}

PairElement JordanPair::q_op(const PairElement& x, const PairElement& y) const {
  if (y.sign != opposite(x.sign)) throw Error("Q(x)y needs opposite signs");
  return {x.sign, Q(x.sign, x.v, y.v)};
}

PairElement JordanPair::triple(const PairElement& x, const PairElement& y, const PairElement& z) const {
  if (z.sign != x.sign || y.sign != opposite(x.sign)) throw Error("{x y z} needs signs (s, -s, s)");
  return {x.sign, triple(x.sign, x.v, y.v, z.v)};
}

ModMatrix JordanPair::Q_map(Sign s, const Vec& x) const {
  std::size_t ds = dim(s), dm = dim(opposite(s));
  ModMatrix m(ds, dm, n_);
  for (std::size_t j = 0; j < dm; ++j) m.set_column(j, Q(s, x, vec::unit(dm, j)));
  return m;
}

ModMatrix JordanPair::D_map(Sign s, const Vec& x, const Vec& y) const {
  std::size_t ds = dim(s);
  ModMatrix m(ds, ds, n_);
  for (std::size_t k = 0; k < ds; ++k) m.set_column(k, triple(s, x, y, vec::unit(ds, k)));
  return m;
}

std::vector<Vec> JordanPair::elements(Sign s, std::size_t cap) const {
  std::uint64_t total = checked_power(n_, dim(s), cap);
  std::vector<Vec> out;
  out.reserve(total);
  for (std::uint64_t c = 0; c < total; ++c) out.push_back(decode(c, n_, dim(s)));
  return out;
}

Vec JordanPair::lift(Sign s, const Vec& coords) const {
  const auto& b = parent_basis_[idx(s)];
  if (b.empty() && dim(s) > 0) throw Error("pair has no parent");
  Vec out = b.empty() ? Vec{} : vec::zero(b[0].size());
  for (std::size_t i = 0; i < coords.size(); ++i) vec::axpy(coords[i], b[i], out, parent_n_);
  return out;
}

JordanPair zero_pair(Coeff n) {
  JordanPair p = JordanPair::from_tensors("zero", PairKind::Custom, n, {0, 0}, {});
  return p;
}

// ------------------------------------------------------------ identities

namespace {

struct Identity {
  std::string name;
  std::vector<int> side;     // 0: V^s, 1: V^-s
  std::vector<int> degree;   // 0 for identities that are not multilinearized
  std::function<Vec(const JordanPair&, Sign, const std::vector<Vec>&)> diff;  // lhs - rhs
};

std::vector<Identity> jordan_identities() {
  std::vector<Identity> ids;
  ids.push_back({"JP1", {0, 1, 1}, {2, 1, 1}, [](const JordanPair& p, Sign s, const std::vector<Vec>& a) {
                   Sign t = opposite(s);
                   Coeff n = p.modulus();
                   const Vec &x = a[0], &y = a[1], &v = a[2];
                   Vec lhs = p.triple(s, x, y, p.Q(s, x, v));
                   Vec rhs = p.Q(s, x, p.triple(t, y, x, v));
                   return vec::sub(lhs, rhs, n);
                 }});
  ids.push_back({"JP2", {0, 1, 0}, {2, 2, 1}, [](const JordanPair& p, Sign s, const std::vector<Vec>& a) {
                   Sign t = opposite(s);
                   const Vec &x = a[0], &y = a[1], &z = a[2];
                   Vec lhs = p.triple(s, p.Q(s, x, y), y, z);
                   Vec rhs = p.triple(s, x, p.Q(t, y, x), z);
                   return vec::sub(lhs, rhs, p.modulus());
                 }});
  ids.push_back({"JP3", {0, 1, 1}, {4, 2, 1}, [](const JordanPair& p, Sign s, const std::vector<Vec>& a) {
                   Sign t = opposite(s);
                   const Vec &x = a[0], &y = a[1], &v = a[2];
                   Vec lhs = p.Q(s, p.Q(s, x, y), v);
                   Vec rhs = p.Q(s, x, p.Q(t, y, p.Q(s, x, v)));
                   return vec::sub(lhs, rhs, p.modulus());
                 }});
  ids.push_back({"JP1 x-linearization", {0, 0, 1, 1}, {}, [](const JordanPair& p, Sign s, const std::vector<Vec>& a) {
                   Sign t = opposite(s);
                   Coeff n = p.modulus();
                   const Vec &x = a[0], &z = a[1], &y = a[2], &v = a[3];
                   Vec lhs = vec::add(p.triple(s, z, y, p.Q(s, x, v)), p.triple(s, x, y, p.Qpolar(t, x, z, v)), n);
                   Vec rhs = vec::add(p.Qpolar(s, x, z, p.triple(t, y, x, v)), p.Q(s, x, p.triple(t, y, z, v)), n);
                   return vec::sub(lhs, rhs, n);
                 }});
  return ids;
}

std::string args_str(const std::vector<Vec>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + vec::str(a[i]);
  return s;
}

Vec random_vec(std::mt19937_64& rng, std::size_t d, Coeff n) {
  Vec v(d);
  for (auto& c : v) c = static_cast<Coeff>(rng() % n);
  return v;
}

// Sum over nonempty subsets per variable of (-1)^(deg - |S|) F(sum over S).
Vec multilinear_value(const JordanPair& p, Sign s, const Identity& id, const std::vector<std::vector<Vec>>& copies) {
  Coeff n = p.modulus();
  std::size_t nv = id.degree.size();
  std::vector<std::uint32_t> mask(nv, 1);
  Vec total = p.zero(s);
  while (true) {
    std::vector<Vec> args(nv);
    int parity = 0;
    for (std::size_t k = 0; k < nv; ++k) {
      Sign sk = id.side[k] ? opposite(s) : s;
      args[k] = p.zero(sk);
      int bits = 0;
      for (int i = 0; i < id.degree[k]; ++i)
        if (mask[k] >> i & 1) {
          args[k] = vec::add(args[k], copies[k][i], n);
          ++bits;
        }
      parity += id.degree[k] - bits;
    }
    Vec f = id.diff(p, s, args);
    total = parity % 2 ? vec::sub(total, f, n) : vec::add(total, f, n);
    std::size_t k = 0;
    while (k < nv) {
      if (++mask[k] < (1u << id.degree[k])) break;
      mask[k] = 1;
      ++k;
    }
    if (k == nv) break;
  }
  return total;
}

}  // namespace

Report verify_jp_suite(const JordanPair& pair, const JordanOptions& opt) {
  Report rep("Jordan pair identities " + pair.name());
  std::mt19937_64 rng(opt.seed);
  Coeff n = pair.modulus();
  auto ids = jordan_identities();
  std::string mode_used;
  for (auto& id : ids) {
    auto& chk = rep.check(id.name);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      std::vector<std::size_t> dims;
      std::uint64_t tuples = 1;
      bool overflow = false;
      for (int side : id.side) {
        Sign sk = side ? opposite(s) : s;
        dims.push_back(pair.dim(sk));
        for (std::size_t i = 0; i < pair.dim(sk); ++i) {
          if (tuples > opt.exhaustive_cap) overflow = true;
          tuples *= n;
        }
      }
      if (tuples > opt.exhaustive_cap) overflow = true;
      bool exhaustive = opt.mode == SampleMode::Exhaustive || (opt.mode == SampleMode::Auto && !overflow);
      if (opt.mode == SampleMode::Exhaustive && overflow)
        throw BudgetExceeded("exhaustive " + id.name + " exceeds cap", opt.exhaustive_cap);
      if (mode_used.empty()) mode_used = exhaustive ? "exhaustive" : "sampled";
      else if (mode_used != (exhaustive ? "exhaustive" : "sampled")) mode_used = "mixed";
      std::vector<Vec> args(dims.size());
      if (exhaustive) {
        std::vector<std::uint64_t> sizes, code(dims.size(), 0);
        for (auto d : dims) sizes.push_back(checked_power(n, d, opt.exhaustive_cap));
        while (true) {
          for (std::size_t k = 0; k < dims.size(); ++k) args[k] = decode(code[k], n, dims[k]);
          Vec d = id.diff(pair, s, args);
          chk.expect(vec::is_zero(d), id.name + std::string(" sign ") + sign_str(s) + ": " + args_str(args));
          std::size_t k = 0;
          while (k < code.size() && ++code[k] == sizes[k]) code[k++] = 0;
          if (k == code.size()) break;
        }
      } else {
        for (std::size_t t = 0; t < opt.samples; ++t) {
          for (std::size_t k = 0; k < dims.size(); ++k) args[k] = random_vec(rng, dims[k], n);
          Vec d = id.diff(pair, s, args);
          chk.expect(vec::is_zero(d), id.name + std::string(" sign ") + sign_str(s) + ": " + args_str(args));
        }
      }
    }
    if (id.degree.empty()) continue;
    auto& lin = rep.check(id.name + " multilinear");
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      for (std::size_t t = 0; t < opt.linearization_samples; ++t) {
        std::vector<std::vector<Vec>> copies(id.degree.size());
        std::string w;
        for (std::size_t k = 0; k < id.degree.size(); ++k) {
          Sign sk = id.side[k] ? opposite(s) : s;
          for (int i = 0; i < id.degree[k]; ++i) {
            copies[k].push_back(random_vec(rng, pair.dim(sk), n));
            w += vec::str(copies[k].back()) + " ";
          }
        }
        Vec d = multilinear_value(pair, s, id, copies);
        lin.expect(vec::is_zero(d), id.name + " multilinear sign " + sign_str(s) + ": " + w);
      }
    }
  }
  rep.data()["mode"] = mode_used;
  rep.data()["pair"] = pair.name();
  return rep;
}

Report verify_quadratic_contract(const JordanPair& pair, const JordanOptions& opt) {
  Report rep("quadratic map contract " + pair.name());
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  Coeff n = pair.modulus();
  auto& hom = rep.check("homogeneity");
  auto& bil = rep.check("bilinear polarization");
  auto& lin = rep.check("linear in y");
  auto& clo = rep.check("closure matches tensor");
  std::size_t rounds = std::min<std::size_t>(opt.samples, 2000);
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    Sign t = opposite(s);
    std::size_t ds = pair.dim(s), dt = pair.dim(t);
    for (std::size_t r = 0; r < rounds; ++r) {
      Vec x = random_vec(rng, ds, n), x2 = random_vec(rng, ds, n), z = random_vec(rng, ds, n);
      Vec y = random_vec(rng, dt, n), y2 = random_vec(rng, dt, n);
      Coeff c = static_cast<Coeff>(rng() % n);
      std::string w = std::string(sign_str(s)) + " x=" + vec::str(x) + " y=" + vec::str(y);
      hom.expect(pair.Q(s, vec::scale(c, x, n), y) == vec::scale(mod_mul(c, c, n), pair.Q(s, x, y), n), w);
      Vec lhs = pair.Qpolar(s, vec::add(x, x2, n), z, y);
      Vec rhs = vec::add(pair.Qpolar(s, x, z, y), pair.Qpolar(s, x2, z, y), n);
      bil.expect(lhs == rhs, w);
      lin.expect(pair.Q(s, x, vec::add(y, y2, n)) == vec::add(pair.Q(s, x, y), pair.Q(s, x, y2), n), w);
      Vec qc = pair.Q_closure(s, x, y);
      Vec pol = vec::sub(vec::sub(pair.Q_closure(s, vec::add(x, z, n), y), qc, n), pair.Q_closure(s, z, y), n);
      clo.expect(qc == pair.Q(s, x, y) && pol == pair.Qpolar(s, x, z, y), w);
    }
  }
  return rep;
}

// --------------------------------------------------- idempotents, Peirce

bool is_idempotent(const JordanPair& pair, const Vec& ep, const Vec& em) {
  return pair.Q(Sign::Plus, ep, em) == ep && pair.Q(Sign::Minus, em, ep) == em;
}

namespace {

std::vector<Vec> generators(const Submodule& m, std::size_t cap = 1 << 16) {
  if (m.is_field() || m.is_free()) return m.basis();
  auto el = m.elements(cap);
  std::vector<Vec> out;
  for (auto& e : el)
    if (!vec::is_zero(e)) out.push_back(e);
  return out;
}

ModMatrix stack(const ModMatrix& a, const ModMatrix& b) {
  ModMatrix m(a.rows() + b.rows(), a.cols(), a.modulus());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
  return m;
}

ModMatrix scaled(const ModMatrix& a, Coeff s) {
  ModMatrix m = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = mod_mul(s, a.at(r, c), a.modulus());
  return m;
}

Submodule image(const ModMatrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Submodule(m.modulus(), m.rows(), cols);
}

}  // namespace

std::array<std::size_t, 3> PeirceDecomp::ranks(Sign s) const {
  auto& sp = spaces[idx(s)];
  return {sp[2].rank(), sp[1].rank(), sp[0].rank()};
}

PeirceDecomp peirce(const JordanPair& pair, const Vec& ep, const Vec& em) {
  if (!is_idempotent(pair, ep, em)) throw Error("not an idempotent: (" + vec::str(ep) + ", " + vec::str(em) + ")");
  Coeff n = pair.modulus();
  PeirceDecomp out;
  out.report = Report("Peirce decomposition " + pair.name());
  auto& direct = out.report.check("direct sum");
  auto& proj = out.report.check("projections");
  std::array<Vec, 2> e{ep, em};
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    Sign t = opposite(s);
    std::size_t d = pair.dim(s);
    ModMatrix id = ModMatrix::identity(d, n);
    ModMatrix qt = pair.Q_map(t, e[idx(t)]);  // V^s -> V^-s
    ModMatrix p2 = pair.Q_map(s, e[idx(s)]) * qt;
    ModMatrix dd = pair.D_map(s, e[idx(s)], e[idx(t)]);
    auto& sp = out.spaces[idx(s)];
    sp[2] = kernel_module(p2 - id);
    sp[1] = kernel_module(dd - id);
    sp[0] = kernel_module(stack(qt, dd));
    ModMatrix p1 = dd - scaled(p2, 2 % n);
    ModMatrix p0 = id - dd + p2;
    out.projections[idx(s)] = {p0, p1, p2};
    std::uint64_t total = 1;
    for (auto& m : sp) total *= m.size();
    Submodule all = sp[0].sum(sp[1]).sum(sp[2]);
    bool ok = total == pair.cardinality(s) && all == Submodule::whole(n, d);
    direct.expect(ok, std::string("V") + sign_str(s) + " is not the direct sum of its Peirce spaces");
    if (!ok) throw Error("Peirce decomposition is not direct for " + pair.name());
    std::array<ModMatrix, 3> ps{p0, p1, p2};
    ModMatrix sum = p0 + p1 + p2;
    proj.expect(sum == id, std::string("projections do not sum to Id on V") + sign_str(s));
    for (int i = 0; i < 3; ++i) {
      proj.expect(ps[i] * ps[i] == ps[i], "P" + std::to_string(i) + sign_str(s) + " is not idempotent");
      proj.expect(image(ps[i]) == sp[i], "P" + std::to_string(i) + sign_str(s) + " has the wrong image");
      for (int j = 0; j < 3; ++j)
        if (i != j)
          proj.expect((ps[i] * ps[j]).is_zero(),
                      "P" + std::to_string(i) + " P" + std::to_string(j) + sign_str(s) + " != 0");
    }
  }
  auto& qrule = out.report.check("Q rule");
  auto& trule = out.report.check("triple rule");
  auto& zrule = out.report.check("V2 V0 rule");
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    Sign t = opposite(s);
    auto& sp = out.spaces[idx(s)];
    auto& tp = out.spaces[idx(t)];
    std::array<std::vector<Vec>, 3> gs, gt;
    for (int i = 0; i < 3; ++i) {
      gs[i] = generators(sp[i]);
      gt[i] = generators(tp[i]);
    }
    std::vector<Vec> all_s;
    for (std::size_t k = 0; k < pair.dim(s); ++k) all_s.push_back(vec::unit(pair.dim(s), k));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int target = 2 * i - j;
        for (auto& x : gs[i])
          for (auto& y : gt[j]) {
            Vec r = pair.Q(s, x, y);
            bool ok = (target >= 0 && target <= 2) ? sp[target].contains(r) : vec::is_zero(r);
            qrule.expect(ok, "Q(V" + std::to_string(i) + ")V" + std::to_string(j) + " sign " + sign_str(s));
          }
        for (int l = 0; l < 3; ++l) {
          int tg = i - j + l;
          for (auto& x : gs[i])
            for (auto& y : gt[j])
              for (auto& z : gs[l]) {
                Vec r = pair.triple(s, x, y, z);
                bool ok = (tg >= 0 && tg <= 2) ? sp[tg].contains(r) : vec::is_zero(r);
                trule.expect(ok, "{V" + std::to_string(i) + " V" + std::to_string(j) + " V" + std::to_string(l) +
                                     "} sign " + sign_str(s));
              }
        }
      }
    for (auto [i, j] : {std::pair{2, 0}, std::pair{0, 2}})
      for (auto& x : gs[i])
        for (auto& y : gt[j])
          for (auto& z : all_s)
            zrule.expect(vec::is_zero(pair.triple(s, x, y, z)),
                         "{V" + std::to_string(i) + " V" + std::to_string(j) + " V} sign " + sign_str(s));
  }
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    auto r = out.ranks(s);
    out.report.data()[std::string("ranks") + sign_str(s)] = {r[0], r[1], r[2]};
  }
  return out;
}

BergmannPair bergmann(const JordanPair& pair, const Vec& u, const Vec& v) {
  Coeff n = pair.modulus();
  BergmannPair b;
  b.plus = ModMatrix::identity(pair.dim(Sign::Plus), n) - pair.D_map(Sign::Plus, u, v) +
           pair.Q_map(Sign::Plus, u) * pair.Q_map(Sign::Minus, v);
  b.minus = ModMatrix::identity(pair.dim(Sign::Minus), n) - pair.D_map(Sign::Minus, v, u) +
            pair.Q_map(Sign::Minus, v) * pair.Q_map(Sign::Plus, u);
  auto ip = invert(b.plus);
  b.minus_inverse = invert(b.minus);
  b.invertible = ip.has_value() && b.minus_inverse.has_value();
  return b;
}

// ------------------------------------------------------ ideals, quotients

Report verify_ideal(const JordanPair& pair, const PairIdeal& ideal) {
  Report rep("ideal check " + pair.name());
  auto& shape = rep.check("shape");
  for (Sign s : {Sign::Plus, Sign::Minus})
    shape.expect(ideal.at(s).ambient_dim() == pair.dim(s) && ideal.at(s).modulus() == pair.modulus(),
                 std::string("submodule of V") + sign_str(s) + " has the wrong ambient");
  if (!shape.passed()) return rep;
  auto& qi = rep.check("Q(I)V");
  auto& qv = rep.check("Q(V)I");
  auto& tr = rep.check("{I V V}");
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    Sign t = opposite(s);
    const Submodule& is = ideal.at(s);
    auto gi = generators(is), gt = generators(ideal.at(t));
    std::size_t ds = pair.dim(s), dt = pair.dim(t);
    for (auto& x : gi)
      for (std::size_t j = 0; j < dt; ++j) {
        Vec r = pair.Q(s, x, vec::unit(dt, j));
        qi.expect(is.contains(r), std::string("Q(") + vec::str(x) + ")e" + std::to_string(j) + " sign " + sign_str(s));
      }
    for (auto& y : gt)
      for (std::size_t a = 0; a < ds; ++a)
        for (std::size_t c = a; c < ds; ++c) {
          Vec ea = vec::unit(ds, a), ec = vec::unit(ds, c);
          Vec r = a == c ? pair.Q(s, ea, y) : pair.triple(s, ea, y, ec);
          qv.expect(is.contains(r), "Q(V)" + vec::str(y) + " sign " + sign_str(s));
        }
    for (auto& x : gi)
      for (std::size_t j = 0; j < dt; ++j)
        for (std::size_t k = 0; k < ds; ++k) {
          Vec r = pair.triple(s, x, vec::unit(dt, j), vec::unit(ds, k));
          tr.expect(is.contains(r), "{" + vec::str(x) + " e" + std::to_string(j) + " e" + std::to_string(k) +
                                        "} sign " + sign_str(s));
        }
  }
  return rep;
}

namespace {

// A finite Z-module section (subgroup or quotient of (Z/n)^d) that is free
// over Z/m for its exponent m.
struct Section {
  Coeff m = 1;
  std::vector<Vec> basis;  // ambient representatives
  std::unordered_map<std::uint64_t, Vec> coords;
};

Section make_section(Coeff n, std::size_t d, const std::vector<Vec>& gens, const std::function<Vec(const Vec&)>& canon,
                     std::size_t cap) {
  Section sec;
  std::unordered_set<std::uint64_t> seen;
  Vec z = canon(vec::zero(d));
  seen.insert(encode(z, n));
  std::deque<Vec> queue{z};
  std::vector<Vec> order_list{z};
  std::vector<Vec> cg;
  for (auto& g : gens) {
    Vec c = canon(g);
    if (c != z) cg.push_back(c);
  }
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    for (auto& g : cg) {
      Vec w = canon(vec::add(v, g, n));
      if (seen.insert(encode(w, n)).second) {
        if (seen.size() > cap) throw BudgetExceeded("section enumeration exceeds cap", cap);
        order_list.push_back(w);
        queue.push_back(std::move(w));
      }
    }
  }
  auto order_of = [&](const Vec& v) {
    Coeff k = 1;
    Vec acc = v;
    while (canon(acc) != z) {
      acc = vec::add(acc, v, n);
      ++k;
    }
    return k;
  };
  Coeff m = 1;
  for (auto& v : order_list) m = std::lcm(m, order_of(v));
  sec.m = m == 1 ? n : m;
  if (seen.size() == 1) {
    sec.coords[encode(z, n)] = {};
    return sec;
  }
  std::vector<Vec> candidates = cg;
  candidates.insert(candidates.end(), order_list.begin(), order_list.end());
  std::unordered_set<std::uint64_t> span{encode(z, n)};
  for (auto& c : candidates) {
    if (span.size() == seen.size()) break;
    if (order_of(c) != m) continue;
    std::unordered_set<std::uint64_t> next;
    for (auto sc : span) {
      Vec sv = decode(sc, n, d);
      Vec acc = sv;
      for (Coeff k = 0; k < m; ++k) {
        next.insert(encode(canon(acc), n));
        acc = vec::add(acc, c, n);
      }
    }
    if (next.size() == span.size() * m) {
      sec.basis.push_back(c);
      span = std::move(next);
    }
  }
  if (span.size() != seen.size()) throw Error("section is not free over Z/" + std::to_string(m));
  std::uint64_t total = seen.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    Vec c = decode(code, m, sec.basis.size());
    Vec v = vec::zero(d);
    for (std::size_t i = 0; i < c.size(); ++i) vec::axpy(c[i], sec.basis[i], v, n);
    sec.coords[encode(canon(v), n)] = c;
  }
  return sec;
}

Vec section_lift(const Section& sec, const Vec& c, Coeff n, std::size_t d) {
  Vec v = vec::zero(d);
  for (std::size_t i = 0; i < c.size(); ++i) vec::axpy(c[i] % sec.m, sec.basis[i], v, n);
  return v;
}

JordanPair build_section_pair(const JordanPair& pair, std::array<Section, 2> secs,
                              std::array<std::function<Vec(const Vec&)>, 2> canon, PairKind kind,
                              const std::string& name) {
  if (secs[0].m != secs[1].m && !secs[0].basis.empty() && !secs[1].basis.empty())
    throw Error("the two sides have different exponents");
  Coeff m = !secs[0].basis.empty() ? secs[0].m : secs[1].m;
  Coeff n = pair.modulus();
  std::array<JordanPair::QFunc, 2> q;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    Sign t = opposite(s);
    std::size_t ds = pair.dim(s), dt = pair.dim(t);
    auto sp = std::make_shared<Section>(secs[idx(s)]);
    auto tp = std::make_shared<Section>(secs[idx(t)]);
    auto cs = canon[idx(s)];
    q[idx(s)] = [&pair, sp, tp, cs, s, n, ds, dt](const Vec& x, const Vec& y) {
      Vec r = pair.Q(s, section_lift(*sp, x, n, ds), section_lift(*tp, y, n, dt));
      auto it = sp->coords.find(encode(cs(r), n));
      if (it == sp->coords.end()) throw Error("product leaves the section");
      return it->second;
    };
  }
  JordanPair out =
      JordanPair::from_closures(name, kind, m, {secs[0].basis.size(), secs[1].basis.size()}, std::move(q));
  // the closures reference the parent; keep only the tensors
  out = JordanPair::from_tensors(name, kind, m, {secs[0].basis.size(), secs[1].basis.size()},
                                 {out.tensors(Sign::Plus), out.tensors(Sign::Minus)});
  out.set_parent(n, {secs[0].basis, secs[1].basis});
  out.set_ring(pair.ring());
  out.set_indices(pair.index_i(), pair.index_j());
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    std::vector<std::optional<Block>> blocks;
    const auto& pb = pair.blocks(s);
    for (auto& b : secs[idx(s)].basis) {
      std::optional<Block> blk;
      bool single = true;
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (!b[k]) continue;
        if (!pb[k] || (blk && *blk != *pb[k])) single = false;
        else blk = pb[k];
      }
      blocks.push_back(single ? blk : std::nullopt);
    }
    out.set_blocks(s, std::move(blocks));
  }
  return out;
}

}  // namespace

JordanPair quotient_pair(const JordanPair& pair, const PairIdeal& ideal, std::size_t cap) {
  auto rep = verify_ideal(pair, ideal);
  if (!rep.passed()) throw Error("not an ideal: " + rep.first_failure());
  std::array<Section, 2> secs;
  std::array<std::function<Vec(const Vec&)>, 2> canon;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    auto sub = std::make_shared<Submodule>(ideal.at(s));
    canon[idx(s)] = [sub](const Vec& v) { return sub->canonical(v); };
    std::vector<Vec> gens;
    for (std::size_t k = 0; k < pair.dim(s); ++k) gens.push_back(vec::unit(pair.dim(s), k));
    secs[idx(s)] = make_section(pair.modulus(), pair.dim(s), gens, canon[idx(s)], cap);
  }
  return build_section_pair(pair, secs, canon, PairKind::Quotient, pair.name() + "/I");
}

JordanPair subpair(const JordanPair& pair, const PairIdeal& sub, std::size_t cap) {
  Report rep("subpair check");
  auto& c = rep.check("closed");
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    Sign t = opposite(s);
    auto gs = generators(sub.at(s)), gt = generators(sub.at(t));
    for (std::size_t a = 0; a < gs.size(); ++a)
      for (auto& y : gt) {
        c.expect(sub.at(s).contains(pair.Q(s, gs[a], y)), "Q(" + vec::str(gs[a]) + ")" + vec::str(y));
        for (std::size_t b = a + 1; b < gs.size(); ++b)
          c.expect(sub.at(s).contains(pair.triple(s, gs[a], y, gs[b])), "{" + vec::str(gs[a]) + " . .}");
      }
  }
  if (!rep.passed()) throw Error("not a subpair: " + rep.first_failure());
  std::array<Section, 2> secs;
  std::array<std::function<Vec(const Vec&)>, 2> canon;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    canon[idx(s)] = [](const Vec& v) { return v; };
    secs[idx(s)] = make_section(pair.modulus(), pair.dim(s), generators(sub.at(s)), canon[idx(s)], cap);
  }
  return build_section_pair(pair, secs, canon, PairKind::Subpair, "sub(" + pair.name() + ")");
}

// ---------------------------------------------------------------- misc

bool is_division_pair(const JordanPair& pair, std::size_t cap) {
  if (pair.dim(Sign::Plus) != pair.dim(Sign::Minus)) return false;
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (auto& x : pair.elements(s, cap)) {
      if (vec::is_zero(x)) continue;
      if (!invert(pair.Q_map(s, x))) return false;
    }
  return true;
}

bool is_automorphism(const JordanPair& pair, const ModMatrix& fp, const ModMatrix& fm, std::string* witness) {
  std::array<const ModMatrix*, 2> f{&fp, &fm};
  auto fail = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const ModMatrix& m = *f[idx(s)];
    if (m.rows() != pair.dim(s) || m.cols() != pair.dim(s)) return fail("wrong shape");
    if (!invert(m)) return fail(std::string("not invertible on V") + sign_str(s));
  }
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    Sign t = opposite(s);
    const ModMatrix &fs = *f[idx(s)], &ft = *f[idx(t)];
    std::size_t ds = pair.dim(s), dt = pair.dim(t);
    for (std::size_t k = 0; k < ds; ++k)
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j < dt; ++j) {
          Vec ei = vec::unit(ds, i), ek = vec::unit(ds, k), ej = vec::unit(dt, j);
          Vec lhs = i == k ? fs.apply(pair.Q(s, ei, ej)) : fs.apply(pair.triple(s, ei, ej, ek));
          Vec rhs = i == k ? pair.Q(s, fs.apply(ei), ft.apply(ej))
                           : pair.triple(s, fs.apply(ei), ft.apply(ej), fs.apply(ek));
          if (lhs != rhs)
            return fail(std::string("sign ") + sign_str(s) + " basis " + std::to_string(i) + "," + std::to_string(k) +
                        "," + std::to_string(j));
        }
  }
  return true;
}

}  // namespace jpst
