#include "jpst/grading.hpp"

#include <algorithm>

namespace jpst {

RootGrading::RootGrading(JordanPair pair, ThreeGrading grading, std::array<std::vector<Submodule>, 2> spaces)
    : pair_(std::move(pair)), grading_(std::move(grading)), spaces_(std::move(spaces)) {
  for (auto& sp : spaces_)
    if (sp.size() != grading_.r1().size()) throw Error("one root space per root of R1 expected");
}

std::optional<std::size_t> RootGrading::root_index(const Root& a) const {
  auto& r = grading_.r1();
  auto it = std::lower_bound(r.begin(), r.end(), a);
  if (it == r.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - r.begin());
}

const Submodule& RootGrading::space(Sign s, const Root& a) const {
  auto k = root_index(a);
  if (!k) throw Error(a.str() + " is not in R1");
  return space(s, *k);
}

std::optional<std::size_t> RootGrading::root_of(Sign s, const Vec& x) const {
  if (vec::is_zero(x)) return std::nullopt;
  for (std::size_t k = 0; k < roots().size(); ++k)
    if (space(s, k).contains(x)) return k;
  return std::nullopt;
}

std::string RootGrading::name() const { return grading_.name() + " on " + pair_.name(); }

namespace {

Vec unit(std::size_t d, std::size_t i) {
  Vec v(d, 0);
  v[i] = 1;
  return v;
}

std::string show(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<int> merged_labels(const IndexSet& a, const IndexSet& b) {
  std::vector<int> l = a.labels();
  for (int x : b.labels()) l.push_back(x);
  std::sort(l.begin(), l.end());
  return l;
}

// Root of a block under the matrix gradings.
Root block_root(GradingKind kind, const Block& b) {
  switch (kind) {
    case GradingKind::AI: return Root::eps(b.first) - Root::eps(b.second);
    default: return Root::eps(b.first) + Root::eps(b.second);
  }
}

std::array<std::vector<Submodule>, 2> spaces_from_blocks(const JordanPair& pair, const ThreeGrading& g,
                                                         GradingKind kind) {
  std::array<std::vector<Submodule>, 2> spaces;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    std::size_t d = pair.dim(s);
    auto& blocks = pair.blocks(s);
    if (blocks.size() != d) throw Error(pair.name() + " carries no block layout");
    std::vector<std::vector<Vec>> gens(g.r1().size());
    for (std::size_t i = 0; i < d; ++i) {
      if (!blocks[i]) throw Error(pair.name() + ": coordinate " + std::to_string(i) + " spans several blocks");
      Block b = *blocks[i];
      if (s == Sign::Minus && kind == GradingKind::AI) std::swap(b.first, b.second);
      Root a = block_root(kind, b);
      auto it = std::lower_bound(g.r1().begin(), g.r1().end(), a);
      if (it == g.r1().end() || *it != a) throw Error("block root " + a.str() + " is not in R1");
      gens[it - g.r1().begin()].push_back(unit(d, i));
    }
    for (auto& gs : gens) spaces[idx(s)].emplace_back(pair.modulus(), d, gs);
  }
  return spaces;
}

// Vector with the ring unit placed on the coordinates of one block.
Vec block_one(const JordanPair& pair, Sign s, const Block& b, const Vec& one) {
  Vec v(pair.dim(s), 0);
  std::size_t t = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (pair.blocks(s)[i] == b && t < one.size()) v[i] = one[t++];
  return v;
}

std::map<Root, Idempotent> standard_family(const JordanPair& pair, const ThreeGrading& g) {
  std::map<Root, Idempotent> fam;
  Coeff n = pair.modulus();
  switch (pair.kind()) {
    case PairKind::Full:
    case PairKind::Rect: {
      Vec one = pair.ring()->one();
      for (const Root& a : g.r1()) {
        Block b{a.terms()[0].second > 0 ? a.terms()[0].first : a.terms()[1].first,
                a.terms()[0].second > 0 ? a.terms()[1].first : a.terms()[0].first};
        fam[a] = {block_one(pair, Sign::Plus, b, one), block_one(pair, Sign::Minus, {b.second, b.first}, one)};
      }
      break;
    }
    case PairKind::Hermitian: {
      // off-diagonal slots are A-coordinates; diagonal ones are found by search
      Vec one = pair.ring()->one();
      for (const Root& a : g.r1()) {
        if (a.terms().size() != 2) continue;
        Block b{a.terms()[0].first, a.terms()[1].first};
        Vec e = block_one(pair, Sign::Plus, b, one);
        fam[a] = {e, e};
      }
      break;
    }
    case PairKind::Alternating: {
      Vec one = pair.ring()->one();
      for (const Root& a : g.r1()) {
        Block b{a.terms()[0].first, a.terms()[1].first};
        Vec e = block_one(pair, Sign::Plus, b, one);
        fam[a] = {e, vec::neg(e, n)};
      }
      break;
    }
    case PairKind::Quadform: {
      auto [hp, hm] = *pair.hyperbolic();
      std::size_t d = pair.dim(Sign::Plus);
      int d0 = g.distinguished();
      for (const Root& a : g.r1()) {
        if (a.terms().size() != 2) continue;
        int other = a.terms()[0].first == d0 ? a.terms()[1].second : a.terms()[0].second;
        if (other > 0)
          fam[a] = {unit(d, hp), unit(d, hm)};
        else
          fam[a] = {unit(d, hm), unit(d, hp)};
      }
      break;
    }
    default: break;
  }
  return fam;
}

// Searches a root space for a nonzero idempotent.
std::optional<Idempotent> find_idempotent(const RootGrading& g, std::size_t k, std::size_t max_space) {
  const JordanPair& p = g.pair();
  const Submodule& sp = g.space(Sign::Plus, k);
  const Submodule& sm = g.space(Sign::Minus, k);
  if (sp.size() > max_space || sm.size() > max_space)
    throw BudgetExceeded("root space " + g.roots()[k].str() + " exceeds the idempotent search cap", max_space);
  auto pe = sp.elements();
  auto me = sm.elements();
  std::sort(pe.begin(), pe.end());
  std::sort(me.begin(), me.end());
  for (auto& ep : pe) {
    if (vec::is_zero(ep)) continue;
    ModMatrix qe = p.Q_map(Sign::Plus, ep);
    for (auto& em : me)
      if (qe.apply(em) == ep && p.Q(Sign::Minus, em, ep) == em) return Idempotent{ep, em};
  }
  return std::nullopt;
}

bool family_fits(const RootGrading& g, const Root& a, const Idempotent& e) {
  auto k = g.root_index(a);
  return k && g.space(Sign::Plus, *k).contains(e.first) && g.space(Sign::Minus, *k).contains(e.second) &&
         !vec::is_zero(e.first) && is_idempotent(g.pair(), e.first, e.second);
}

// Configurations allowed for a nonzero Q(V_a)Q(V_b)V_c.
bool rgjp5_allowed(const ThreeGrading& g, const Root& a, const Root& b, const Root& c, bool as_printed) {
  if (a == b) return true;
  RootRelation ab = classify_pair(g, a, b);
  RootRelation bc = classify_pair(g, b, c);
  if (ab == RootRelation::ArrowIn && b == c) return true;
  if (bc == RootRelation::ArrowIn) {
    if (ab == RootRelation::Edge && classify_pair(g, c, a) == RootRelation::Orthogonal) return true;
    if (!as_printed && a == b.scaled(2) - c) return true;
  }
  return false;
}

}  // namespace

RootGrading make_grading(const JordanPair& pair, GradingKind kind) {
  std::optional<RootGrading> out;
  switch (kind) {
    case GradingKind::AI: {
      if (pair.index_i().size() == 0 || pair.index_j().size() == 0)
        throw Error("A^I grading needs a rectangular pair, got " + pair_kind_name(pair.kind()));
      auto sys = make_root_system(RootFamily::A, IndexSet(merged_labels(pair.index_i(), pair.index_j())));
      auto g = make_three_grading(sys, kind, {pair.index_i()});
      out.emplace(pair, g, spaces_from_blocks(pair, g, kind));
      break;
    }
    case GradingKind::Cher:
    case GradingKind::Dalt: {
      PairKind want = kind == GradingKind::Cher ? PairKind::Hermitian : PairKind::Alternating;
      if (pair.kind() != want)
        throw Error(grading_kind_name(kind) + " grading needs a " + pair_kind_name(want) + " pair, got " +
                    pair_kind_name(pair.kind()));
      auto sys = make_root_system(kind == GradingKind::Cher ? RootFamily::C : RootFamily::D, pair.index_i());
      auto g = make_three_grading(sys, kind);
      out.emplace(pair, g, spaces_from_blocks(pair, g, kind));
      break;
    }
    case GradingKind::Bqf: {
      if (pair.kind() != PairKind::Quadform)
        throw Error("B^qf grading needs a quadratic form pair, got " + pair_kind_name(pair.kind()));
      if (!pair.hyperbolic()) throw Error("B^qf grading needs a marked hyperbolic pair");
      auto [hp, hm] = *pair.hyperbolic();
      Coeff n = pair.modulus();
      std::size_t d = pair.dim(Sign::Plus);
      auto sys = make_root_system(RootFamily::B, IndexSet({0, 1}));
      auto g = make_three_grading(sys, kind, {IndexSet(), 0});
      // orthogonal complement of the hyperbolic plane
      ModMatrix bm(2, d, n);
      for (std::size_t j = 0; j < d; ++j) {
        bm.at(0, j) = pair.form_b().at(hp, j);
        bm.at(1, j) = pair.form_b().at(hm, j);
      }
      Submodule perp = kernel_module(bm);
      Submodule lp(n, d, {unit(d, hp)}), lm(n, d, {unit(d, hm)});
      Root e0 = Root::eps(0), plus = Root::eps(0) + Root::eps(1), minus = Root::eps(0) - Root::eps(1);
      std::array<std::vector<Submodule>, 2> spaces;
      for (Sign s : {Sign::Plus, Sign::Minus})
        for (const Root& a : g.r1()) {
          if (a == e0)
            spaces[idx(s)].push_back(perp);
          else if ((a == plus) == (s == Sign::Plus))
            spaces[idx(s)].push_back(lp);
          else
            spaces[idx(s)].push_back(lm);
        }
      out.emplace(pair, g, spaces);
      break;
    }
    case GradingKind::Dqf: throw Error("no pair kind is paired with the D^qf grading");
  }
  RootGrading& g = *out;
  std::map<Root, Idempotent> fam;
  for (auto& [a, e] : standard_family(pair, g.grading()))
    if (family_fits(g, a, e)) fam[a] = e;
  bool searchable = true;
  for (std::size_t k = 0; k < g.roots().size(); ++k) {
    const Root& a = g.roots()[k];
    if (fam.count(a)) continue;
    if (g.space(Sign::Plus, k).size() > 4096 || g.space(Sign::Minus, k).size() > 4096) {
      searchable = false;
      continue;
    }
    if (auto e = find_idempotent(g, k, 4096)) fam[a] = *e;
  }
  g.set_family(fam);
  if (fam.size() < g.roots().size()) {
    if (searchable) g.set_fully_idempotent(false);
  } else {
    try {
      grading_from_cog(pair, g.grading(), fam, &g);
      g.set_fully_idempotent(true);
    } catch (const Error&) {
    }
  }
  return g;
}

RootGrading grading_from_cog(const JordanPair& pair, const ThreeGrading& grading,
                             const std::map<Root, Idempotent>& family, const RootGrading* reference) {
  if (family.empty()) throw Error("empty idempotent family");
  std::vector<std::pair<Root, PeirceDecomp>> pd;
  for (auto& [a, e] : family) {
    if (!grading.in_r1(a)) throw Error(a.str() + " is not in R1");
    if (vec::is_zero(e.first) || !is_idempotent(pair, e.first, e.second))
      throw Error("family member at " + a.str() + " is not a nonzero idempotent");
    pd.emplace_back(a, peirce(pair, e.first, e.second));
  }
  std::array<std::vector<Submodule>, 2> spaces;
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (const Root& b : grading.r1()) {
      Submodule v = Submodule::whole(pair.modulus(), pair.dim(s));
      for (auto& [a, p] : pd) {
        int k = pairing(b, a);
        if (k < 0 || k > 2) throw Error("pairing <" + b.str() + ", " + a.str() + "^vee> outside {0,1,2}");
        v = v.intersect(p.spaces[idx(s)][k]);
      }
      if (v.size() == 1) throw Error("root space " + b.str() + " is zero");
      spaces[idx(s)].push_back(v);
    }
  RootGrading g(pair, grading, spaces);
  g.set_family(family);
  Report rep = verify_grading_suite(g);
  if (!rep.passed()) throw Error("idempotent family does not give a root grading: " + rep.first_failure());
  if (reference) {
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (std::size_t k = 0; k < g.roots().size(); ++k)
        if (!(g.space(s, k) == reference->space(s, g.roots()[k])))
          throw Error("root space " + g.roots()[k].str() + " differs from the reference grading");
  }
  return g;
}

Report verify_grading_suite(const RootGrading& g) {
  Report rep("grading " + g.name());
  const JordanPair& p = g.pair();
  const ThreeGrading& tg = g.grading();
  const auto& roots = g.roots();
  Coeff n = p.modulus();

  auto& ds = rep.check("direct sum");
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    std::size_t d = p.dim(s);
    std::vector<Vec> all;
    std::uint64_t prod = 1;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      auto& sp = g.space(s, k);
      for (auto& b : sp.basis()) all.push_back(b);
      prod *= sp.size();
    }
    Submodule total(n, d, all);
    bool ok = total == Submodule::whole(n, d) && prod == total.size();
    ds.expect(ok, std::string(sign_str(s)) + ": root spaces are not a direct sum of V");
  }

  auto& q1 = rep.check("RG1 Q");
  auto& t1 = rep.check("RG1 triple");
  auto& rg2 = rep.check("RG2");
  auto& r4 = rep.check("rgjp4");
  auto& r5 = rep.check("rgjp5");
  std::uint64_t printed4 = 0, printed5 = 0;

  auto in_target = [&](Sign s, const Root& t, const Vec& x) {
    if (vec::is_zero(x)) return true;
    auto k = g.root_index(t);
    return k && g.space(s, *k).contains(x);
  };

  for (Sign s : {Sign::Plus, Sign::Minus}) {
    Sign o = opposite(s);
    for (std::size_t ia = 0; ia < roots.size(); ++ia)
      for (std::size_t ib = 0; ib < roots.size(); ++ib) {
        const Root &a = roots[ia], &b = roots[ib];
        RootRelation rel = classify_pair(tg, a, b);
        for (auto& u : g.space(s, ia).basis())
          for (auto& v : g.space(o, ib).basis()) {
            std::string uv = std::string(sign_str(s)) + " u=" + show(u) + " in " + a.str() + ", v=" + show(v) +
                             " in " + b.str();
            Vec q = p.Q(s, u, v);
            q1.expect(in_target(s, a.scaled(2) - b, q), uv + ": Q(u)v=" + show(q) + " outside " +
                                                             (a.scaled(2) - b).str());
            bool nz = !vec::is_zero(q);
            r4.expect(!nz || a == b || rel == RootRelation::ArrowIn, uv + ": Q(u)v != 0 for " + relation_name(rel));
            if (nz && a != b && rel != RootRelation::ArrowOut) ++printed4;
            if (rel == RootRelation::Orthogonal) rg2.expect(!nz, uv + ": Q(u)v != 0 with orthogonal roots");
            for (std::size_t ic = 0; ic < roots.size(); ++ic) {
              const Root& c = roots[ic];
              for (auto& z : g.space(s, ic).basis()) {
                Vec t = p.triple(s, u, v, z);
                std::string w = uv + ", z=" + show(z) + " in " + c.str();
                t1.expect(in_target(s, a - b + c, t), w + ": {u v z}=" + show(t) + " outside " + (a - b + c).str());
                if (rel == RootRelation::Orthogonal) rg2.expect(vec::is_zero(t), w + ": {u v z} != 0");
                Vec qq = p.Q(s, u, p.Q(o, v, z));
                if (!vec::is_zero(qq)) {
                  r5.expect(rgjp5_allowed(tg, a, b, c, false), w + ": Q(u)Q(v)z != 0");
                  if (!rgjp5_allowed(tg, a, b, c, true)) ++printed5;
                } else {
                  r5.pass();
                }
              }
            }
          }
      }
  }
  rep.data()["rgjp4 printed direction violations"] = printed4;
  rep.data()["rgjp5 printed list violations"] = printed5;

  if (!g.family().empty()) {
    auto& fc = rep.check("idempotents");
    for (auto& [a, e] : g.family())
      fc.expect(family_fits(g, a, e), "e at " + a.str() + " is not a nonzero idempotent of its root space");
  }
  rep.data()["grading"] = g.name();
  return rep;
}

FullIdempotence is_fully_idempotent(const RootGrading& g, std::size_t max_space) {
  FullIdempotence out;
  for (std::size_t k = 0; k < g.roots().size(); ++k) {
    const Root& a = g.roots()[k];
    auto it = g.family().find(a);
    if (it != g.family().end() && family_fits(g, a, it->second)) {
      out.family[a] = it->second;
      continue;
    }
    auto e = find_idempotent(g, k, max_space);
    if (!e) {
      out.reason = "no nonzero idempotent in V_" + a.str();
      return out;
    }
    out.family[a] = *e;
  }
  try {
    grading_from_cog(g.pair(), g.grading(), out.family, &g);
  } catch (const Error& ex) {
    out.reason = ex.what();
    return out;
  }
  out.holds = true;
  return out;
}

}  // namespace jpst
