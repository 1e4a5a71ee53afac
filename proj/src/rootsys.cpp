#include "jpst/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "jpst/common.hpp"

namespace jpst {

Root Root::eps(int label, int coeff) {
  Root r;
  if (coeff != 0) r.terms_.push_back({label, coeff});
  return r;
}

int Root::coeff(int label) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(label, INT32_MIN));
  return it != terms_.end() && it->first == label ? it->second : 0;
}

int Root::coeff_sum() const {
  int s = 0;
  for (auto& [l, c] : terms_) s += c;
  return s;
}

Root Root::operator+(const Root& o) const {
  std::map<int, int> m(terms_.begin(), terms_.end());
  for (auto& [l, c] : o.terms_) m[l] += c;
  Root r;
  for (auto& [l, c] : m)
    if (c != 0) r.terms_.push_back({l, c});
  return r;
}

Root Root::operator-(const Root& o) const { return *this + o.scaled(-1); }

Root Root::scaled(int k) const {
  Root r;
  if (k == 0) return r;
  for (auto& [l, c] : terms_) r.terms_.push_back({l, c * k});
  return r;
}

std::string Root::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [l, c] : terms_) {
    if (c < 0)
      os << (first ? "-" : " - ");
    else if (!first)
      os << " + ";
    int a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << "e" << l;
    first = false;
  }
  return os.str();
}

int inner(const Root& a, const Root& b) {
  int s = 0;
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() && j != b.terms().end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else {
      s += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return s;
}

int pairing(const Root& a, const Root& b) {
  if (b.is_zero()) throw Error("pairing with the zero root");
  int num = 2 * inner(a, b), den = inner(b, b);
  if (num % den != 0) throw Error("non-integral pairing <" + a.str() + ", (" + b.str() + ")^vee>");
  return num / den;
}

Root reflect(const Root& a, const Root& x) {
  if (a.is_zero()) throw Error("reflection in the zero root");
  return x - a.scaled(pairing(x, a));
}

std::string family_name(RootFamily f) {
  switch (f) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::C: return "C";
    case RootFamily::D: return "D";
    case RootFamily::BC: return "BC";
  }
  return "?";
}

RootSystemSpec::RootSystemSpec(RootFamily family, IndexSet labels) : family_(family), labels_(std::move(labels)) {
  if (labels_.size() < 2) throw Error("root system needs at least two labels");
  std::set<Root> rs;
  rs.insert(Root());
  const auto& l = labels_.labels();
  bool short_roots = family_ == RootFamily::B || family_ == RootFamily::BC;
  bool long_roots = family_ == RootFamily::C || family_ == RootFamily::BC;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (short_roots) {
      rs.insert(Root::eps(l[i]));
      rs.insert(Root::eps(l[i], -1));
    }
    if (long_roots) {
      rs.insert(Root::eps(l[i], 2));
      rs.insert(Root::eps(l[i], -2));
    }
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (i == j) continue;
      rs.insert(Root::eps(l[i]) - Root::eps(l[j]));
      if (family_ != RootFamily::A) {
        rs.insert(Root::eps(l[i]) + Root::eps(l[j]));
        rs.insert(-(Root::eps(l[i]) + Root::eps(l[j])));
      }
    }
  }
  roots_.assign(rs.begin(), rs.end());
}

bool RootSystemSpec::contains(const Root& r) const { return std::binary_search(roots_.begin(), roots_.end(), r); }

std::size_t RootSystemSpec::rank() const { return family_ == RootFamily::A ? labels_.size() - 1 : labels_.size(); }

std::string RootSystemSpec::name() const { return family_name(family_) + std::to_string(labels_.size()); }

RootSystemSpec make_root_system(RootFamily family, const IndexSet& labels) { return RootSystemSpec(family, labels); }

std::vector<std::vector<Root>> components(const RootSystemSpec& r) {
  std::vector<Root> nz;
  for (auto& a : r.roots())
    if (!a.is_zero()) nz.push_back(a);
  std::vector<int> comp(nz.size(), -1);
  std::vector<std::vector<Root>> out;
  for (std::size_t s = 0; s < nz.size(); ++s) {
    if (comp[s] >= 0) continue;
    int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      out[c].push_back(nz[i]);
      for (std::size_t j = 0; j < nz.size(); ++j)
        if (comp[j] < 0 && inner(nz[i], nz[j]) != 0) {
          comp[j] = c;
          stack.push_back(j);
        }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

std::string grading_kind_name(GradingKind k) {
  switch (k) {
    case GradingKind::AI: return "A^I";
    case GradingKind::Bqf: return "B^qf";
    case GradingKind::Cher: return "C^her";
    case GradingKind::Dqf: return "D^qf";
    case GradingKind::Dalt: return "D^alt";
  }
  return "?";
}

ThreeGrading::ThreeGrading(RootSystemSpec system, GradingKind kind, IndexSet part_labels, int distinguished)
    : system_(std::move(system)), kind_(kind), part_(std::move(part_labels)), dist_(distinguished) {
  for (auto& r : system_.roots()) {
    int p = part(r);
    if (p == 1)
      r1_.push_back(r);
    else if (p == 0)
      r0_.push_back(r);
    else if (p == -1)
      rm1_.push_back(r);
    else
      throw Error("root " + r.str() + " has degree " + std::to_string(p));
  }
}

int ThreeGrading::part(const Root& r) const {
  switch (kind_) {
    case GradingKind::AI: {
      int s = 0;
      for (auto& [l, c] : r.terms())
        if (part_.contains(l)) s += c;
      return s;
    }
    case GradingKind::Bqf:
    case GradingKind::Dqf:
      return r.coeff(dist_);
    case GradingKind::Cher:
    case GradingKind::Dalt: {
      int s = r.coeff_sum();
      if (s % 2 != 0) throw Error("odd coefficient sum for " + r.str());
      return s / 2;
    }
  }
  return 0;
}

std::string ThreeGrading::name() const {
  std::string s = grading_kind_name(kind_) + "(" + system_.name();
  if (kind_ == GradingKind::AI) {
    s += ", I={";
    for (std::size_t i = 0; i < part_.size(); ++i) s += (i ? "," : "") + std::to_string(part_[i]);
    s += "}";
  } else if (kind_ == GradingKind::Bqf || kind_ == GradingKind::Dqf) {
    s += ", " + std::to_string(dist_);
  }
  return s + ")";
}

ThreeGrading make_three_grading(const RootSystemSpec& system, GradingKind kind, const GradingParams& params) {
  auto fam = system.family();
  auto need = [&](RootFamily f) {
    if (fam != f)
      throw Error("grading " + grading_kind_name(kind) + " needs family " + family_name(f) + ", got " +
                  family_name(fam));
  };
  switch (kind) {
    case GradingKind::AI: {
      need(RootFamily::A);
      if (params.part.size() == 0 || params.part.size() >= system.labels().size())
        throw Error("A^I needs a nonempty proper subset");
      for (int l : params.part.labels())
        if (!system.labels().contains(l)) throw Error("label " + std::to_string(l) + " not in the index set");
      return ThreeGrading(system, kind, params.part, 0);
    }
    case GradingKind::Bqf:
    case GradingKind::Dqf:
      need(kind == GradingKind::Bqf ? RootFamily::B : RootFamily::D);
      if (!system.labels().contains(params.distinguished))
        throw Error("distinguished label " + std::to_string(params.distinguished) + " not in the index set");
      return ThreeGrading(system, kind, IndexSet(), params.distinguished);
    case GradingKind::Cher:
      need(RootFamily::C);
      return ThreeGrading(system, kind, IndexSet(), 0);
    case GradingKind::Dalt:
      need(RootFamily::D);
      return ThreeGrading(system, kind, IndexSet(), 0);
  }
  throw Error("unknown grading kind");
}

std::string relation_name(RootRelation r) {
  switch (r) {
    case RootRelation::Equal: return "equal";
    case RootRelation::Orthogonal: return "orthogonal";
    case RootRelation::Edge: return "edge";
    case RootRelation::ArrowOut: return "arrow-out";
    case RootRelation::ArrowIn: return "arrow-in";
  }
  return "?";
}

RootRelation classify_pair(const ThreeGrading& g, const Root& a, const Root& b) {
  if (!g.in_r1(a)) throw Error(a.str() + " is not in R1");
  if (!g.in_r1(b)) throw Error(b.str() + " is not in R1");
  if (a == b) return RootRelation::Equal;
  int ab = pairing(a, b), ba = pairing(b, a);
  if (ab == 0 && ba == 0) return RootRelation::Orthogonal;
  if (ab == 1 && ba == 1) return RootRelation::Edge;
  if (ab == 2 && ba == 1) return RootRelation::ArrowOut;
  if (ab == 1 && ba == 2) return RootRelation::ArrowIn;
  throw Error("no relation between " + a.str() + " and " + b.str());
}

std::pair<Root, Root> decompose_R0(const ThreeGrading& g, const Root& mu) {
  if (mu.is_zero()) throw Error("cannot decompose the zero root");
  if (!g.system().contains(mu) || g.part(mu) != 0) throw Error(mu.str() + " is not in R0");
  std::set<int> own;
  for (auto& [l, c] : mu.terms()) own.insert(l);
  std::optional<std::pair<std::vector<int>, std::pair<Root, Root>>> best;
  for (auto& a : g.r1()) {
    Root b = a - mu;
    if (!g.in_r1(b) || classify_pair(g, a, b) != RootRelation::Edge) continue;
    std::set<int> extra;
    for (auto& [l, c] : a.terms())
      if (!own.count(l)) extra.insert(l);
    for (auto& [l, c] : b.terms())
      if (!own.count(l)) extra.insert(l);
    std::vector<int> key(extra.begin(), extra.end());
    if (!best || key < best->first) best = {key, {a, b}};
  }
  if (!best) throw Error("no edge decomposition of " + mu.str() + " in " + g.name());
  return best->second;
}

Report verify_root_suite(const RootSystemSpec& sys) {
  Report rep("root system axioms " + sys.name());
  auto& zero = rep.check("zero");
  zero.expect(sys.contains(Root()), "0 not in R");
  auto& sym = rep.check("symmetric");
  auto& refl = rep.check("reflections");
  auto& integ = rep.check("integral");
  auto& span = rep.check("span");
  std::set<int> support;
  for (auto& a : sys.roots()) {
    for (auto& [l, c] : a.terms()) support.insert(l);
    sym.expect(sys.contains(-a), "-(" + a.str() + ") missing");
    if (a.is_zero()) continue;
    refl.expect(pairing(a, a) == 2, "<a, a^vee> != 2 for " + a.str());
    for (auto& b : sys.roots()) {
      if (b.is_zero()) continue;
      int num = 2 * inner(b, a), den = inner(a, a);
      integ.expect(num % den == 0, "<" + b.str() + ", (" + a.str() + ")^vee>");
      if (num % den == 0) refl.expect(sys.contains(reflect(a, b)), "s_" + a.str() + "(" + b.str() + ") not in R");
    }
  }
  span.expect(support.size() == sys.labels().size(), "roots miss a label");
  rep.data()["roots"] = sys.roots().size();
  rep.data()["components"] = components(sys).size();
  return rep;
}

Report verify_root_suite(const ThreeGrading& g, RootSuite suite) {
  if (suite == RootSuite::Axioms) return verify_root_suite(g.system());
  const auto& sys = g.system();
  Report rep((suite == RootSuite::Grading ? "3-grading axioms " : "3gra2 ") + g.name());
  if (suite == RootSuite::Grading) {
    auto& neg = rep.check("opposite");
    for (auto& a : g.r1()) neg.expect(g.part(-a) == -1, "-(" + a.str() + ") not in R-1");
    for (auto& a : g.rm1()) neg.expect(g.part(-a) == 1, "-(" + a.str() + ") not in R1");
    auto& add = rep.check("additive");
    for (auto& a : sys.roots())
      for (auto& b : sys.roots()) {
        Root c = a + b;
        if (!sys.contains(c)) continue;
        int d = g.part(a) + g.part(b);
        add.expect(g.part(c) == d, a.str() + " + " + b.str());
      }
    auto& diff = rep.check("differences");
    for (auto& mu : g.r0()) {
      bool found = mu.is_zero() && !g.r1().empty();
      for (std::size_t i = 0; i < g.r1().size() && !found; ++i) found = g.in_r1(g.r1()[i] - mu);
      diff.expect(found, mu.str() + " is no difference of R1 roots");
    }
    auto& rel = rep.check("relations");
    for (auto& a : g.r1())
      for (auto& b : g.r1()) {
        try {
          auto r = classify_pair(g, a, b);
          auto s = classify_pair(g, b, a);
          bool ok = (r == s && r != RootRelation::ArrowOut && r != RootRelation::ArrowIn) ||
                    (r == RootRelation::ArrowOut && s == RootRelation::ArrowIn) ||
                    (r == RootRelation::ArrowIn && s == RootRelation::ArrowOut);
          rel.expect(ok, a.str() + " vs " + b.str());
        } catch (const Error& e) {
          rel.fail(e.what());
        }
      }
  } else {
    auto& c = rep.check("3gra2");
    for (auto& a : g.r1())
      for (auto& b : g.r1()) {
        Root d = a.scaled(2) - b;
        bool in_r = sys.contains(d), in_r1 = g.in_r1(d);
        auto r = classify_pair(g, a, b);
        bool rel = r == RootRelation::Equal || r == RootRelation::ArrowIn;
        c.expect(in_r == in_r1 && in_r1 == rel, "2(" + a.str() + ") - (" + b.str() + ")");
      }
  }
  return rep;
}

}  // namespace jpst
