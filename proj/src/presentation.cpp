#include "jpst/presentation.hpp"

#include <algorithm>

namespace jpst {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = inverse_letter(l);
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == inverse_letter(r[b - 1])) {
    ++a;
    --b;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(a), r.begin() + static_cast<std::ptrdiff_t>(b));
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word comm(const Word& a, const Word& b) { return a * b * inverse(a) * inverse(b); }

std::string kind_name(PresentationKind k) {
  switch (k) {
    case PresentationKind::Linear: return "linear";
    case PresentationKind::RectEJ: return "rect-EJ";
    case PresentationKind::JordanSt: return "jordan-St";
    case PresentationKind::StJ: return "stJ";
  }
  return "?";
}

namespace {

constexpr int kLinearKey = 2;

std::vector<Vec> ring_elements(const RingSpec& a) {
  std::vector<Vec> out;
  for (std::uint64_t c = 0; c < a.cardinality(); ++c) out.push_back(a.coords(static_cast<RingSpec::Code>(c)));
  return out;
}

void check_budget(std::size_t n, std::size_t cap, const std::string& what) {
  if (n > cap) throw BudgetExceeded(what + " needs " + std::to_string(n) + " relator instances", n);
}

}  // namespace

Word Presentation::x(Sign s, const Vec& u) const {
  if (vec::is_zero(u)) return {};
  auto it = lookup_.find({idx(s), u});
  if (it == lookup_.end()) throw Error("no generator x" + std::string(sign_str(s)) + vec::str(u));
  return {2 * it->second};
}

Word Presentation::x(int i, int j, const Vec& a) const {
  if (vec::is_zero(a)) return {};
  auto it = lookup_.find({kLinearKey + i * static_cast<int>(n_ + 1) + j, a});
  if (it == lookup_.end()) throw Error("no generator x" + std::to_string(i) + std::to_string(j) + vec::str(a));
  return {2 * it->second};
}

std::string Presentation::word_str(const Word& w) const {
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += " ";
    s += gens_[static_cast<std::size_t>(l / 2)].name;
    if (l & 1) s += "^-1";
  }
  return s.empty() ? "1" : s;
}

Presentation Presentation::filtered(const std::vector<std::string>& drop) const {
  Presentation p = *this;
  p.relators_.clear();
  p.schema_.clear();
  for (std::size_t k = 0; k < relators_.size(); ++k) {
    if (std::find(drop.begin(), drop.end(), schema_[k]) != drop.end()) continue;
    p.relators_.push_back(relators_[k]);
    p.schema_.push_back(schema_[k]);
  }
  for (auto& d : drop) p.instances_.erase(d);
  return p;
}

Presentation Presentation::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != relators_.size()) throw Error("permutation has the wrong length");
  Presentation p = *this;
  for (std::size_t k = 0; k < order.size(); ++k) {
    p.relators_[k] = relators_[order[k]];
    p.schema_[k] = schema_[order[k]];
  }
  return p;
}

void Presentation::add_pair_generators(const JordanPair& pair, std::size_t cap) {
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    int k = 0;
    for (auto& u : pair.elements(s, cap)) {
      if (vec::is_zero(u)) continue;
      lookup_[{idx(s), u}] = static_cast<int>(gens_.size());
      gens_.push_back({std::string(s == Sign::Plus ? "xp_" : "xm_") + std::to_string(k++), s, u, 0, 0});
    }
  }
}

void Presentation::add(const std::string& schema, const Word& w) {
  ++instances_[schema];
  Word r = cyclic_reduce(w);
  if (r.empty() || seen_.count(r)) return;
  seen_[r] = relators_.size();
  relators_.push_back(std::move(r));
  schema_.push_back(schema);
}

Presentation linear_presentation(const RingSpec::Ptr& ring, std::size_t n, std::size_t max_instances) {
  if (n < 3) throw Error("St_n needs n >= 3");
  Presentation p;
  p.kind_ = PresentationKind::Linear;
  p.name_ = "linear(" + ring->name() + "," + std::to_string(n) + ")";
  p.ring_ = ring;
  p.n_ = n;
  const RingSpec& a = *ring;
  auto elems = ring_elements(a);
  std::size_t m = elems.size();
  check_budget(n * n * n * n * m * m, max_instances, p.name_);
  int N = static_cast<int>(n);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      int k = 0;
      for (auto& x : elems) {
        if (vec::is_zero(x)) continue;
        p.lookup_[{kLinearKey + i * (N + 1) + j, x}] = static_cast<int>(p.gens_.size());
        p.gens_.push_back({"x" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(k++), Sign::Plus, x, i, j});
      }
    }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      for (auto& x : elems)
        for (auto& y : elems) p.add("E1", p.x(i, j, x) * p.x(i, j, y) * inverse(p.x(i, j, a.add(x, y))));
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          if (k == l) continue;
          if (j != k && i != l)
            for (auto& x : elems)
              for (auto& y : elems) p.add("E2", comm(p.x(i, j, x), p.x(k, l, y)));
          if (k == j && l != i)
            for (auto& x : elems)
              for (auto& y : elems)
                p.add("E3", comm(p.x(i, j, x), p.x(j, l, y)) * inverse(p.x(i, l, a.mul(x, y))));
        }
    }
  return p;
}

Presentation rect_ej_presentation(const RingSpec::Ptr& ring, std::size_t pi, std::size_t qj,
                                  std::size_t max_instances) {
  JordanPair pair = rect_pair(ring, pi, qj);
  RootGrading g = make_grading(pair, GradingKind::AI);
  Presentation p;
  p.kind_ = PresentationKind::RectEJ;
  p.name_ = "rect-EJ(" + ring->name() + "," + std::to_string(pi) + "," + std::to_string(qj) + ")";
  p.ring_ = ring;
  p.n_ = pi + qj;
  std::array<std::vector<Vec>, 2> all{pair.elements(Sign::Plus), pair.elements(Sign::Minus)};
  std::size_t roots = g.roots().size();
  check_budget(2 * all[0].size() * all[0].size() * (1 + roots), max_instances, p.name_);
  p.add_pair_generators(pair, max_instances);
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (auto& u : all[idx(s)])
      for (auto& w : all[idx(s)]) p.add("EJ1", p.x(s, u) * p.x(s, w) * inverse(p.x(s, vec::add(u, w, pair.modulus()))));
  for (std::size_t al = 0; al < roots; ++al)
    for (std::size_t be = 0; be < roots; ++be) {
      auto rel = classify_pair(g.grading(), g.roots()[al], g.roots()[be]);
      if (rel == RootRelation::Orthogonal)
        for (auto& u : g.space(Sign::Plus, al).elements())
          for (auto& v : g.space(Sign::Minus, be).elements()) p.add("EJ2", comm(p.x(Sign::Plus, u), p.x(Sign::Minus, v)));
      if (rel == RootRelation::Edge)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          Sign t = opposite(s);
          for (auto& u : g.space(s, al).elements())
            for (auto& v : g.space(t, be).elements())
              for (auto& z : all[idx(s)]) {
                Vec rhs = vec::neg(pair.triple(s, u, v, z), pair.modulus());
                p.add("EJ3", comm(comm(p.x(s, u), p.x(t, v)), p.x(s, z)) * inverse(p.x(s, rhs)));
              }
        }
    }
  p.pair_ = pair;
  p.grading_ = g;
  return p;
}

Word b_word(const Presentation& p, const RootGrading& g, std::size_t alpha, std::size_t beta, const Vec& u,
            const Vec& v) {
  if (alpha == beta) throw Error("b(u, v) needs alpha != beta");
  const auto& pair = g.pair();
  Coeff n = pair.modulus();
  Word c = comm(p.x(Sign::Minus, vec::neg(v, n)), p.x(Sign::Plus, u));
  switch (classify_pair(g.grading(), g.roots()[alpha], g.roots()[beta])) {
    case RootRelation::Orthogonal: return {};
    case RootRelation::Edge: return free_reduce(c);
    case RootRelation::ArrowOut: return free_reduce(p.x(Sign::Minus, vec::neg(pair.Q(Sign::Minus, v, u), n)) * c);
    case RootRelation::ArrowIn: return free_reduce(c * p.x(Sign::Plus, vec::neg(pair.Q(Sign::Plus, u, v), n)));
    case RootRelation::Equal: break;
  }
  throw Error("b(u, v) needs alpha != beta");
}

Presentation jordan_st_presentation(const RootGrading& g, bool orthogonal_st3, std::size_t max_instances) {
  auto rep = verify_grading_suite(g);
  if (!rep.passed()) throw Error("grading unverified: " + rep.first_failure());
  const JordanPair& pair = g.pair();
  Coeff n = pair.modulus();
  Presentation p;
  p.kind_ = PresentationKind::JordanSt;
  p.name_ = "jordan-St(" + g.name() + ")";
  std::array<std::vector<Vec>, 2> all{pair.elements(Sign::Plus, max_instances), pair.elements(Sign::Minus, max_instances)};
  std::size_t roots = g.roots().size();
  std::size_t count = all[0].size() * all[0].size() + all[1].size() * all[1].size();
  for (std::size_t al = 0; al < roots; ++al)
    for (std::size_t be = 0; be < roots; ++be)
      count += g.space(Sign::Plus, al).size() * g.space(Sign::Minus, be).size() *
               (al == be ? 0 : all[0].size() + all[1].size() + 1);
  check_budget(count, max_instances, p.name_);
  p.add_pair_generators(pair, max_instances);
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (auto& u : all[idx(s)])
      for (auto& w : all[idx(s)]) p.add("St1", p.x(s, u) * p.x(s, w) * inverse(p.x(s, vec::add(u, w, n))));
  for (std::size_t al = 0; al < roots; ++al)
    for (std::size_t be = 0; be < roots; ++be) {
      auto rel = classify_pair(g.grading(), g.roots()[al], g.roots()[be]);
      auto us = g.space(Sign::Plus, al).elements(), vs = g.space(Sign::Minus, be).elements();
      if (rel == RootRelation::Orthogonal)
        for (auto& u : us)
          for (auto& v : vs) p.add("St2", comm(p.x(Sign::Plus, u), p.x(Sign::Minus, v)));
      if (al == be || (rel == RootRelation::Orthogonal && !orthogonal_st3)) continue;
      for (auto& u : us)
        for (auto& v : vs) {
          Word b = b_word(p, g, al, be, u, v);
          for (auto& z : all[0]) {
            Vec rhs = vec::add(vec::neg(pair.triple(Sign::Plus, u, v, z), n),
                               pair.Q(Sign::Plus, u, pair.Q(Sign::Minus, v, z)), n);
            p.add("St3+", comm(b, p.x(Sign::Plus, z)) * inverse(p.x(Sign::Plus, rhs)));
          }
          for (auto& y : all[1]) {
            Vec rhs = vec::add(vec::neg(pair.triple(Sign::Minus, v, u, y), n),
                               pair.Q(Sign::Minus, v, pair.Q(Sign::Plus, u, y)), n);
            p.add("St3-", comm(inverse(b), p.x(Sign::Minus, y)) * inverse(p.x(Sign::Minus, rhs)));
          }
        }
    }
  p.pair_ = pair;
  p.grading_ = g;
  return p;
}

Presentation stj_presentation(const JordanPair& pair, std::size_t max_instances) {
  if (!is_division_pair(pair)) throw Error(pair.name() + " is not a division pair");
  Coeff n = pair.modulus();
  Presentation p;
  p.kind_ = PresentationKind::StJ;
  p.name_ = "stJ(" + pair.name() + ")";
  std::array<std::vector<Vec>, 2> all{pair.elements(Sign::Plus, max_instances), pair.elements(Sign::Minus, max_instances)};
  check_budget(3 * all[0].size() * all[0].size(), max_instances, p.name_);
  p.add_pair_generators(pair, max_instances);
  for (Sign s : {Sign::Plus, Sign::Minus})
    for (auto& u : all[idx(s)])
      for (auto& w : all[idx(s)]) p.add("additive", p.x(s, u) * p.x(s, w) * inverse(p.x(s, vec::add(u, w, n))));
  for (auto& b : all[0]) {
    if (vec::is_zero(b)) continue;
    auto qi = invert(pair.Q_map(Sign::Plus, b));
    Word m = p.x(Sign::Minus, qi->apply(b));
    Word w = m * p.x(Sign::Plus, b) * m;
    for (auto& a : all[1])
      p.add("Weyl", w * p.x(Sign::Minus, a) * inverse(w) * inverse(p.x(Sign::Plus, pair.Q(Sign::Plus, b, a))));
  }
  p.pair_ = pair;
  return p;
}

Presentation free_presentation(const JordanPair& pair, std::size_t cap) {
  Presentation p;
  p.kind_ = PresentationKind::JordanSt;
  p.name_ = "free(" + pair.name() + ")";
  p.add_pair_generators(pair, cap);
  p.pair_ = pair;
  return p;
}

std::string export_text(const Presentation& p) {
  std::string out = "# " + p.name() + "\n# generators";
  for (auto& g : p.generators()) out += " " + g.name;
  out += "\n";
  for (std::size_t k = 0; k < p.relators().size(); ++k) out += p.word_str(p.relators()[k]) + "\n";
  return out;
}

}  // namespace jpst
