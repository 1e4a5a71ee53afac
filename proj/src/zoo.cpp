#include "jpst/zoo.hpp"

#include <charconv>

namespace jpst {

namespace {

std::uint32_t number(const std::string& s, const std::string& whole) {
  std::uint32_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v == 0) throw Error("bad ring name '" + whole + "'");
  return v;
}

}  // namespace

RingSpec::Ptr ring_from_name(const std::string& name) {
  if (name.rfind("Mat", 0) == 0) {
    auto open = name.find('(');
    if (open == std::string::npos || name.back() != ')') throw Error("bad ring name '" + name + "'");
    auto m = number(name.substr(3, open - 3), name);
    return RingSpec::matrix(ring_from_name(name.substr(open + 1, name.size() - open - 2)), m);
  }
  if (name.size() > 1 && name[0] == 'F') return RingSpec::finite_field_q(number(name.substr(1), name));
  if (name.rfind("Z/", 0) == 0) return RingSpec::modular(number(name.substr(2), name));
  if (name.size() > 1 && name[0] == 'Z') return RingSpec::modular(number(name.substr(1), name));
  throw Error("unknown ring '" + name + "'");
}

JordanPair zoo_pair(const PairSelector& sel) {
  if (!sel.ring) throw Error("pair selector has no ring");
  if (sel.kind == "full") return full_pair(sel.ring);
  if (sel.kind == "rect") return rect_pair(sel.ring, sel.i, sel.j);
  if (sel.kind == "hermitian") return hermitian_pair(sel.ring, std::max<std::size_t>(sel.i, 2));
  if (sel.kind == "alternating") return alternating_pair(sel.ring, std::max<std::size_t>(sel.i, 4));
  if (sel.kind == "quadform") {
    if (sel.ring->kind() != RingKind::PrimeField) throw Error("quadform pairs need a prime field");
    return quadform_hyperbolic(sel.ring->characteristic(), Vec(sel.j, 1));
  }
  throw Error("unknown pair kind '" + sel.kind + "'");
}

GradingKind default_grading(const std::string& kind) {
  if (kind == "full" || kind == "rect") return GradingKind::AI;
  if (kind == "hermitian") return GradingKind::Cher;
  if (kind == "alternating") return GradingKind::Dalt;
  if (kind == "quadform") return GradingKind::Bqf;
  throw Error("no grading for pair kind '" + kind + "'");
}

RootGrading zoo_grading(const PairSelector& sel) { return make_grading(zoo_pair(sel), default_grading(sel.kind)); }

std::vector<ZooEntry> graded_zoo() {
  auto f2 = RingSpec::prime_field(2), f3 = RingSpec::prime_field(3);
  return {
      {"full(F2)", {"full", f2, 1, 1}, true},
      {"full(F3)", {"full", f3, 1, 1}, true},
      {"rect(F2,1,2)", {"rect", f2, 1, 2}, true},
      {"rect(F3,1,2)", {"rect", f3, 1, 2}, true},
      {"rect(F2,2,2)", {"rect", f2, 2, 2}, false},
      {"H2(F2)", {"hermitian", f2, 2, 1}, false},
      {"alternating(F2,4)", {"alternating", f2, 4, 1}, false},
      {"quadform(F2)", {"quadform", f2, 1, 1}, true},
      {"quadform(F3)", {"quadform", f3, 1, 1}, false},
  };
}

std::vector<ZooEntry> pair_zoo() {
  auto z = graded_zoo();
  z.push_back({"full(Z4)", {"full", RingSpec::modular(4), 1, 1}, true});
  z.push_back({"full(Mat2(F2))", {"full", RingSpec::matrix(RingSpec::prime_field(2), 2), 1, 1}, false});
  return z;
}

}  // namespace jpst
