#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "jpst/common.hpp"

namespace jpst {

// Enumerated group: elements in BFS order from the identity, with the right
// Cayley graph over the generators.
template <class E, class Hash = std::hash<E>>
class FiniteGroup {
 public:
  using Mul = std::function<E(const E&, const E&)>;

  FiniteGroup() = default;

  static FiniteGroup closure(const std::vector<E>& gens, const E& identity, Mul mul,
                             std::size_t cap = 1'000'000) {
    FiniteGroup g;
    g.mul_ = std::move(mul);
    g.gens_ = gens;
    g.add(identity, 0, -1);
    std::size_t ng = gens.size();
    for (std::size_t i = 0; i < g.elems_.size(); ++i) {
      for (std::size_t s = 0; s < ng; ++s) {
        E prod = g.mul_(g.elems_[i], gens[s]);
        auto it = g.index_.find(prod);
        std::size_t j;
        if (it == g.index_.end()) {
          if (g.elems_.size() >= cap)
            throw BudgetExceeded("group closure exceeds " + std::to_string(cap) + " elements",
                                 g.elems_.size());
          j = g.elems_.size();
          g.add(std::move(prod), i, static_cast<int>(s));
        } else {
          j = it->second;
        }
        g.right_.push_back(j);
      }
    }
    return g;
  }

  std::size_t order() const { return elems_.size(); }
  const E& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<E>& elements() const { return elems_; }
  const std::vector<E>& generators() const { return gens_; }
  std::size_t identity() const { return 0; }
  std::optional<std::size_t> find(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const E& e) const { return index_.count(e) > 0; }
  E product(const E& a, const E& b) const { return mul_(a, b); }
  const Mul& multiplication() const { return mul_; }

  std::size_t mul(std::size_t a, std::size_t b) const {
    auto r = find(mul_(elems_[a], elems_[b]));
    if (!r) throw Error("group not closed under multiplication");
    return *r;
  }
  // Right multiplication by generator s.
  std::size_t act(std::size_t a, std::size_t s) const { return right_[a * gens_.size() + s]; }

  // Generator indices spelling element i from the identity.
  std::vector<std::size_t> word(std::size_t i) const {
    std::vector<std::size_t> w;
    while (i != 0) {
      w.push_back(static_cast<std::size_t>(via_[i]));
      i = parent_[i];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1, x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  std::size_t inverse(std::size_t a) const {
    std::size_t prev = 0, x = a;
    while (x != 0) {
      prev = x;
      x = mul(x, a);
    }
    return prev == 0 ? 0 : prev;  // a^(ord-1); identity for a = 1
  }

  std::vector<std::size_t> generator_indices() const {
    std::vector<std::size_t> out;
    for (auto& s : gens_) out.push_back(*find(s));
    return out;
  }

 private:
  void add(E e, std::size_t parent, int via) {
    index_.emplace(e, elems_.size());
    elems_.push_back(std::move(e));
    parent_.push_back(parent);
    via_.push_back(via);
  }

  Mul mul_;
  std::vector<E> gens_;
  std::vector<E> elems_;
  std::unordered_map<E, std::size_t, Hash> index_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> parent_;
  std::vector<int> via_;
};

// Subgroup of an enumerated group, as sorted element indices.
template <class G>
std::vector<std::size_t> subgroup_closure(const G& g, const std::vector<std::size_t>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : gens) {
      std::size_t j = g.mul(out[i], s);
      if (!in[j]) {
        in[j] = 1;
        out.push_back(j);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

template <class G>
std::vector<std::size_t> group_centre(const G& g) {
  auto gens = g.generator_indices();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (auto s : gens)
      if (g.mul(a, s) != g.mul(s, a)) {
        central = false;
        break;
      }
    if (central) out.push_back(a);
  }
  return out;
}

// Normal closure of the commutators of the generators.
template <class G>
std::vector<std::size_t> derived_subgroup(const G& g) {
  auto gens = g.generator_indices();
  std::vector<std::size_t> cgens;
  for (auto s : gens)
    for (auto t : gens) {
      std::size_t c = g.mul(g.mul(s, t), g.mul(g.inverse(s), g.inverse(t)));
      if (c != 0) cgens.push_back(c);
    }
  std::vector<std::size_t> h = subgroup_closure(g, cgens);
  for (;;) {
    std::vector<char> in(g.order(), 0);
    for (auto x : h) in[x] = 1;
    std::vector<std::size_t> extra;
    for (auto x : cgens)
      for (auto s : gens) {
        std::size_t conj = g.mul(g.mul(g.inverse(s), x), s);
        if (!in[conj]) extra.push_back(conj);
      }
    if (extra.empty()) return h;
    cgens.insert(cgens.end(), extra.begin(), extra.end());
    h = subgroup_closure(g, cgens);
  }
}

struct GroupFingerprint {
  std::size_t order = 0;
  std::size_t centre_order = 0;
  std::size_t derived_order = 0;
  bool perfect = false;
  std::map<std::size_t, std::size_t> order_histogram;
  std::vector<std::size_t> abelian_invariants;  // elementary divisors of G/G'

  bool operator==(const GroupFingerprint& o) const {
    return order == o.order && centre_order == o.centre_order && derived_order == o.derived_order &&
           perfect == o.perfect && order_histogram == o.order_histogram &&
           abelian_invariants == o.abelian_invariants;
  }
  nlohmann::json to_json() const {
    nlohmann::json h = nlohmann::json::object();
    for (auto& [k, v] : order_histogram) h[std::to_string(k)] = v;
    return {{"order", order},          {"centre_order", centre_order},
            {"derived_order", derived_order}, {"perfect", perfect},
            {"order_histogram", h},    {"abelian_invariants", abelian_invariants}};
  }
};

// Elementary divisors of the abelian group G/N, N normal (sorted indices).
template <class G>
std::vector<std::size_t> quotient_abelian_invariants(const G& g, const std::vector<std::size_t>& n) {
  std::vector<char> in_n(g.order(), 0);
  for (auto x : n) in_n[x] = 1;
  // coset representatives
  std::vector<std::int64_t> coset(g.order(), -1);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (coset[a] >= 0) continue;
    for (auto x : n) coset[g.mul(a, x)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(a);
  }
  std::size_t q = reps.size();
  std::vector<std::size_t> out;
  std::size_t rest = q;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    // counts of elements with x^(p^k) in N
    std::vector<std::size_t> logs{0};
    for (std::size_t pk = p;; pk *= p) {
      std::size_t cnt = 0;
      for (auto r : reps) {
        std::size_t x = 0;
        for (std::size_t e = 0; e < pk; ++e) x = g.mul(x, r);
        if (in_n[x]) ++cnt;
      }
      std::size_t lg = 0;
      while (cnt > 1) {
        cnt /= p;
        ++lg;
      }
      if (lg == logs.back()) break;
      logs.push_back(lg);
    }
    // number of cyclic factors of order >= p^k is logs[k]-logs[k-1]
    std::size_t kmax = logs.size() - 1;
    for (std::size_t k = kmax; k >= 1; --k) {
      std::size_t ge_k = logs[k] - logs[k - 1];
      std::size_t ge_k1 = k < kmax ? logs[k + 1] - logs[k] : 0;
      std::size_t pk = 1;
      for (std::size_t e = 0; e < k; ++e) pk *= p;
      for (std::size_t c = 0; c < ge_k - ge_k1; ++c) out.push_back(pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class G>
GroupFingerprint fingerprint(const G& g) {
  GroupFingerprint f;
  f.order = g.order();
  f.centre_order = group_centre(g).size();
  auto d = derived_subgroup(g);
  f.derived_order = d.size();
  f.perfect = d.size() == g.order();
  for (std::size_t a = 0; a < g.order(); ++a) ++f.order_histogram[g.element_order(a)];
  f.abelian_invariants = quotient_abelian_invariants(g, d);
  return f;
}

// Permutations of {0..n-1}; product p*q applies p first, then q.
struct Perm {
  std::vector<std::uint32_t> img;
  Perm operator*(const Perm& q) const {
    Perm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[i] = q.img[img[i]];
    return r;
  }
  bool operator==(const Perm& o) const { return img == o.img; }
  static Perm identity(std::size_t n) {
    Perm p;
    p.img.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.img[i] = static_cast<std::uint32_t>(i);
    return p;
  }
  Perm inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<std::uint32_t>(i);
    return r;
  }
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 0;
    for (auto x : p.img) h = h * 1000003u ^ x;
    return h;
  }
};

using PermGroup = FiniteGroup<Perm, PermHash>;

inline PermGroup perm_group(const std::vector<Perm>& gens, std::size_t n, std::size_t cap = 1'000'000) {
  return PermGroup::closure(gens, Perm::identity(n), [](const Perm& a, const Perm& b) { return a * b; },
                            cap);
}

}  // namespace jpst
