#include "jpst/todd_coxeter.hpp"

#include <deque>

namespace jpst {

int CosetTable::act(int coset, const Word& w) const {
  for (int l : w) {
    if (coset < 0) return -1;
    coset = act(coset, l);
  }
  return coset;
}

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t gens, std::size_t max) : cols_(2 * gens), max_(max) { new_row(); }

  std::vector<std::vector<int>> table;
  std::vector<int> parent;  // union-find over cosets; parent[c] == c when live
  std::size_t defined = 0;
  bool full = false;

  bool live(int c) const { return parent[static_cast<std::size_t>(c)] == c; }
  std::size_t live_count() const { return live_; }

  // Scans w from c, filling gaps by new definitions when fill is set.
  void scan(int c, const Word& w, bool fill) {
    if (w.empty()) return;
    int f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && get(f, w[static_cast<std::size_t>(i)]) >= 0) f = get(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && get(b, inverse_letter(w[static_cast<std::size_t>(j)])) >= 0)
        b = get(b, inverse_letter(w[static_cast<std::size_t>(j--)]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[static_cast<std::size_t>(i)], b);
        return;
      }
      if (!fill || !define(f, w[static_cast<std::size_t>(i)])) return;
    }
  }

  bool define(int c, int letter) {
    if (table.size() >= max_) {
      full = true;
      return false;
    }
    int d = new_row();
    set(c, letter, d);
    return true;
  }

  // Renumbers live cosets in order; frees dead rows.
  void compact() {
    std::vector<int> to(table.size(), -1);
    int k = 0;
    for (std::size_t c = 0; c < table.size(); ++c)
      if (live(static_cast<int>(c))) to[c] = k++;
    std::vector<std::vector<int>> t;
    for (std::size_t c = 0; c < table.size(); ++c) {
      if (to[c] < 0) continue;
      std::vector<int> row = table[c];
      for (auto& e : row)
        if (e >= 0) e = to[static_cast<std::size_t>(rep(e))];
      t.push_back(std::move(row));
    }
    table = std::move(t);
    parent.resize(table.size());
    for (std::size_t c = 0; c < table.size(); ++c) parent[c] = static_cast<int>(c);
    live_ = table.size();
  }

 private:
  int get(int c, int l) const { return table[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)]; }
  void set(int c, int l, int d) {
    table[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)] = d;
    table[static_cast<std::size_t>(d)][static_cast<std::size_t>(inverse_letter(l))] = c;
  }

  int new_row() {
    table.emplace_back(cols_, -1);
    parent.push_back(static_cast<int>(table.size() - 1));
    ++live_;
    ++defined;
    return static_cast<int>(table.size() - 1);
  }

  int rep(int c) {
    int r = c;
    while (parent[static_cast<std::size_t>(r)] != r) r = parent[static_cast<std::size_t>(r)];
    while (parent[static_cast<std::size_t>(c)] != r) {
      int nx = parent[static_cast<std::size_t>(c)];
      parent[static_cast<std::size_t>(c)] = r;
      c = nx;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& q) {
    int x = rep(a), y = rep(b);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[static_cast<std::size_t>(y)] = x;
    --live_;
    q.push_back(y);
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int g = q.front();
      q.pop_front();
      for (int l = 0; l < static_cast<int>(cols_); ++l) {
        int d = get(g, l);
        if (d < 0) continue;
        table[static_cast<std::size_t>(d)][static_cast<std::size_t>(inverse_letter(l))] = -1;
        int m = rep(g), v = rep(d);
        if (get(m, l) >= 0)
          merge(v, get(m, l), q);
        else if (get(v, inverse_letter(l)) >= 0)
          merge(m, get(v, inverse_letter(l)), q);
        else
          set(m, l, v);
      }
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::size_t live_ = 0;
};

}  // namespace

CosetTable todd_coxeter(std::size_t generators, const std::vector<Word>& relators, const std::vector<Word>& subgroup,
                        std::size_t max_cosets) {
  if (max_cosets == 0) throw Error("coset budget must be positive");
  for (auto& w : relators)
    for (int l : w)
      if (l < 0 || static_cast<std::size_t>(l) >= 2 * generators) throw Error("relator uses an unknown generator");
  Enumerator e(generators, max_cosets);
  CosetTable out;
  out.generators = generators;
  for (auto& w : subgroup) e.scan(0, w, true);
  std::size_t cols = 2 * generators;
  for (std::size_t a = 0; a < e.table.size(); ++a) {
    int c = static_cast<int>(a);
    bool retry = false;
    if (e.live(c)) {
      for (auto& w : relators) {
        if (!e.live(c) || e.full) break;
        e.scan(c, w, true);
      }
      for (std::size_t l = 0; l < cols && e.live(c) && !e.full; ++l)
        if (e.table[a][l] < 0) e.define(c, static_cast<int>(l));
    }
    if (e.full) {
      // lookahead: deductions only, over every live coset
      e.full = false;
      for (std::size_t b = 0; b < e.table.size(); ++b)
        for (auto& w : relators)
          if (e.live(static_cast<int>(b))) e.scan(static_cast<int>(b), w, false);
      std::size_t before = e.table.size();
      int keep = 0;
      for (std::size_t b = 0; b < a; ++b)
        if (e.live(static_cast<int>(b))) ++keep;
      e.compact();
      if (e.table.size() == before) {
        out.defined = e.defined;
        out.status = "coset budget of " + std::to_string(max_cosets) + " exhausted";
        out.rows = std::move(e.table);
        return out;
      }
      // resume at the first coset not yet fully processed
      a = static_cast<std::size_t>(keep);
      retry = true;
    }
    if (retry) --a;
  }
  e.compact();

  // standardize by BFS from the subgroup coset
  std::vector<int> to(e.table.size(), -1), order;
  to[0] = 0;
  order.push_back(0);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t l = 0; l < cols; ++l) {
      int d = e.table[static_cast<std::size_t>(order[k])][l];
      if (d >= 0 && to[static_cast<std::size_t>(d)] < 0) {
        to[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  out.rows.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto& row = e.table[static_cast<std::size_t>(order[k])];
    out.rows[k].resize(cols);
    for (std::size_t l = 0; l < cols; ++l) out.rows[k][l] = row[l] < 0 ? -1 : to[static_cast<std::size_t>(row[l])];
  }
  out.complete = true;
  for (auto& row : out.rows)
    for (int v : row)
      if (v < 0) out.complete = false;
  out.defined = e.defined;
  out.status = out.complete ? "complete" : "incomplete";
  return out;
}

}  // namespace jpst
