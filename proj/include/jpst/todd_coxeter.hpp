#pragma once

#include <string>
#include <vector>

#include "jpst/presentation.hpp"

namespace jpst {

// Right action of generators (column 2k) and inverses (column 2k + 1) on
// cosets; -1 marks an undefined entry. A complete table is standardized:
// coset 0 is the subgroup and the rest are numbered in BFS order.
struct CosetTable {
  std::size_t generators = 0;
  std::vector<std::vector<int>> rows;
  bool complete = false;
  std::size_t defined = 0;  // cosets defined over the run
  std::string status;

  std::size_t size() const { return rows.size(); }
  int act(int coset, int letter) const { return rows[static_cast<std::size_t>(coset)][static_cast<std::size_t>(letter)]; }
  int act(int coset, const Word& w) const;
};

// HLT enumeration with a lookahead pass when the table fills up. Returns an
// incomplete table when max_cosets is not enough.
CosetTable todd_coxeter(std::size_t generators, const std::vector<Word>& relators, const std::vector<Word>& subgroup,
                        std::size_t max_cosets);
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  return todd_coxeter(p.generators().size(), p.relators(), subgroup, max_cosets);
}

}  // namespace jpst
