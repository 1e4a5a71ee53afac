#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jpst/grading.hpp"

namespace jpst {

// Letter 2k is generator k, 2k + 1 its inverse.
using Word = std::vector<int>;

inline int inverse_letter(int l) { return l ^ 1; }
Word inverse(const Word& w);
Word free_reduce(const Word& w);
// Freely and cyclically reduced.
Word cyclic_reduce(const Word& w);
Word operator*(const Word& a, const Word& b);
// ((a, b)) = a b a^-1 b^-1
Word comm(const Word& a, const Word& b);

enum class PresentationKind { Linear, RectEJ, JordanSt, StJ };
std::string kind_name(PresentationKind k);

struct Generator {
  std::string name;
  Sign sign = Sign::Plus;  // pair kinds
  Vec element;             // pair coordinates, or ring coordinates for Linear
  int row = 0, col = 0;    // Linear
};

class Presentation {
 public:
  PresentationKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<Word>& relators() const { return relators_; }
  // Schema of each relator.
  const std::vector<std::string>& schema() const { return schema_; }
  // Instances per schema, counted before reduction and deduplication.
  const std::map<std::string, std::size_t>& instances() const { return instances_; }

  const RingSpec::Ptr& ring() const { return ring_; }
  std::size_t size() const { return n_; }  // Linear
  const std::optional<JordanPair>& pair() const { return pair_; }
  const std::optional<RootGrading>& grading() const { return grading_; }

  // x_s(u); the empty word for u = 0.
  Word x(Sign s, const Vec& u) const;
  // x_ij(a); the empty word for a = 0.
  Word x(int i, int j, const Vec& a) const;

  std::string word_str(const Word& w) const;
  // Drops relators; for redundancy experiments.
  Presentation filtered(const std::vector<std::string>& drop_schemas) const;
  // Same relators in another order.
  Presentation permuted(const std::vector<std::size_t>& order) const;

  friend Presentation linear_presentation(const RingSpec::Ptr&, std::size_t, std::size_t);
  friend Presentation rect_ej_presentation(const RingSpec::Ptr&, std::size_t, std::size_t, std::size_t);
  friend Presentation jordan_st_presentation(const RootGrading&, bool, std::size_t);
  friend Presentation stj_presentation(const JordanPair&, std::size_t);
  friend Presentation free_presentation(const JordanPair&, std::size_t);

 private:
  void add_pair_generators(const JordanPair& pair, std::size_t cap);
  void add(const std::string& schema, const Word& w);

  PresentationKind kind_ = PresentationKind::Linear;
  std::string name_;
  std::vector<Generator> gens_;
  std::map<std::pair<int, Vec>, int> lookup_;
  std::vector<Word> relators_;
  std::vector<std::string> schema_;
  std::map<std::string, std::size_t> instances_;
  std::map<Word, std::size_t> seen_;
  RingSpec::Ptr ring_;
  std::size_t n_ = 0;
  std::optional<JordanPair> pair_;
  std::optional<RootGrading> grading_;
};

// St_n(A), n >= 3: (E1) additivity, (E2) commuting pairs, (E3) commutators.
Presentation linear_presentation(const RingSpec::Ptr& ring, std::size_t n, std::size_t max_instances = 10'000'000);
// St(M_IJ(A), R) with the A^I grading: (EJ1)-(EJ3).
Presentation rect_ej_presentation(const RingSpec::Ptr& ring, std::size_t p, std::size_t q,
                                  std::size_t max_instances = 10'000'000);
// St(V, R): (St1)-(St3) with b(u, v) expanded. Throws unless the grading suite passes.
Presentation jordan_st_presentation(const RootGrading& g, bool orthogonal_st3 = true,
                                    std::size_t max_instances = 10'000'000);
// St(J) of a division pair: additivity and w_b x-(a) w_b^-1 = x+(Q_b a).
Presentation stj_presentation(const JordanPair& pair, std::size_t max_instances = 10'000'000);

// Generators x+(u), x-(v) of the pair and no relators.
Presentation free_presentation(const JordanPair& pair, std::size_t cap = std::size_t{1} << 20);

// b(u, v) for u in V+_alpha, v in V-_beta, alpha != beta (root indices):
// 1, ((x-(-v), x+(u))), x-(-Q_v u) ((x-(-v), x+(u))), or ((x-(-v), x+(u))) x+(-Q_u v).
Word b_word(const Presentation& p, const RootGrading& g, std::size_t alpha, std::size_t beta, const Vec& u,
            const Vec& v);

// One relator per line over generators xp_k / xm_k (xij_k for Linear), inverse as ^-1.
std::string export_text(const Presentation& p);

}  // namespace jpst
