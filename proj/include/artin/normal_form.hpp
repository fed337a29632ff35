#pragma once

#include <optional>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/word.hpp"

namespace artin {

/// Left-greedy normal form of a positive word: a sequence of nonidentity
/// square-free factors (Coxeter group elements) that is left-weighted,
/// i.e. every left descent of a factor is a right descent of its
/// predecessor.  Two positive words are equal in the Artin monoid iff
/// their normal forms coincide.  Supports incremental appends, which the
/// verdict tables use to extend alternating products one block at a time.
class NormalForm {
 public:
  explicit NormalForm(CoxeterGraph graph);
  static NormalForm of(const PositiveWord& w);

  void append(int letter);
  void append(const PositiveWord& w);

  const CoxeterGraph& graph() const { return graph_; }
  const std::vector<CoxeterElement>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }
  std::size_t letter_count() const { return letter_count_; }

  // Canonical word: the concatenation of the lexicographically smallest
  // reduced words of the factors.
  PositiveWord word() const;

  // Removes one generator from the left (w = s * w'), renormalizing.
  // Returns false when s does not left-divide the value.
  bool strip_left(int s);

  bool operator==(const NormalForm& rhs) const {
    return graph_ == rhs.graph_ && factors_ == rhs.factors_;
  }

  bool is_left_weighted() const;  // diagnostic, used by tests

 private:
  void fix_from(std::size_t pair_index);

  CoxeterGraph graph_;
  std::vector<CoxeterElement> factors_;
  std::size_t letter_count_ = 0;
};

// Decides positive-word equality in the Artin monoid of a catalog graph.
// By injectivity of the monoid into the Artin group this also decides
// equality of the corresponding group elements.
bool words_equal(const PositiveWord& u, const PositiveWord& v);

// Generator s left-divides w, i.e. w = s * w' for some positive w'.
bool left_divides(int s, const PositiveWord& w);

// The unique w' with w = u * w', when u left-divides w.
std::optional<PositiveWord> left_quotient(const PositiveWord& u, const PositiveWord& w);

bool word_divides(const PositiveWord& u, const PositiveWord& w);

// Least common multiple [u, v] in a finite-type catalog monoid.
PositiveWord lcm_pair(const PositiveWord& u, const PositiveWord& v);

// Fundamental element of a set of pairwise-commuting generators: their
// product in ascending index order.
PositiveWord delta_commuting(const CoxeterGraph& g, const std::vector<int>& generators);

// Given s*X = t*Y, returns the witness W with X = prod(t,s;m_st-1) * W
// and Y = prod(s,t;m_st-1) * W.  Both equalities are re-verified through
// words_equal before returning.
PositiveWord reduction_step(int s, int t, const PositiveWord& x, const PositiveWord& y);

// Lattice operations on square-free elements under the prefix order
// (exposed mainly for the test suites).
CoxeterElement simple_meet(const CoxeterElement& a, const CoxeterElement& b);
CoxeterElement simple_join(const CoxeterGraph& g, const CoxeterElement& a, const CoxeterElement& b);
std::vector<int> reduced_word(const CoxeterElement& a);

}  // namespace artin
