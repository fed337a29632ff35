#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "artin/coxeter.hpp"

namespace artin {

/// A positive word in the Artin monoid of a Coxeter graph: a finite
/// sequence of 1-based generator indices.  The empty word is the monoid
/// identity.  Words are immutable values.
class PositiveWord {
 public:
  PositiveWord(CoxeterGraph graph, std::vector<int> letters);

  // Parses whitespace-separated generator indices, e.g. "1 2 1".
  // The empty string is the identity.
  static PositiveWord parse(CoxeterGraph graph, std::string_view text);

  const CoxeterGraph& graph() const { return graph_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::string str() const;

  // Concatenation in the monoid (graphs must match).
  PositiveWord operator*(const PositiveWord& rhs) const;

 private:
  CoxeterGraph graph_;
  std::vector<int> letters_;
};

// prod(a,b;l) = aba... with l alternating factors, starting with a.
PositiveWord prod_word(const PositiveWord& a, const PositiveWord& b, int l);

void require_same_graph(const PositiveWord& u, const PositiveWord& v);

}  // namespace artin
