#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/word.hpp"

namespace artin {

/// A dihedral folding of a catalog A or D graph onto I_2(h), h the
/// Coxeter number of the source: the vertex set splits into two
/// independent sets (K_s, K_t), the fibers of the two target vertices.
/// The orientation flag distinguishes the two labelings of the partition.
struct Folding {
  CoxeterGraph source;
  int target_label = 0;  // h
  std::vector<int> part_s;
  std::vector<int> part_t;
  bool flipped = false;
};

// Two-coloring of a connected bipartite graph; the part containing
// vertex 1 comes first.  Rejects non-bipartite graphs and partitions
// with an empty part (rank-1 graphs cannot fold).
std::pair<std::vector<int>, std::vector<int>> bipartition(const CoxeterGraph& g);

Folding dihedral_folding(const CoxeterGraph& source, bool flipped = false);

// Images of the target generators under the induced monoid map:
// x = Delta_{K_s}, y = Delta_{K_t}, the ascending products of the parts.
std::pair<PositiveWord, PositiveWord> lcm_hom_images(const Folding& f);

struct FoldingReport {
  CoxeterGraph source;
  int h = 0;
  PositiveWord x;
  PositiveWord y;
  bool relation_at_h = false;  // prod(x,y;h) = prod(y,x;h)
  bool divisibility = false;   // x and y both left-divide the common value
  std::optional<int> first_shorter_relation;  // smallest r < h with equality

  bool passed() const { return relation_at_h && divisibility && !first_shorter_relation; }
};

FoldingReport verify_lcm_hom(const Folding& f);

}  // namespace artin
