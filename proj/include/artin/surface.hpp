#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "artin/word.hpp"

namespace artin {

/// Intersection pattern of a finite collection of simple closed curves:
/// vertices are curves 1..count, an absent pair means disjoint, a label
/// i(a,b) >= 1 is the geometric intersection number.
class CurveGraph {
 public:
  // A chain: consecutive curves meet once, all others are disjoint.
  static CurveGraph chain(int p);
  // The D_n pattern: the path 1..n-2 with curves n-1 and n both meeting
  // curve n-2 once.
  static CurveGraph d_shape(int n);
  static CurveGraph from_edges(int curves, const std::vector<std::array<int, 3>>& edges);

  int curve_count() const { return curves_; }
  int intersections(int a, int b) const;  // 1-based, 0 when disjoint
  int edge_count() const;                 // counted with multiplicity
  bool unit_labels() const;
  bool is_tree() const;  // connected and acyclic with unit labels

  std::vector<std::array<int, 3>> edges() const;

  bool operator==(const CurveGraph&) const = default;

 private:
  CurveGraph(int curves) : curves_(curves), mult_(static_cast<std::size_t>(curves) * curves, 0) {}
  int curves_;
  std::vector<int> mult_;
};

struct SurfaceType {
  int genus = 0;
  int boundary = 0;
  int euler = 0;
  bool operator==(const SurfaceType&) const = default;
};

// Topological type of the regular neighborhood of the curve system:
// plumbs one annulus per curve, traces the ribbon boundary circles to
// count b, and uses chi = -(#intersections).  Requires a connected tree
// with unit labels.  The seed variant randomizes the cyclic point orders
// and crossing orientations chosen during plumbing; for trees the result
// is independent of those choices.
SurfaceType surface_of(const CurveGraph& cg);
SurfaceType surface_of(const CurveGraph& cg, std::uint64_t seed);

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Square integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  explicit IntMatrix(int n);  // identity
  static IntMatrix zero(int n);

  int dim() const { return n_; }
  long long& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  long long at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;  // throws OverflowError
  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  int n_;
  std::vector<long long> a_;
};

/// Homology action of the curve twists on the lattice spanned by the
/// curve classes: J is the intersection pairing (+1 from lower to higher
/// curve index) and each twist acts by the transvection x -> x + <x,a>a.
struct TransvectionRep {
  int rank = 0;
  IntMatrix pairing{0};
  std::vector<IntMatrix> twists;
};

TransvectionRep transvection_rep(const CurveGraph& cg);

// Ordered product of twist matrices over the word's letters; the empty
// word gives the identity.  This separates words (different matrices
// imply different mapping classes) but is never treated as faithful.
IntMatrix evaluate_word(const TransvectionRep& rep, const PositiveWord& w);
IntMatrix evaluate_letters(const TransvectionRep& rep, const std::vector<int>& letters);

}  // namespace artin
