#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace artin {

// Graph families the toolkit knows concrete group realizations for.
// Custom graphs are accepted for monoid-level rewriting only.
enum class GraphKind : std::uint8_t { A, D, I2, Custom };

// Off-diagonal Coxeter label standing for m_st = infinity (no relation).
inline constexpr int kNoRelation = 0;

// Largest rank for which group elements can be realized (storage cap).
inline constexpr int kMaxRank = 16;

/// A Coxeter graph: vertices 1..rank, symmetric label matrix with
/// m_ss = 1, m_st = 2 for non-edges and m_st >= 3 (or kNoRelation) on edges.
class CoxeterGraph {
 public:
  // Catalog constructors.  A_n is a path of n vertices with label-3 edges,
  // D_n (n >= 4) is the path s_1..s_{n-2} with s_{n-1} and s_n both joined
  // to s_{n-2}, I_2(m) is a single edge labeled m >= 3.
  static CoxeterGraph type_a(int rank);
  static CoxeterGraph type_d(int rank);
  static CoxeterGraph dihedral(int label);

  // Arbitrary labeled graph; each edge is (s, t, m) with m >= 3 or
  // kNoRelation.  Unlisted pairs get m = 2.
  static CoxeterGraph custom(int rank, const std::vector<std::array<int, 3>>& edges);

  GraphKind kind() const { return kind_; }
  int rank() const { return rank_; }
  bool is_catalog() const { return kind_ != GraphKind::Custom; }

  // The m in I_2(m); only valid for dihedral graphs.
  int dihedral_label() const;

  // m_st for 1-based vertex indices; kNoRelation encodes infinity.
  int label(int s, int t) const;
  bool has_infinite_label() const;

  std::string vertex_name(int s) const;  // "s3"

  // Full symmetric Coxeter matrix, 1-based content in a 0-based grid.
  std::vector<std::vector<int>> matrix() const;

  // Edges (s < t) with m_st >= 3 or m_st = kNoRelation.
  std::vector<std::array<int, 3>> edges() const;

  bool operator==(const CoxeterGraph&) const = default;

 private:
  CoxeterGraph(GraphKind kind, int rank);
  void set_label(int s, int t, int m);

  GraphKind kind_;
  int rank_;
  std::vector<int> m_;  // rank x rank, row-major
};

std::vector<std::vector<int>> coxeter_matrix(const CoxeterGraph& g);

/// An element of the Coxeter group W of a catalog graph.
///   A_n : permutation of {1..n+1} in one-line notation,
///   D_n : signed permutation of {1..n} with an even number of sign flips,
///   I_2(m) : (rotation index mod m, reflection bit).
class CoxeterElement {
 public:
  CoxeterElement() = default;

  GraphKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int dihedral_label() const { return order_; }

  bool is_identity() const;
  bool operator==(const CoxeterElement&) const = default;

  // Raw slot access for hashing and low-level checks.
  std::int16_t slot(int i) const { return v_[static_cast<std::size_t>(i)]; }

  friend CoxeterElement identity_element(const CoxeterGraph& g);
  friend CoxeterElement generator(const CoxeterGraph& g, int s);
  friend CoxeterElement generator_like(const CoxeterElement& a, int s);
  friend CoxeterElement multiply(const CoxeterElement& a, const CoxeterElement& b);
  friend CoxeterElement inverse(const CoxeterElement& a);
  friend int length(const CoxeterElement& a);
  friend bool has_left_descent(const CoxeterElement& a, int s);
  friend bool has_right_descent(const CoxeterElement& a, int s);
  friend CoxeterElement longest_element(const CoxeterGraph& g);

 private:
  GraphKind kind_ = GraphKind::A;
  std::int16_t rank_ = 0;   // graph rank
  std::int32_t order_ = 0;  // I2 only: the label m
  std::array<std::int16_t, kMaxRank + 1> v_{};
};

CoxeterElement identity_element(const CoxeterGraph& g);
CoxeterElement generator(const CoxeterGraph& g, int s);

// Generator s of the group an existing element lives in.
CoxeterElement generator_like(const CoxeterElement& a, int s);

CoxeterElement multiply(const CoxeterElement& a, const CoxeterElement& b);
CoxeterElement inverse(const CoxeterElement& a);
int length(const CoxeterElement& a);

// s is a left descent of w iff length(s * w) < length(w); the A and D
// cases are decided by direct sign/position scans, not via length().
bool has_left_descent(const CoxeterElement& a, int s);
bool has_right_descent(const CoxeterElement& a, int s);
std::vector<int> left_descents(const CoxeterElement& a);

CoxeterElement longest_element(const CoxeterGraph& g);

// Multiplicative order of an element (finite groups only, so always finite).
int element_order(const CoxeterElement& a);

// Order of the product of all generators; equals n+1 / 2n-2 / m for the
// catalog families.  Rejects custom graphs.
int coxeter_number(const CoxeterGraph& g);

struct ElementHash {
  std::size_t operator()(const CoxeterElement& a) const;
};

}  // namespace artin
