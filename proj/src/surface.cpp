#include "artin/surface.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace artin {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

CurveGraph CurveGraph::chain(int p) {
  if (p < 1) fail("chain requires p >= 1");
  CurveGraph cg(p);
  for (int i = 1; i < p; ++i) {
    cg.mult_[static_cast<std::size_t>(i - 1) * p + i] = 1;
    cg.mult_[static_cast<std::size_t>(i) * p + (i - 1)] = 1;
  }
  return cg;
}

CurveGraph CurveGraph::d_shape(int n) {
  if (n < 4) fail("d_shape requires n >= 4");
  CurveGraph cg(n);
  auto link = [&cg, n](int a, int b) {
    cg.mult_[static_cast<std::size_t>(a - 1) * n + (b - 1)] = 1;
    cg.mult_[static_cast<std::size_t>(b - 1) * n + (a - 1)] = 1;
  };
  for (int i = 1; i + 1 <= n - 2; ++i) link(i, i + 1);
  link(n - 2, n - 1);
  link(n - 2, n);
  return cg;
}

CurveGraph CurveGraph::from_edges(int curves, const std::vector<std::array<int, 3>>& edges) {
  if (curves < 1) fail("curve graph requires at least one curve");
  CurveGraph cg(curves);
  for (const auto& e : edges) {
    int a = e[0], b = e[1], m = e[2];
    if (a < 1 || a > curves || b < 1 || b > curves || a == b) fail("curve edge out of range");
    if (m < 1) fail("intersection multiplicity must be >= 1");
    if (cg.intersections(a, b) != 0) fail("duplicate curve pair");
    cg.mult_[static_cast<std::size_t>(a - 1) * curves + (b - 1)] = m;
    cg.mult_[static_cast<std::size_t>(b - 1) * curves + (a - 1)] = m;
  }
  return cg;
}

int CurveGraph::intersections(int a, int b) const {
  if (a < 1 || a > curves_ || b < 1 || b > curves_) fail("curve index out of range");
  return mult_[static_cast<std::size_t>(a - 1) * curves_ + (b - 1)];
}

int CurveGraph::edge_count() const {
  int e = 0;
  for (int a = 1; a <= curves_; ++a)
    for (int b = a + 1; b <= curves_; ++b) e += intersections(a, b);
  return e;
}

bool CurveGraph::unit_labels() const {
  return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m == 0 || m == 1; });
}

bool CurveGraph::is_tree() const {
  if (!unit_labels()) return false;
  if (edge_count() != curves_ - 1) return false;
  std::vector<bool> seen(static_cast<std::size_t>(curves_) + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 1; w <= curves_; ++w)
      if (!seen[static_cast<std::size_t>(w)] && intersections(v, w) > 0) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
        ++visited;
      }
  }
  return visited == curves_;
}

std::vector<std::array<int, 3>> CurveGraph::edges() const {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= curves_; ++a)
    for (int b = a + 1; b <= curves_; ++b)
      if (int m = intersections(a, b); m > 0) out.push_back({a, b, m});
  return out;
}

namespace {

// Ribbon tracing.  Each intersection point is a 4-valent vertex; each
// curve is a circle carrying its points in a chosen cyclic order, giving
// the arcs.  Darts are (point, curve, in/out); the rotation at a point
// alternates the two curves.  Boundary circles of the thickened union
// are the orbits of rotation-after-arc-involution.
struct Plumbing {
  // dart ids: 4*point + slot, slot 0/1 = first curve in/out, 2/3 = second
  std::vector<int> arc_mate;   // dart -> other end of its arc
  std::vector<int> next_dart;  // dart -> next dart around its vertex
};

SurfaceType trace(const CurveGraph& cg, std::mt19937_64* rng) {
  if (!cg.is_tree()) fail("surface_of requires a connected tree with unit intersections");
  int v = cg.curve_count();
  auto edge_list = cg.edges();
  int e = static_cast<int>(edge_list.size());
  if (e == 0) return SurfaceType{0, 2, 0};  // a single annulus

  // points on each curve
  std::vector<std::vector<int>> on_curve(static_cast<std::size_t>(v) + 1);
  for (int p = 0; p < e; ++p) {
    on_curve[static_cast<std::size_t>(edge_list[static_cast<std::size_t>(p)][0])].push_back(p);
    on_curve[static_cast<std::size_t>(edge_list[static_cast<std::size_t>(p)][1])].push_back(p);
  }
  if (rng)
    for (auto& pts : on_curve) std::shuffle(pts.begin(), pts.end(), *rng);

  auto slot_base = [&edge_list](int point, int curve) {
    return edge_list[static_cast<std::size_t>(point)][0] == curve ? 0 : 2;
  };

  Plumbing pl;
  pl.arc_mate.assign(static_cast<std::size_t>(4 * e), -1);
  pl.next_dart.assign(static_cast<std::size_t>(4 * e), -1);

  // arcs: walking curve c through its cyclic point order, the out-dart at
  // one point meets the in-dart at the next
  for (int c = 1; c <= v; ++c) {
    const auto& pts = on_curve[static_cast<std::size_t>(c)];
    std::size_t d = pts.size();
    for (std::size_t i = 0; i < d; ++i) {
      int from = pts[i], to = pts[(i + 1) % d];
      int out_dart = 4 * from + slot_base(from, c) + 1;
      int in_dart = 4 * to + slot_base(to, c);
      pl.arc_mate[static_cast<std::size_t>(out_dart)] = in_dart;
      pl.arc_mate[static_cast<std::size_t>(in_dart)] = out_dart;
    }
  }

  // rotation at each point: the four darts in an alternating cyclic order;
  // the two transversal strands may cross with either orientation
  for (int p = 0; p < e; ++p) {
    std::array<int, 4> order{0, 2, 1, 3};  // a-in, b-in, a-out, b-out
    if (rng && ((*rng)() & 1u)) order = {0, 3, 1, 2};
    for (int i = 0; i < 4; ++i)
      pl.next_dart[static_cast<std::size_t>(4 * p + order[static_cast<std::size_t>(i)])] =
          4 * p + order[static_cast<std::size_t>((i + 1) % 4)];
  }

  // boundary components = orbits of dart -> next(arc_mate(dart))
  std::vector<bool> used(static_cast<std::size_t>(4 * e), false);
  int orbits = 0;
  for (int d0 = 0; d0 < 4 * e; ++d0) {
    if (used[static_cast<std::size_t>(d0)]) continue;
    ++orbits;
    int d = d0;
    while (!used[static_cast<std::size_t>(d)]) {
      used[static_cast<std::size_t>(d)] = true;
      d = pl.next_dart[static_cast<std::size_t>(pl.arc_mate[static_cast<std::size_t>(d)])];
    }
  }

  int chi = -e;
  int b = orbits;
  int genus2 = 2 - chi - b;
  if (genus2 < 0 || genus2 % 2 != 0) throw std::logic_error("inconsistent ribbon trace");
  return SurfaceType{genus2 / 2, b, chi};
}

}  // namespace

SurfaceType surface_of(const CurveGraph& cg) { return trace(cg, nullptr); }

SurfaceType surface_of(const CurveGraph& cg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return trace(cg, &rng);
}

IntMatrix::IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
  for (int i = 0; i < n; ++i) at(i, i) = 1;
}

IntMatrix IntMatrix::zero(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 0;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (n_ != rhs.n_) fail("matrix dimension mismatch");
  IntMatrix out = zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      long long aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) {
        long long prod = 0, sum = 0;
        if (__builtin_mul_overflow(aik, rhs.at(k, j), &prod) ||
            __builtin_add_overflow(out.at(i, j), prod, &sum))
          throw OverflowError("integer matrix product overflowed 64 bits");
        out.at(i, j) = sum;
      }
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out = zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

TransvectionRep transvection_rep(const CurveGraph& cg) {
  if (!cg.is_tree()) fail("transvection_rep requires a connected tree with unit intersections");
  int v = cg.curve_count();
  TransvectionRep rep{v, IntMatrix::zero(v), {}};
  for (int a = 1; a <= v; ++a)
    for (int b = 1; b <= v; ++b) {
      if (a == b) continue;
      int m = cg.intersections(a, b);
      rep.pairing.at(a - 1, b - 1) = (a < b) ? m : -m;
    }
  rep.twists.reserve(static_cast<std::size_t>(v));
  for (int c = 1; c <= v; ++c) {
    IntMatrix m(v);
    for (int k = 0; k < v; ++k) m.at(c - 1, k) += rep.pairing.at(k, c - 1);
    rep.twists.push_back(std::move(m));
  }
  return rep;
}

IntMatrix evaluate_letters(const TransvectionRep& rep, const std::vector<int>& letters) {
  IntMatrix out(rep.rank);
  for (int s : letters) {
    if (s < 1 || s > rep.rank) fail("twist index out of range");
    out = out * rep.twists[static_cast<std::size_t>(s - 1)];
  }
  return out;
}

IntMatrix evaluate_word(const TransvectionRep& rep, const PositiveWord& w) {
  return evaluate_letters(rep, w.letters());
}

}  // namespace artin
