#include "artin/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace artin {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

CoxeterGraph::CoxeterGraph(GraphKind kind, int rank)
    : kind_(kind), rank_(rank), m_(static_cast<std::size_t>(rank) * rank, 2) {
  for (int i = 0; i < rank; ++i) m_[static_cast<std::size_t>(i) * rank + i] = 1;
}

void CoxeterGraph::set_label(int s, int t, int m) {
  m_[static_cast<std::size_t>(s - 1) * rank_ + (t - 1)] = m;
  m_[static_cast<std::size_t>(t - 1) * rank_ + (s - 1)] = m;
}

CoxeterGraph CoxeterGraph::type_a(int rank) {
  if (rank < 1) fail("A_n requires n >= 1");
  CoxeterGraph g(GraphKind::A, rank);
  for (int i = 1; i < rank; ++i) g.set_label(i, i + 1, 3);
  return g;
}

CoxeterGraph CoxeterGraph::type_d(int rank) {
  if (rank < 4) fail("D_n requires n >= 4");
  CoxeterGraph g(GraphKind::D, rank);
  for (int i = 1; i + 1 <= rank - 2; ++i) g.set_label(i, i + 1, 3);
  g.set_label(rank - 2, rank - 1, 3);
  g.set_label(rank - 2, rank, 3);
  return g;
}

CoxeterGraph CoxeterGraph::dihedral(int label) {
  if (label < 3) fail("I_2(m) requires m >= 3");
  CoxeterGraph g(GraphKind::I2, 2);
  g.set_label(1, 2, label);
  return g;
}

CoxeterGraph CoxeterGraph::custom(int rank, const std::vector<std::array<int, 3>>& edges) {
  if (rank < 1) fail("custom graph requires rank >= 1");
  CoxeterGraph g(GraphKind::Custom, rank);
  for (const auto& e : edges) {
    int s = e[0], t = e[1], m = e[2];
    if (s < 1 || s > rank || t < 1 || t > rank || s == t)
      fail("custom edge endpoints out of range");
    if (m != kNoRelation && m < 3) fail("custom edge label must be >= 3 or 0 (= infinity)");
    if (g.label(s, t) != 2) fail("duplicate edge in custom graph");
    g.set_label(s, t, m);
  }
  return g;
}

int CoxeterGraph::dihedral_label() const {
  if (kind_ != GraphKind::I2) fail("dihedral_label: not an I2 graph");
  return label(1, 2);
}

int CoxeterGraph::label(int s, int t) const {
  if (s < 1 || s > rank_ || t < 1 || t > rank_) fail("vertex index out of range");
  return m_[static_cast<std::size_t>(s - 1) * rank_ + (t - 1)];
}

bool CoxeterGraph::has_infinite_label() const {
  return std::find(m_.begin(), m_.end(), kNoRelation) != m_.end();
}

std::string CoxeterGraph::vertex_name(int s) const {
  if (s < 1 || s > rank_) fail("vertex index out of range");
  return "s" + std::to_string(s);
}

std::vector<std::vector<int>> CoxeterGraph::matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    m[static_cast<std::size_t>(i)] = {m_.begin() + static_cast<std::ptrdiff_t>(i) * rank_,
                                      m_.begin() + static_cast<std::ptrdiff_t>(i + 1) * rank_};
  return m;
}

std::vector<std::array<int, 3>> CoxeterGraph::edges() const {
  std::vector<std::array<int, 3>> out;
  for (int s = 1; s <= rank_; ++s)
    for (int t = s + 1; t <= rank_; ++t) {
      int m = label(s, t);
      if (m >= 3 || m == kNoRelation) out.push_back({s, t, m});
    }
  return out;
}

std::vector<std::vector<int>> coxeter_matrix(const CoxeterGraph& g) { return g.matrix(); }

namespace {

void require_catalog(const CoxeterGraph& g) {
  if (!g.is_catalog()) fail("operation requires a catalog graph (A, D or I2)");
  if (g.kind() != GraphKind::I2 && g.rank() > kMaxRank)
    fail("catalog rank exceeds the supported maximum of " + std::to_string(kMaxRank));
}

void require_same_group(const CoxeterElement& a, const CoxeterElement& b) {
  if (a.kind() != b.kind() || a.rank() != b.rank() || a.dihedral_label() != b.dihedral_label())
    fail("elements belong to different groups");
}

}  // namespace

CoxeterElement identity_element(const CoxeterGraph& g) {
  require_catalog(g);
  CoxeterElement e;
  e.kind_ = g.kind();
  e.rank_ = static_cast<std::int16_t>(g.rank());
  switch (g.kind()) {
    case GraphKind::A:
      for (int i = 0; i <= g.rank(); ++i) e.v_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(i + 1);
      break;
    case GraphKind::D:
      for (int i = 0; i < g.rank(); ++i) e.v_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(i + 1);
      break;
    case GraphKind::I2: {
      int m = g.dihedral_label();
      if (m > 32767) fail("I2 label too large for element arithmetic");
      e.order_ = m;
      break;
    }
    default:
      fail("unreachable");
  }
  return e;
}

CoxeterElement generator(const CoxeterGraph& g, int s) {
  return generator_like(identity_element(g), s);
}

CoxeterElement generator_like(const CoxeterElement& a, int s) {
  if (s < 1 || s > a.rank_) fail("generator index out of range");
  CoxeterElement e;
  e.kind_ = a.kind_;
  e.rank_ = a.rank_;
  e.order_ = a.order_;
  switch (e.kind_) {
    case GraphKind::A:
      for (int i = 0; i <= e.rank_; ++i) e.v_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(i + 1);
      std::swap(e.v_[static_cast<std::size_t>(s - 1)], e.v_[static_cast<std::size_t>(s)]);
      break;
    case GraphKind::D:
      for (int i = 0; i < e.rank_; ++i) e.v_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(i + 1);
      if (s < e.rank_) {
        std::swap(e.v_[static_cast<std::size_t>(s - 1)], e.v_[static_cast<std::size_t>(s)]);
      } else {
        // reflection in e_{n-1} + e_n
        e.v_[static_cast<std::size_t>(e.rank_ - 2)] = static_cast<std::int16_t>(-e.rank_);
        e.v_[static_cast<std::size_t>(e.rank_ - 1)] = static_cast<std::int16_t>(-(e.rank_ - 1));
      }
      break;
    case GraphKind::I2:
      e.v_[0] = (s == 1) ? 0 : 1;  // s = (0, refl), t = (1, refl)
      e.v_[1] = 1;
      break;
    default:
      fail("unreachable");
  }
  return e;
}

bool CoxeterElement::is_identity() const {
  switch (kind_) {
    case GraphKind::A: {
      for (int i = 0; i <= rank_; ++i)
        if (v_[static_cast<std::size_t>(i)] != i + 1) return false;
      return true;
    }
    case GraphKind::D: {
      for (int i = 0; i < rank_; ++i)
        if (v_[static_cast<std::size_t>(i)] != i + 1) return false;
      return true;
    }
    case GraphKind::I2:
      return v_[0] == 0 && v_[1] == 0;
    default:
      return false;
  }
}

CoxeterElement multiply(const CoxeterElement& a, const CoxeterElement& b) {
  require_same_group(a, b);
  CoxeterElement r = a;
  switch (a.kind_) {
    case GraphKind::A: {
      for (int i = 0; i <= a.rank_; ++i)
        r.v_[static_cast<std::size_t>(i)] = a.v_[static_cast<std::size_t>(b.v_[static_cast<std::size_t>(i)] - 1)];
      break;
    }
    case GraphKind::D: {
      for (int i = 0; i < a.rank_; ++i) {
        std::int16_t bi = b.v_[static_cast<std::size_t>(i)];
        std::int16_t img = a.v_[static_cast<std::size_t>(std::abs(bi) - 1)];
        r.v_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(bi < 0 ? -img : img);
      }
      break;
    }
    case GraphKind::I2: {
      int m = a.order_;
      if (a.v_[1] == 0) {
        r.v_[0] = static_cast<std::int16_t>(mod(a.v_[0] + b.v_[0], m));
        r.v_[1] = b.v_[1];
      } else {
        r.v_[0] = static_cast<std::int16_t>(mod(a.v_[0] - b.v_[0], m));
        r.v_[1] = static_cast<std::int16_t>(1 - b.v_[1]);
      }
      break;
    }
    default:
      fail("unreachable");
  }
  return r;
}

CoxeterElement inverse(const CoxeterElement& a) {
  CoxeterElement r = a;
  switch (a.kind_) {
    case GraphKind::A: {
      for (int i = 0; i <= a.rank_; ++i)
        r.v_[static_cast<std::size_t>(a.v_[static_cast<std::size_t>(i)] - 1)] = static_cast<std::int16_t>(i + 1);
      break;
    }
    case GraphKind::D: {
      for (int i = 0; i < a.rank_; ++i) {
        std::int16_t ai = a.v_[static_cast<std::size_t>(i)];
        r.v_[static_cast<std::size_t>(std::abs(ai) - 1)] =
            static_cast<std::int16_t>(ai < 0 ? -(i + 1) : (i + 1));
      }
      break;
    }
    case GraphKind::I2: {
      if (a.v_[1] == 0) r.v_[0] = static_cast<std::int16_t>(mod(-a.v_[0], a.order_));
      break;  // reflections are involutions
    }
    default:
      fail("unreachable");
  }
  return r;
}

int length(const CoxeterElement& a) {
  switch (a.kind_) {
    case GraphKind::A: {
      int inv = 0;
      for (int i = 0; i <= a.rank_; ++i)
        for (int j = i + 1; j <= a.rank_; ++j)
          if (a.v_[static_cast<std::size_t>(i)] > a.v_[static_cast<std::size_t>(j)]) ++inv;
      return inv;
    }
    case GraphKind::D: {
      // counts the positive roots e_i - e_j and e_i + e_j (i < j) sent
      // to negative roots
      int len = 0;
      for (int i = 0; i < a.rank_; ++i)
        for (int j = i + 1; j < a.rank_; ++j) {
          std::int16_t u = a.v_[static_cast<std::size_t>(i)];
          std::int16_t w = a.v_[static_cast<std::size_t>(j)];
          if (std::abs(u) < std::abs(w)) {
            if (u < 0) len += 2;
          } else {
            len += 1;
          }
        }
      return len;
    }
    case GraphKind::I2: {
      int m = a.order_;
      int r = a.v_[0];
      if (a.v_[1] == 0) {
        if (r == 0) return 0;
        return std::min(2 * r, 2 * (m - r));
      }
      return std::min(2 * mod(-r, m) + 1, 2 * mod(r - 1, m) + 1);
    }
    default:
      return 0;
  }
}

bool has_left_descent(const CoxeterElement& a, int s) {
  if (s < 1 || s > a.rank_) fail("generator index out of range");
  switch (a.kind_) {
    case GraphKind::A: {
      // position of value s vs position of value s+1
      int ps = -1, pt = -1;
      for (int i = 0; i <= a.rank_; ++i) {
        if (a.v_[static_cast<std::size_t>(i)] == s) ps = i;
        if (a.v_[static_cast<std::size_t>(i)] == s + 1) pt = i;
      }
      return ps > pt;
    }
    case GraphKind::D: {
      int n = a.rank_;
      int vs = (s < n) ? s : n - 1;      // alpha_s = e_vs - e_{vs+1} or e_{n-1} + e_n
      int vt = (s < n) ? s + 1 : n;
      int ps = -1, pt = -1;
      bool sgn_s = false, sgn_t = false;
      for (int i = 0; i < n; ++i) {
        std::int16_t x = a.v_[static_cast<std::size_t>(i)];
        if (std::abs(x) == vs) { ps = i; sgn_s = x < 0; }
        if (std::abs(x) == vt) { pt = i; sgn_t = x < 0; }
      }
      if (s < n) return ps < pt ? sgn_s : !sgn_t;
      return ps < pt ? sgn_s : sgn_t;
    }
    case GraphKind::I2:
      return length(multiply(generator_like(a, s), a)) < length(a);
    default:
      fail("unreachable");
  }
}

bool has_right_descent(const CoxeterElement& a, int s) {
  if (s < 1 || s > a.rank_) fail("generator index out of range");
  switch (a.kind_) {
    case GraphKind::A:
      return a.v_[static_cast<std::size_t>(s - 1)] > a.v_[static_cast<std::size_t>(s)];
    case GraphKind::D: {
      int n = a.rank_;
      if (s < n) {
        std::int16_t u = a.v_[static_cast<std::size_t>(s - 1)];
        std::int16_t w = a.v_[static_cast<std::size_t>(s)];
        return std::abs(u) < std::abs(w) ? u < 0 : w > 0;
      }
      std::int16_t u = a.v_[static_cast<std::size_t>(n - 2)];
      std::int16_t w = a.v_[static_cast<std::size_t>(n - 1)];
      return std::abs(u) < std::abs(w) ? u < 0 : w < 0;
    }
    case GraphKind::I2:
      return has_left_descent(inverse(a), s);
    default:
      fail("unreachable");
  }
}

std::vector<int> left_descents(const CoxeterElement& a) {
  std::vector<int> out;
  for (int s = 1; s <= a.rank(); ++s)
    if (has_left_descent(a, s)) out.push_back(s);
  return out;
}

CoxeterElement longest_element(const CoxeterGraph& g) {
  CoxeterElement e = identity_element(g);
  switch (g.kind()) {
    case GraphKind::A: {
      int n = g.rank();
      for (int i = 0; i <= n; ++i) e.v_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(n + 1 - i);
      break;
    }
    case GraphKind::D: {
      int n = g.rank();
      if (n % 2 == 0) {
        for (int i = 0; i < n; ++i) e.v_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(-(i + 1));
      } else {
        for (int i = 0; i + 1 < n; ++i) e.v_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(-(i + 1));
        e.v_[static_cast<std::size_t>(n - 1)] = static_cast<std::int16_t>(n);
      }
      break;
    }
    case GraphKind::I2: {
      int m = g.dihedral_label();
      if (m % 2 == 0) {
        e.v_[0] = static_cast<std::int16_t>(m / 2);
        e.v_[1] = 0;
      } else {
        e.v_[0] = static_cast<std::int16_t>((m + 1) / 2);
        e.v_[1] = 1;
      }
      break;
    }
    default:
      fail("longest element requires a catalog graph");
  }
  return e;
}

int element_order(const CoxeterElement& a) {
  if (a.is_identity()) return 1;
  CoxeterElement p = a;
  int k = 1;
  while (!p.is_identity()) {
    p = multiply(p, a);
    ++k;
    if (k > 1'000'000) fail("element order did not terminate");
  }
  return k;
}

int coxeter_number(const CoxeterGraph& g) {
  if (!g.is_catalog()) fail("Coxeter number requires a catalog graph (A, D or I2)");
  CoxeterElement c = identity_element(g);
  for (int s = 1; s <= g.rank(); ++s) c = multiply(c, generator(g, s));
  return element_order(c);
}

std::size_t ElementHash::operator()(const CoxeterElement& a) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::size_t>(a.kind()));
  mix(static_cast<std::size_t>(a.rank()));
  mix(static_cast<std::size_t>(a.dihedral_label()));
  for (int i = 0; i <= kMaxRank; ++i) mix(static_cast<std::size_t>(static_cast<std::uint16_t>(a.slot(i))));
  return h;
}

}  // namespace artin
