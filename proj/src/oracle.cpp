#include "artin/oracle.hpp"

#include <deque>
#include <unordered_set>
#include <vector>

namespace artin {

namespace {

struct WordHash {
  std::size_t operator()(const std::vector<int>& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : w) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// The single rewrite available at position i, if any: the alternating
// block prod(s,t;m_st) starting at i flips to prod(t,s;m_st).
bool rewrite_at(const CoxeterGraph& g, const std::vector<int>& w, std::size_t i,
                std::vector<int>& out) {
  if (i + 1 >= w.size()) return false;
  int s = w[i], t = w[i + 1];
  if (s == t) return false;
  int m = g.label(s, t);
  if (m == kNoRelation) return false;
  if (i + static_cast<std::size_t>(m) > w.size()) return false;
  for (int j = 0; j < m; ++j)
    if (w[i + static_cast<std::size_t>(j)] != (j % 2 == 0 ? s : t)) return false;
  out = w;
  for (int j = 0; j < m; ++j) out[i + static_cast<std::size_t>(j)] = (j % 2 == 0 ? t : s);
  return true;
}

}  // namespace

// TODO: meeting in the middle (closing u and v simultaneously) would cut
// the explored class size roughly to its square root; single-sided search
// already covers every word the harness feeds in, so not done yet.
OracleResult brute_force_equal(const PositiveWord& u, const PositiveWord& v,
                               std::size_t node_budget) {
  require_same_graph(u, v);
  if (u.size() != v.size()) return OracleResult::not_equal;
  const CoxeterGraph& g = u.graph();
  const std::vector<int>& target = v.letters();
  if (u.letters() == target) return OracleResult::equal;

  std::unordered_set<std::vector<int>, WordHash> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(u.letters());
  queue.push_back(u.letters());
  std::vector<int> next;
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!rewrite_at(g, cur, i, next)) continue;
      if (seen.contains(next)) continue;
      if (next == target) return OracleResult::equal;
      if (seen.size() >= node_budget) return OracleResult::budget_exceeded;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return OracleResult::not_equal;
}

}  // namespace artin
