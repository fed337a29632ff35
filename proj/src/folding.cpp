#include "artin/folding.hpp"

#include <algorithm>
#include <stdexcept>

#include "artin/normal_form.hpp"

namespace artin {

namespace {

bool is_edge(const CoxeterGraph& g, int s, int t) {
  int m = g.label(s, t);
  return m >= 3 || m == kNoRelation;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> bipartition(const CoxeterGraph& g) {
  int n = g.rank();
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> stack{1};
  color[1] = 0;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 1; w <= n; ++w) {
      if (w == v || !is_edge(g, v, w)) continue;
      if (color[static_cast<std::size_t>(w)] == -1) {
        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
        stack.push_back(w);
        ++visited;
      } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("bipartition: graph contains an odd cycle");
      }
    }
  }
  if (visited != n) throw std::invalid_argument("bipartition: graph is not connected");
  std::vector<int> part0, part1;
  for (int v = 1; v <= n; ++v)
    (color[static_cast<std::size_t>(v)] == 0 ? part0 : part1).push_back(v);
  if (part0.empty() || part1.empty())
    throw std::invalid_argument("bipartition: both parts must be nonempty for a folding");
  return {part0, part1};
}

Folding dihedral_folding(const CoxeterGraph& source, bool flipped) {
  if (source.kind() != GraphKind::A && source.kind() != GraphKind::D)
    throw std::invalid_argument("dihedral foldings are defined for catalog A and D graphs");
  if (source.kind() == GraphKind::A && source.rank() < 2)
    throw std::invalid_argument("A_1 has Coxeter number 2; no dihedral target exists");
  auto [ks, kt] = bipartition(source);
  if (flipped) std::swap(ks, kt);
  Folding f{source, coxeter_number(source), std::move(ks), std::move(kt), flipped};
  for (const auto& part : {f.part_s, f.part_t})
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (is_edge(source, part[i], part[j]))
          throw std::logic_error("folding parts are not independent sets");
  return f;
}

std::pair<PositiveWord, PositiveWord> lcm_hom_images(const Folding& f) {
  return {delta_commuting(f.source, f.part_s), delta_commuting(f.source, f.part_t)};
}

FoldingReport verify_lcm_hom(const Folding& f) {
  auto [x, y] = lcm_hom_images(f);
  int h = f.target_label;
  PositiveWord common = prod_word(x, y, h);
  bool relation = words_equal(common, prod_word(y, x, h));
  bool divisible = word_divides(x, common) && word_divides(y, common);
  std::optional<int> shorter;
  for (int r = 1; r < h; ++r) {
    if (words_equal(prod_word(x, y, r), prod_word(y, x, r))) {
      shorter = r;
      break;
    }
  }
  return FoldingReport{f.source, h, std::move(x), std::move(y), relation, divisible, shorter};
}

}  // namespace artin
