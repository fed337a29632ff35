#include "artin/normal_form.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace artin {

namespace {

void require_normal_form_graph(const CoxeterGraph& g) {
  if (!g.is_catalog())
    throw std::invalid_argument(
        "normal forms are only defined for catalog graphs (A, D, I2); "
        "custom graphs support monoid rewriting only");
}

}  // namespace

NormalForm::NormalForm(CoxeterGraph graph) : graph_(std::move(graph)) {
  require_normal_form_graph(graph_);
}

NormalForm NormalForm::of(const PositiveWord& w) {
  NormalForm nf(w.graph());
  for (int s : w.letters()) nf.append(s);
  return nf;
}

void NormalForm::append(int letter) {
  CoxeterElement g = generator(graph_, letter);
  ++letter_count_;
  if (factors_.empty()) {
    factors_.push_back(g);
    return;
  }
  if (!has_right_descent(factors_.back(), letter)) {
    factors_.back() = multiply(factors_.back(), g);
    fix_from(factors_.size() - 1);
  } else {
    // the pair (back, g) is already left-weighted: D_L(g) = {letter} and
    // letter is a right descent of back
    factors_.push_back(g);
  }
}

void NormalForm::append(const PositiveWord& w) {
  if (!(w.graph() == graph_)) throw std::invalid_argument("word graph mismatch");
  for (int s : w.letters()) append(s);
}

// Restores the left-weighted condition by sliding descents of factor j
// into factor j-1 until every adjacent pair is locally maximal.
void NormalForm::fix_from(std::size_t pair_index) {
  std::deque<std::size_t> dirty{pair_index};
  int rank = graph_.rank();
  while (!dirty.empty()) {
    std::size_t j = dirty.front();
    dirty.pop_front();
    if (j == 0 || j >= factors_.size()) continue;
    CoxeterElement& p = factors_[j - 1];
    CoxeterElement& q = factors_[j];
    bool moved = false;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int s = 1; s <= rank; ++s) {
        if (has_left_descent(q, s) && !has_right_descent(p, s)) {
          CoxeterElement g = generator(graph_, s);
          p = multiply(p, g);
          q = multiply(g, q);
          moved = true;
          progress = !q.is_identity();
          if (!progress) break;
        }
      }
    }
    if (moved) {
      if (factors_[j].is_identity()) {
        factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(j));
        dirty.push_back(j);  // the pair that slid into position j
      } else {
        dirty.push_back(j + 1);
      }
      dirty.push_back(j - 1);
    }
  }
}

PositiveWord NormalForm::word() const {
  std::vector<int> letters;
  letters.reserve(letter_count_);
  for (const CoxeterElement& f : factors_) {
    std::vector<int> w = reduced_word(f);
    letters.insert(letters.end(), w.begin(), w.end());
  }
  return PositiveWord(graph_, std::move(letters));
}

bool NormalForm::strip_left(int s) {
  if (factors_.empty()) return false;
  if (!has_left_descent(factors_.front(), s)) return false;
  factors_.front() = multiply(generator(graph_, s), factors_.front());
  --letter_count_;
  if (factors_.front().is_identity()) {
    factors_.erase(factors_.begin());
  }
  // the shrunken head may have lost right descents needed by factor 1
  fix_from(1);
  return true;
}

bool NormalForm::is_left_weighted() const {
  int rank = graph_.rank();
  for (const CoxeterElement& f : factors_)
    if (f.is_identity()) return false;
  for (std::size_t j = 1; j < factors_.size(); ++j)
    for (int s = 1; s <= rank; ++s)
      if (has_left_descent(factors_[j], s) && !has_right_descent(factors_[j - 1], s))
        return false;
  return true;
}

bool words_equal(const PositiveWord& u, const PositiveWord& v) {
  require_same_graph(u, v);
  require_normal_form_graph(u.graph());
  if (u.size() != v.size()) return false;  // relations are length-homogeneous
  return NormalForm::of(u) == NormalForm::of(v);
}

bool left_divides(int s, const PositiveWord& w) {
  require_normal_form_graph(w.graph());
  if (s < 1 || s > w.graph().rank()) throw std::invalid_argument("generator index out of range");
  NormalForm nf = NormalForm::of(w);
  if (nf.is_identity()) return false;
  return has_left_descent(nf.factors().front(), s);
}

std::optional<PositiveWord> left_quotient(const PositiveWord& u, const PositiveWord& w) {
  require_same_graph(u, w);
  require_normal_form_graph(u.graph());
  NormalForm nf = NormalForm::of(w);
  for (int s : u.letters())
    if (!nf.strip_left(s)) return std::nullopt;
  return nf.word();
}

bool word_divides(const PositiveWord& u, const PositiveWord& w) {
  return left_quotient(u, w).has_value();
}

std::vector<int> reduced_word(const CoxeterElement& a) {
  std::vector<int> letters;
  CoxeterElement cur = a;
  while (!cur.is_identity()) {
    int s = 0;
    for (int i = 1; i <= cur.rank(); ++i)
      if (has_left_descent(cur, i)) {
        s = i;
        break;
      }
    if (s == 0) throw std::logic_error("nonidentity element with no left descent");
    letters.push_back(s);
    cur = multiply(generator_like(cur, s), cur);
  }
  return letters;
}

// Greatest common prefix of two square-free elements: strip any shared
// left descent until none remains.
CoxeterElement simple_meet(const CoxeterElement& a, const CoxeterElement& b) {
  CoxeterElement x = a, y = b;
  std::vector<int> prefix;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int s = 1; s <= x.rank(); ++s) {
      if (has_left_descent(x, s) && has_left_descent(y, s)) {
        CoxeterElement g = generator_like(x, s);
        x = multiply(g, x);
        y = multiply(g, y);
        prefix.push_back(s);
        progress = true;
        break;
      }
    }
  }
  CoxeterElement meet = multiply(a, inverse(a));  // identity in a's group
  for (int s : prefix) meet = multiply(meet, generator_like(a, s));
  return meet;
}

// Join in the prefix order via the antiautomorphism x -> w0 * x.
CoxeterElement simple_join(const CoxeterGraph& g, const CoxeterElement& a, const CoxeterElement& b) {
  CoxeterElement w0 = longest_element(g);
  return multiply(w0, simple_meet(multiply(w0, a), multiply(w0, b)));
}

namespace {

// a \ b: the element with a * (a \ b) = join(a, b), length-additively.
CoxeterElement simple_complement(const CoxeterGraph& g, const CoxeterElement& a,
                                 const CoxeterElement& b) {
  return multiply(inverse(a), simple_join(g, a, b));
}

}  // namespace

PositiveWord lcm_pair(const PositiveWord& u, const PositiveWord& v) {
  require_same_graph(u, v);
  const CoxeterGraph& g = u.graph();
  if (!g.is_catalog())
    throw std::invalid_argument(
        "lcm_pair requires a catalog finite-type graph; custom graphs may "
        "lack common multiples (m_st = infinity)");
  if (u.empty()) return v;
  if (v.empty()) return u;

  // Reversing grid over square-free elements: rows are the letters of u,
  // columns the letters of v.  Each cell turns (west, north) into
  // (south, east) = (west \ north, north \ west); the bottom row then
  // spells u \ v, so lcm = u * (u \ v).
  std::vector<CoxeterElement> horiz;
  horiz.reserve(v.size());
  for (int t : v.letters()) horiz.push_back(generator(g, t));
  for (int s : u.letters()) {
    CoxeterElement west = generator(g, s);
    for (CoxeterElement& north : horiz) {
      CoxeterElement south = simple_complement(g, west, north);
      CoxeterElement east = simple_complement(g, north, west);
      north = south;
      west = east;
    }
  }
  std::vector<int> letters = u.letters();
  for (const CoxeterElement& f : horiz) {
    std::vector<int> w = reduced_word(f);
    letters.insert(letters.end(), w.begin(), w.end());
  }
  return PositiveWord(g, std::move(letters));
}

PositiveWord delta_commuting(const CoxeterGraph& g, const std::vector<int>& generators) {
  std::vector<int> t = generators;
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (t.empty()) throw std::invalid_argument("delta_commuting requires a nonempty generator set");
  for (int s : t)
    if (s < 1 || s > g.rank()) throw std::invalid_argument("generator index out of range");
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (g.label(t[i], t[j]) != 2)
        throw std::invalid_argument("delta_commuting: generators " + g.vertex_name(t[i]) + " and " +
                                    g.vertex_name(t[j]) + " do not commute");
  return PositiveWord(g, std::move(t));
}

PositiveWord reduction_step(int s, int t, const PositiveWord& x, const PositiveWord& y) {
  require_same_graph(x, y);
  const CoxeterGraph& g = x.graph();
  PositiveWord gs(g, {s});
  PositiveWord gt(g, {t});
  if (!words_equal(gs * x, gt * y))
    throw std::invalid_argument("reduction_step precondition s*X = t*Y fails");
  if (s == t) {
    // m_ss = 1, so the prefix is empty and W = X
    if (!words_equal(y, x))
      throw std::logic_error("reduction_step: witness verification failed");
    return x;
  }
  int m = g.label(s, t);
  if (m == kNoRelation)
    throw std::invalid_argument("reduction_step: m_st is infinite, no reduction exists");
  PositiveWord prefix_x = prod_word(gt, gs, m - 1);
  PositiveWord prefix_y = prod_word(gs, gt, m - 1);
  std::optional<PositiveWord> w = left_quotient(prefix_x, x);
  if (!w) throw std::logic_error("reduction_step: the guaranteed witness is missing");
  if (!words_equal(x, prefix_x * *w) || !words_equal(y, prefix_y * *w))
    throw std::logic_error("reduction_step: witness verification failed");
  return *w;
}

}  // namespace artin
