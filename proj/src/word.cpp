#include "artin/word.hpp"

#include <sstream>
#include <stdexcept>

namespace artin {

PositiveWord::PositiveWord(CoxeterGraph graph, std::vector<int> letters)
    : graph_(std::move(graph)), letters_(std::move(letters)) {
  for (int s : letters_)
    if (s < 1 || s > graph_.rank())
      throw std::invalid_argument("word letter " + std::to_string(s) + " outside graph rank " +
                                  std::to_string(graph_.rank()));
}

PositiveWord PositiveWord::parse(CoxeterGraph graph, std::string_view text) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  int s = 0;
  while (in >> s) letters.push_back(s);
  if (!in.eof()) throw std::invalid_argument("word literal must be whitespace-separated integers");
  return PositiveWord(std::move(graph), std::move(letters));
}

std::string PositiveWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

PositiveWord PositiveWord::operator*(const PositiveWord& rhs) const {
  require_same_graph(*this, rhs);
  std::vector<int> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return PositiveWord(graph_, std::move(letters));
}

PositiveWord prod_word(const PositiveWord& a, const PositiveWord& b, int l) {
  require_same_graph(a, b);
  if (l < 1) throw std::invalid_argument("prod_word requires l >= 1");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>((l + 1) / 2) * a.size() +
                  static_cast<std::size_t>(l / 2) * b.size());
  for (int i = 0; i < l; ++i) {
    const auto& src = (i % 2 == 0) ? a.letters() : b.letters();
    letters.insert(letters.end(), src.begin(), src.end());
  }
  return PositiveWord(a.graph(), std::move(letters));
}

void require_same_graph(const PositiveWord& u, const PositiveWord& v) {
  if (!(u.graph() == v.graph())) throw std::invalid_argument("words belong to different graphs");
}

}  // namespace artin
