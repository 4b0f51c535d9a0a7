#ifndef TESTS_HELPERS_HPP_
#define TESTS_HELPERS_HPP_

#include <random>
#include <string>
#include <vector>

#include "fg/stallings.hpp"
#include "fg/words.hpp"

namespace testutil {

inline fg::Word w(const std::string& s, int rank = 3) {
  return fg::parse_word(s, rank);
}

inline fg::StallingsGraph sub(int rank, const std::vector<std::string>& gens) {
  std::vector<fg::Word> words;
  for (const auto& g : gens) words.push_back(fg::parse_word(g, rank));
  return fg::StallingsGraph::build(rank, words);
}

inline fg::Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> arc(0, 2 * rank - 1);
  std::vector<fg::Letter> letters;
  while (static_cast<int>(letters.size()) < len) {
    fg::Letter l = fg::Letter::from_arc(arc(rng));
    if (!letters.empty() && l == letters.back().inverse()) continue;
    letters.push_back(l);
  }
  return fg::Word(std::move(letters));
}

// A random subgroup with at most max_gens generators of length <= max_len.
inline fg::StallingsGraph random_subgroup(std::mt19937_64& rng, int rank,
                                          int max_gens, int max_len) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::uniform_int_distribution<int> len(1, max_len);
  std::vector<fg::Word> gens;
  int n = count(rng);
  for (int i = 0; i < n; ++i) gens.push_back(random_word(rng, rank, len(rng)));
  return fg::StallingsGraph::build(rank, gens);
}

}  // namespace testutil

#endif  // TESTS_HELPERS_HPP_
