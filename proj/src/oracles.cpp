#include "fg/oracles.hpp"

#include <queue>
#include <random>
#include <set>

#include "fg/errors.hpp"
#include "fg/lattice.hpp"
#include "fg/whitehead.hpp"

namespace fg {

bool oracle_free_factor(const StallingsGraph& l, const StallingsGraph& k,
                        std::size_t length_budget) {
  Tuple start = rewrite_over(l, k);
  if (start.empty()) return true;
  if (total_length(start) > length_budget) {
    throw BudgetExceeded("rewritten tuple exceeds the oracle length budget");
  }
  int rank = k.subgroup_rank();
  std::size_t cap = total_length(start);
  std::set<Tuple> seen;
  std::queue<Tuple> frontier;
  seen.insert(start);
  frontier.push(start);
  while (!frontier.empty()) {
    Tuple t = frontier.front();
    frontier.pop();
    if (total_length(t) == t.size() && is_distinct_letter_tuple(t)) {
      return true;
    }
    for (const WhiteheadAutomorphism& m : enumerate_whitehead(rank)) {
      Tuple t2 = apply_move(m, t);
      if (total_length(t2) > cap) continue;
      if (seen.insert(t2).second) frontier.push(t2);
    }
  }
  return false;
}

std::optional<RootWitness> oracle_root_search(const StallingsGraph& h,
                                              int max_len, int max_exp) {
  // shortest-first scan of all reduced words
  std::queue<Word> frontier;
  frontier.push(Word());
  while (!frontier.empty()) {
    Word x = frontier.front();
    frontier.pop();
    if (!x.empty() && !h.contains(x)) {
      for (int d = 2; d <= max_exp; ++d) {
        if (h.contains(power(x, d))) return RootWitness{x, d};
      }
    }
    if (static_cast<int>(x.length()) == max_len) continue;
    for (int arc = 0; arc < 2 * h.rank(); ++arc) {
      Letter l = Letter::from_arc(arc);
      if (!x.empty() && l == x.letters().back().inverse()) continue;
      std::vector<Letter> letters = x.letters();
      letters.push_back(l);
      frontier.push(Word(std::move(letters)));
    }
  }
  return std::nullopt;
}

bool oracle_fringe_is_takahasi(const StallingsGraph& h, int trials,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SubgroupSet principal = fringe(h);
  auto random_word = [&](int len) {
    std::vector<Letter> letters;
    std::uniform_int_distribution<int> arc_dist(0, 2 * h.rank() - 1);
    while (static_cast<int>(letters.size()) < len) {
      Letter l = Letter::from_arc(arc_dist(rng));
      if (!letters.empty() && l == letters.back().inverse()) continue;
      letters.push_back(l);
    }
    return Word(std::move(letters));
  };
  std::uniform_int_distribution<int> count_dist(1, 2);
  std::uniform_int_distribution<int> len_dist(1, 6);
  for (int t = 0; t < trials; ++t) {
    std::vector<Word> extra;
    int count = count_dist(rng);
    for (int i = 0; i < count; ++i) extra.push_back(random_word(len_dist(rng)));
    StallingsGraph k = join(h, StallingsGraph::build(h.rank(), extra));
    StallingsGraph factor = takahasi_factor(h, k);
    if (!principal.contains(factor)) return false;
    if (!is_free_factor(factor, k)) return false;
  }
  return true;
}

}  // namespace fg
