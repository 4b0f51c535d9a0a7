#ifndef FG_WHITEHEAD_HPP_
#define FG_WHITEHEAD_HPP_

#include <vector>

#include "fg/stallings.hpp"
#include "fg/whitehead_types.hpp"

namespace fg {

using Tuple = std::vector<Word>;

// The complete, duplicate-free list of Whitehead automorphisms of
// F(rank): all type I moves (identity included) followed by all
// non-identity type II moves. The list is cached per rank.
const std::vector<WhiteheadAutomorphism>& enumerate_whitehead(int rank);

Tuple apply_move(const WhiteheadAutomorphism& m, const Tuple& t);

std::size_t total_length(const Tuple& t);

struct MinimizationResult {
  Tuple tuple;
  std::size_t length = 0;
  std::vector<WhiteheadAutomorphism> trace;
};

// Greedy strict descent: repeatedly applies the first enumerated move
// that strictly decreases the total length, until none does.
MinimizationResult minimize_tuple(const Tuple& t, int rank);

// True iff the minimized tuple consists of single letters on pairwise
// distinct generators (up to sign); with minimal length = tuple size
// this witnesses a free basis of a free factor.
bool is_distinct_letter_tuple(const Tuple& t);

// Whitehead free-factor test: rewrites basis(L) over K's basis and
// minimizes; L is a free factor of K iff the minimum is rank(L) letters
// on distinct generators. Throws NotSubgroup if L is not contained in K.
bool is_free_factor(const StallingsGraph& l, const StallingsGraph& k);

// is_free_factor(<w>, K); throws NotMember / EmptyWord.
bool is_primitive(const Word& w, const StallingsGraph& k);

// basis(L) rewritten as abstract words over K's basis alphabet.
Tuple rewrite_over(const StallingsGraph& l, const StallingsGraph& k);

}  // namespace fg

#endif  // FG_WHITEHEAD_HPP_
