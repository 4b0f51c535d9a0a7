#ifndef FG_WHITEHEAD_TYPES_HPP_
#define FG_WHITEHEAD_TYPES_HPP_

#include <compare>
#include <vector>

#include "fg/words.hpp"

namespace fg {

// How a type II move treats a generator x relative to the multiplier m:
// x, m*x, x*m^-1 or m*x*m^-1.
enum class WhiteheadAction { kFix, kLeft, kRight, kConjugate };

// An elementary basis transformation of F(rank). Type I moves are signed
// permutations of the generators; type II moves fix the multiplier's
// generator and act on every other generator by one of the four actions.
struct WhiteheadAutomorphism {
  enum class Kind { kTypeI, kTypeII };

  Kind kind = Kind::kTypeI;
  int rank = 0;

  // type I: generator i maps to the letter (perm[i], positive[i])
  std::vector<int> perm;
  std::vector<bool> positive;

  // type II
  Letter multiplier{0, true};
  std::vector<WhiteheadAction> actions;  // one per generator; kFix at the
                                         // multiplier's generator

  static WhiteheadAutomorphism type_one(std::vector<int> perm,
                                        std::vector<bool> positive);
  static WhiteheadAutomorphism type_two(int rank, Letter multiplier,
                                        std::vector<WhiteheadAction> actions);

  WhiteheadAutomorphism inverse() const;
  Endomorphism to_endomorphism() const;

  friend bool operator==(const WhiteheadAutomorphism&,
                         const WhiteheadAutomorphism&) = default;
};

// Composite of a move sequence applied first to last:
// composite({m1, .., mn}) = mn o .. o m1.
Endomorphism composite(const std::vector<WhiteheadAutomorphism>& moves);

}  // namespace fg

#endif  // FG_WHITEHEAD_TYPES_HPP_
