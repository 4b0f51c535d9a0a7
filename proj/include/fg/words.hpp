#ifndef FG_WORDS_HPP_
#define FG_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fg/errors.hpp"

namespace fg {

// A signed generator: `gen` is a 0-based index into the ambient alphabet,
// `positive` distinguishes a from a^-1.
struct Letter {
  int gen = 0;
  bool positive = true;

  Letter() = default;
  Letter(int g, bool pos) : gen(g), positive(pos) {}

  Letter inverse() const { return Letter(gen, !positive); }

  // Arc encoding 2*gen + (inverse ? 1 : 0), used throughout the graph code.
  int arc() const { return 2 * gen + (positive ? 0 : 1); }
  static Letter from_arc(int a) { return Letter(a / 2, a % 2 == 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& x, const Letter& y) {
    return x.arc() <=> y.arc();
  }
};

// A freely reduced word; the empty word is the identity. Reduction is
// performed eagerly at construction, so a Word is always reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  explicit Word(Letter l) : letters_{l} {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_gen() const;  // -1 for the empty word

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& u, const Word& v) {
    return u.letters_ <=> v.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, int n);

// u = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicForm {
  Word conjugator;
  Word core;
};
CyclicForm cyclic_reduce(const Word& u);

bool is_cyclically_reduced(const Word& u);

// An endomorphism of F(rank), given by the images of the generators.
struct Endomorphism {
  int rank = 0;
  std::vector<Word> images;

  static Endomorphism identity(int rank);
};

Word apply_endomorphism(const Endomorphism& e, const Word& u);

// compose(f, g) maps u to f(g(u)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

// Text form: a..z are generators 0..25, A..Z their inverses.
Word parse_word(const std::string& text, int rank);
std::string to_string(const Word& u);
std::string to_string(Letter l);

}  // namespace fg

#endif  // FG_WORDS_HPP_
