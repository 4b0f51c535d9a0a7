#include "fg/words.hpp"

#include <algorithm>
#include <cctype>

namespace fg {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

int Word::max_gen() const {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, l.gen);
  return m;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  for (Letter l : v.letters()) push_reduced(out, l);
  return Word(std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word power(const Word& u, int n) {
  Word base = n < 0 ? invert(u) : u;
  int k = n < 0 ? -n : n;
  Word acc;
  for (int i = 0; i < k; ++i) acc = multiply(acc, base);
  return acc;
}

bool is_cyclically_reduced(const Word& u) {
  if (u.length() < 2) return true;
  return u.letters().front() != u.letters().back().inverse();
}

CyclicForm cyclic_reduce(const Word& u) {
  const auto& ls = u.letters();
  std::size_t i = 0, j = ls.size();
  while (j - i >= 2 && ls[i] == ls[j - 1].inverse()) {
    ++i;
    --j;
  }
  CyclicForm f;
  f.conjugator = Word(std::vector<Letter>(ls.begin(), ls.begin() + i));
  f.core = Word(std::vector<Letter>(ls.begin() + i, ls.begin() + j));
  return f;
}

Endomorphism Endomorphism::identity(int rank) {
  Endomorphism e;
  e.rank = rank;
  for (int g = 0; g < rank; ++g) e.images.emplace_back(Letter(g, true));
  return e;
}

Word apply_endomorphism(const Endomorphism& e, const Word& u) {
  if (u.max_gen() >= e.rank) {
    throw RankMismatch("word uses a generator outside the endomorphism rank");
  }
  Word out;
  for (Letter l : u.letters()) {
    const Word& img = e.images[static_cast<std::size_t>(l.gen)];
    out = multiply(out, l.positive ? img : invert(img));
  }
  return out;
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  Endomorphism h;
  h.rank = g.rank;
  h.images.reserve(g.images.size());
  for (const Word& w : g.images) h.images.push_back(apply_endomorphism(f, w));
  return h;
}

Word parse_word(const std::string& text, int rank) {
  std::vector<Letter> out;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    int g;
    bool pos;
    if (c >= 'a' && c <= 'z') {
      g = c - 'a';
      pos = true;
    } else if (c >= 'A' && c <= 'Z') {
      g = c - 'A';
      pos = false;
    } else {
      throw ParseError(std::string("invalid character in word: '") + c + "'");
    }
    if (g >= rank) {
      throw ParseError(std::string("generator '") + c +
                       "' outside alphabet of rank " + std::to_string(rank));
    }
    out.emplace_back(g, pos);
  }
  return Word(std::move(out));
}

std::string to_string(Letter l) {
  if (l.gen < 26) {
    char c = static_cast<char>((l.positive ? 'a' : 'A') + l.gen);
    return std::string(1, c);
  }
  // no single-character form beyond rank 26
  return (l.positive ? "x" : "X") + std::to_string(l.gen);
}

std::string to_string(const Word& u) {
  std::string s;
  for (Letter l : u.letters()) s += to_string(l);
  return s;
}

}  // namespace fg
