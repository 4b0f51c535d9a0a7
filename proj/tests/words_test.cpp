#include "doctest.h"

#include "fg/words.hpp"

#include <random>

#include "helpers.hpp"

using namespace fg;
using testutil::w;

TEST_CASE("multiply reduces freely") {
  CHECK(multiply(w("ab"), w("Ba")) == w("aa"));
  CHECK(multiply(w("a"), w("A")) == Word());
  CHECK(multiply(w("ab"), w("cb")) == w("abcb"));
}

TEST_CASE("construction reduces eagerly") {
  CHECK(w("abBA") == Word());
  CHECK(w("abBc") == w("ac"));
  CHECK(w("").empty());
}

TEST_CASE("invert") {
  CHECK(invert(w("ab")) == w("BA"));
  CHECK(invert(Word()) == Word());
  CHECK(invert(w("aBc")) == w("CbA"));
}

TEST_CASE("power") {
  CHECK(power(w("ab"), 3) == w("ababab"));
  CHECK(power(w("ab"), 0) == Word());
  CHECK(power(w("ab"), -2) == w("BABA"));
}

TEST_CASE("cyclic_reduce") {
  auto f1 = cyclic_reduce(w("abA"));
  CHECK(f1.conjugator == w("a"));
  CHECK(f1.core == w("b"));
  auto f2 = cyclic_reduce(w("ab"));
  CHECK(f2.conjugator.empty());
  CHECK(f2.core == w("ab"));
  auto f3 = cyclic_reduce(w("abbA"));
  CHECK(f3.conjugator == w("a"));
  CHECK(f3.core == w("bb"));
  CHECK(is_cyclically_reduced(w("ab")));
  CHECK(!is_cyclically_reduced(w("abA")));
}

TEST_CASE("apply_endomorphism") {
  Endomorphism e;
  e.rank = 3;
  e.images = {w("a"), w("ab"), w("acba")};
  CHECK(apply_endomorphism(e, w("b")) == w("ab"));
  CHECK(apply_endomorphism(e, w("c")) == w("acba"));
  CHECK(apply_endomorphism(Endomorphism::identity(3), w("abC")) == w("abC"));
  CHECK_THROWS_AS(apply_endomorphism(Endomorphism::identity(1), w("ab", 2)),
                  RankMismatch);
}

TEST_CASE("compose applies right then left") {
  Endomorphism f;
  f.rank = 2;
  f.images = {w("b", 2), w("a", 2)};
  Endomorphism g;
  g.rank = 2;
  g.images = {w("ab", 2), w("b", 2)};
  Endomorphism fg_ = compose(f, g);
  CHECK(fg_.images[0] == w("ba", 2));
}

TEST_CASE("parse and print") {
  CHECK(to_string(w("aBc")) == "aBc");
  CHECK_THROWS_AS(parse_word("a1b", 3), ParseError);
  CHECK_THROWS_AS(parse_word("d", 3), ParseError);
  CHECK(parse_word(" a b ", 2) == w("ab", 2));
}

TEST_CASE("algebra laws on random words") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Word u = testutil::random_word(rng, 3, i % 9);
    Word v = testutil::random_word(rng, 3, (i + 3) % 9);
    Word t = testutil::random_word(rng, 3, (i + 5) % 9);
    CHECK(multiply(multiply(u, v), t) == multiply(u, multiply(v, t)));
    CHECK(invert(invert(u)) == u);
    CHECK(multiply(u, invert(u)).empty());
    auto f = cyclic_reduce(u);
    CHECK(multiply(multiply(f.conjugator, f.core), invert(f.conjugator)) == u);
    CHECK(is_cyclically_reduced(f.core));
  }
}

TEST_CASE("endomorphisms are homomorphisms") {
  std::mt19937_64 rng(11);
  Endomorphism e;
  e.rank = 3;
  e.images = {w("a"), w("ab"), w("acba")};
  for (int i = 0; i < 200; ++i) {
    Word u = testutil::random_word(rng, 3, i % 7);
    Word v = testutil::random_word(rng, 3, (i + 2) % 7);
    CHECK(apply_endomorphism(e, multiply(u, v)) ==
          multiply(apply_endomorphism(e, u), apply_endomorphism(e, v)));
  }
}
