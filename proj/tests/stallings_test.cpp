#include "doctest.h"

#include "fg/stallings.hpp"

#include <algorithm>
#include <random>

#include "helpers.hpp"

using namespace fg;
using testutil::sub;
using testutil::w;

TEST_CASE("build golden graphs") {
  // <aba^-1, aca^-1>: a-edge into a vertex carrying b- and c-loops
  StallingsGraph g = sub(3, {"abA", "acA"});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.subgroup_rank() == 2);
  CHECK(g.next(0, 0) == 1);
  CHECK(g.next(1, 1) == 1);
  CHECK(g.next(1, 2) == 1);

  StallingsGraph h = sub(3, {"ab", "acba"});
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 5);
  CHECK(h.subgroup_rank() == 2);

  StallingsGraph a = sub(2, {"a"});
  CHECK(a.vertex_count() == 1);
  CHECK(a.edge_count() == 1);
}

TEST_CASE("build ignores generator order and redundancy") {
  CHECK(sub(2, {"a", "baB"}) == sub(2, {"baB", "a"}));
  CHECK(sub(2, {"a"}) != sub(2, {"aa"}));
  CHECK(sub(3, {"ab", "acba"}) == sub(3, {"ab", "BAacba"}));
  CHECK(sub(2, {"a", "", "b"}) == sub(2, {"a", "b"}));
  CHECK_THROWS_AS(StallingsGraph::build(2, {w("ac", 3)}), RankMismatch);
}

TEST_CASE("fold is idempotent and handles merges") {
  StallingsGraph g = sub(3, {"ab", "acba"});
  RawGraph raw;
  raw.rank = 3;
  raw.vertex_count = g.vertex_count();
  raw.edges = g.edges();
  CHECK(StallingsGraph::fold(raw) == g);

  // doubled a-loop folds to the bouquet
  RawGraph d;
  d.rank = 2;
  d.vertex_count = 2;
  d.edges = {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}};
  CHECK(StallingsGraph::fold(d) == StallingsGraph::bouquet(2));
}

TEST_CASE("trim removes hanging paths") {
  // a path a:0->1, b:1->2 has no loop; only the base survives
  RawGraph raw;
  raw.rank = 2;
  raw.vertex_count = 3;
  raw.edges = {{0, 0, 1}, {1, 1, 2}};
  CHECK(StallingsGraph::fold(raw) == StallingsGraph::trivial(2));
}

TEST_CASE("contains") {
  StallingsGraph g = sub(3, {"abA", "acA"});
  CHECK(g.contains(w("abcA")));
  CHECK(!g.contains(w("a")));
  CHECK(sub(3, {"ab", "acba"}).contains(w("ab")));
  CHECK(g.contains(Word()));
}

TEST_CASE("rank") {
  CHECK(sub(3, {"abA", "acA"}).subgroup_rank() == 2);
  CHECK(sub(3, {"ab", "ac", "aB", "aa"}).subgroup_rank() == 4);
  CHECK(StallingsGraph::bouquet(4).subgroup_rank() == 4);
  CHECK(StallingsGraph::trivial(2).subgroup_rank() == 0);
}

TEST_CASE("basis generates the same subgroup") {
  for (const StallingsGraph& g :
       {sub(3, {"abA", "acA"}), sub(2, {"a"}), sub(2, {"a", "bb", "baB"}),
        sub(3, {"ab", "acba"})}) {
    std::vector<Word> b = g.basis();
    CHECK(static_cast<int>(b.size()) == g.subgroup_rank());
    CHECK(StallingsGraph::build(g.rank(), b) == g);
    for (const Word& u : b) CHECK(g.contains(u));
  }
}

TEST_CASE("express rewrites over the basis") {
  StallingsGraph g = sub(2, {"a", "baB"});
  std::vector<Word> b = g.basis();
  // substituting basis words back reproduces the input
  auto evaluate = [&](const Word& abstract) {
    Word out;
    for (Letter l : abstract.letters()) {
      const Word& img = b[static_cast<std::size_t>(l.gen)];
      out = multiply(out, l.positive ? img : invert(img));
    }
    return out;
  };
  Word input = multiply(w("a", 2), w("baB", 2));
  CHECK(evaluate(g.express(input)) == input);
  CHECK(g.express(b[0]) == Word(Letter(0, true)));
  CHECK(g.express(Word()).empty());
  CHECK_THROWS_AS(g.express(w("b", 2)), NotMember);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    // random product of basis words is a member; express must round-trip
    Word u;
    for (int j = 0; j < 4; ++j) {
      Word gen = b[rng() % b.size()];
      u = multiply(u, rng() % 2 ? gen : invert(gen));
    }
    CHECK(g.contains(u));
    CHECK(evaluate(g.express(u)) == u);
  }
}

TEST_CASE("index") {
  CHECK(sub(2, {"a", "bb", "baB"}).index() == 2);
  CHECK(StallingsGraph::bouquet(3).index() == 1);
  CHECK(!sub(2, {"a"}).index().has_value());
}

TEST_CASE("index formula") {
  StallingsGraph g = sub(2, {"a", "bb", "baB"});
  auto idx = g.index();
  REQUIRE(idx.has_value());
  CHECK(g.subgroup_rank() == *idx * (g.rank() - 1) + 1);
}

TEST_CASE("leq") {
  CHECK(leq(sub(3, {"ab", "acba"}), sub(3, {"ab", "ac", "ba"})).has_value());
  StallingsGraph h = sub(3, {"ab", "acba"});
  auto self = leq(h, h);
  REQUIRE(self.has_value());
  for (int v = 0; v < h.vertex_count(); ++v) {
    CHECK(self->vertex_map[static_cast<std::size_t>(v)] == v);
  }
  CHECK(!leq(sub(2, {"a"}), sub(2, {"ab"})).has_value());
}

TEST_CASE("leq agrees with basis membership") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    StallingsGraph h = testutil::random_subgroup(rng, 2, 2, 5);
    StallingsGraph k = testutil::random_subgroup(rng, 2, 3, 5);
    bool by_basis = true;
    for (const Word& u : h.basis()) by_basis = by_basis && k.contains(u);
    CHECK(leq(h, k).has_value() == by_basis);
  }
}

TEST_CASE("quotient") {
  StallingsGraph h = sub(3, {"ab", "acba"});
  // canonical numbering: 0=base, 1=a(base), 2=a^-1(base), 3=ac(base)
  CHECK(quotient(h, {{{0, 3}}}) == sub(3, {"ab", "ac", "ba"}));
  CHECK(quotient(h, {{{0, 3}, {1, 2}}}) == sub(3, {"ab", "ac", "aB", "aa"}));
  CHECK(quotient(h, {{}}) == h);
  for (int v = 0; v < h.vertex_count(); ++v) {
    for (int u = v + 1; u < h.vertex_count(); ++u) {
      CHECK(leq(h, quotient(h, {{{v, u}}})).has_value());
    }
  }
}

TEST_CASE("subgroup_image") {
  Endomorphism e;
  e.rank = 3;
  e.images = {w("a"), w("ab"), w("acba")};
  CHECK(subgroup_image(e, sub(3, {"b", "c"})) == sub(3, {"ab", "acba"}));
  CHECK(subgroup_image(Endomorphism::identity(3), sub(3, {"ab", "acba"})) ==
        sub(3, {"ab", "acba"}));
  Endomorphism swap;
  swap.rank = 2;
  swap.images = {w("b", 2), w("a", 2)};
  CHECK(subgroup_image(swap, sub(2, {"a"})) == sub(2, {"b"}));
}

TEST_CASE("is_surjective_endomorphism") {
  Endomorphism e1{2, {w("a", 2), w("ab", 2)}};
  CHECK(is_surjective_endomorphism(e1));
  Endomorphism e2{2, {w("a", 2), w("a", 2)}};
  CHECK(!is_surjective_endomorphism(e2));
  Endomorphism e3{2, {w("aa", 2), w("b", 2)}};
  CHECK(!is_surjective_endomorphism(e3));
}

TEST_CASE("folding confluence under shuffles") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    StallingsGraph ref = testutil::random_subgroup(rng, 3, 3, 6);
    std::vector<Word> gens = ref.basis();
    RawGraph raw;
    raw.rank = 3;
    raw.vertex_count = 1;
    for (const Word& u : gens) {
      int prev = 0;
      const auto& ls = u.letters();
      for (std::size_t i = 0; i < ls.size(); ++i) {
        int next = (i + 1 == ls.size()) ? 0 : raw.vertex_count++;
        if (ls[i].positive) {
          raw.edges.push_back({prev, ls[i].gen, next});
        } else {
          raw.edges.push_back({next, ls[i].gen, prev});
        }
        prev = next;
      }
    }
    std::shuffle(raw.edges.begin(), raw.edges.end(), rng);
    CHECK(StallingsGraph::fold(raw) == ref);
  }
}

TEST_CASE("membership closed under products") {
  std::mt19937_64 rng(29);
  StallingsGraph g = sub(3, {"ab", "acba"});
  std::vector<Word> b = g.basis();
  for (int i = 0; i < 200; ++i) {
    Word u, v;
    for (int j = 0; j < 3; ++j) {
      u = multiply(u, rng() % 2 ? b[rng() % b.size()]
                                : invert(b[rng() % b.size()]));
      v = multiply(v, rng() % 2 ? b[rng() % b.size()]
                                : invert(b[rng() % b.size()]));
    }
    CHECK(g.contains(multiply(u, invert(v))));
  }
}
