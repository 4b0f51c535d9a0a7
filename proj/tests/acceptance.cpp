// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fg/algext.hpp"
#include "fg/lattice.hpp"
#include "fg/oracles.hpp"
#include "fg/properties.hpp"
#include "fg/whitehead.hpp"

using namespace fg;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << number << ": " << name
            << std::endl;
  if (!ok) ++failures;
}

Word w(const std::string& s, int rank = 3) { return parse_word(s, rank); }

StallingsGraph sub(int rank, const std::vector<std::string>& gens) {
  std::vector<Word> words;
  for (const auto& g : gens) words.push_back(parse_word(g, rank));
  return StallingsGraph::build(rank, words);
}

Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> arc(0, 2 * rank - 1);
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < len) {
    Letter l = Letter::from_arc(arc(rng));
    if (!letters.empty() && l == letters.back().inverse()) continue;
    letters.push_back(l);
  }
  return Word(std::move(letters));
}

// Up to 3 generators of length up to 6 over rank 2 or 3; resampled until
// the graph is small enough for the exhaustive sub-procedures.
StallingsGraph random_subgroup(std::mt19937_64& rng, int max_vertices) {
  for (;;) {
    int rank = 2 + static_cast<int>(rng() % 2);
    int n = 1 + static_cast<int>(rng() % 3);
    std::vector<Word> gens;
    for (int i = 0; i < n; ++i) {
      gens.push_back(random_word(rng, rank, 1 + static_cast<int>(rng() % 6)));
    }
    StallingsGraph g = StallingsGraph::build(rank, gens);
    if (g.vertex_count() <= max_vertices && g.subgroup_rank() >= 1) return g;
  }
}

bool criterion_fringe() {
  StallingsGraph h = sub(3, {"ab", "acba"});
  SubgroupSet f = fringe(h);
  // the six quotient graphs; the third one read at its base vertex
  return f.size() == 6 && f.contains(h) &&
         f.contains(sub(3, {"ab", "ac", "ba"})) &&
         f.contains(sub(3, {"aa", "ab", "acbA"})) &&
         f.contains(sub(3, {"ab", "ac", "aB", "aa"})) &&
         f.contains(sub(3, {"ab", "aca", "acba"})) &&
         f.contains(StallingsGraph::bouquet(3));
}

bool criterion_golden_graph() {
  StallingsGraph g = sub(3, {"abA", "acA"});
  return g.vertex_count() == 2 && g.edge_count() == 3 &&
         g.subgroup_rank() == 2 && g.next(0, 0) == 1 && g.next(1, 1) == 1 &&
         g.next(1, 2) == 1 && g.next(0, 1) == -1 && g.next(0, 2) == -1;
}

bool criterion_ae() {
  StallingsGraph h = sub(2, {"a", "baB"});
  SubgroupSet ae = algebraic_extensions(h);
  return ae.size() == 2 && ae.contains(h) &&
         ae.contains(StallingsGraph::bouquet(2));
}

bool criterion_intersections() {
  bool first = intersect(sub(2, {"aa", "b"}), sub(2, {"aaa", "b"})) ==
               sub(2, {"aaaaaa", "b"});
  bool second =
      intersect(sub(3, {"a", "b", "acAC"}), sub(3, {"a", "c", "abAB"})) ==
      sub(3, {"a", "abAB", "acAC"});
  return first && second;
}

bool criterion_algclosure() {
  StallingsGraph h = sub(2, {"abAB"});
  return algebraic_closure(h, sub(2, {"a", "abAB"})) == h &&
         algebraic_closure(h, StallingsGraph::bouquet(2)) ==
             StallingsGraph::bouquet(2);
}

bool criterion_free_factor() {
  if (!is_free_factor(sub(2, {"aabb"}), sub(2, {"aa", "bb"}))) return false;
  if (is_free_factor(sub(2, {"aabb"}), StallingsGraph::bouquet(2))) {
    return false;
  }
  std::mt19937_64 rng(101);
  int done = 0;
  while (done < 200) {
    StallingsGraph k = random_subgroup(rng, 6);
    StallingsGraph l = random_subgroup(rng, 6);
    if (l.rank() != k.rank() || !leq(l, k)) continue;
    bool oracle;
    try {
      oracle = oracle_free_factor(l, k, 24);
    } catch (const BudgetExceeded&) {
      continue;
    }
    if (is_free_factor(l, k) != oracle) return false;
    ++done;
  }
  return true;
}

bool criterion_closure_ranks() {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    StallingsGraph h = random_subgroup(rng, 8);
    for (auto p : {PropertyPredicate::pure(), PropertyPredicate::p_pure(2),
                   PropertyPredicate::malnormal()}) {
      StallingsGraph c = property_closure(h, p);
      if (c.subgroup_rank() > h.subgroup_rank()) return false;
      if (!is_ealg_extension(h, c)) return false;
    }
  }
  return true;
}

bool criterion_takahasi() {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 20; ++i) {
    StallingsGraph h = random_subgroup(rng, 8);
    if (!oracle_fringe_is_takahasi(h, 5, rng())) return false;
  }
  return true;
}

bool criterion_purity() {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 200; ++i) {
    StallingsGraph h = random_subgroup(rng, 8);
    auto oracle = oracle_root_search(h, 6, 4);
    bool pure = is_pure(h);
    if (oracle && pure) return false;
    if (!pure) {
      auto witness = root_witness(h, std::nullopt);
      if (!witness) return false;
      if (h.contains(witness->x)) return false;
      if (!h.contains(power(witness->x, witness->exponent))) return false;
    }
    // p-purity for p = 2: only oracle exponents coprime to 2 count
    bool p_pure = is_p_pure(h, 2);
    if (oracle && oracle->exponent % 2 != 0 && p_pure) return false;

    if (pure_closure_iterative(h, std::nullopt) !=
        property_closure(h, PropertyPredicate::pure())) {
      return false;
    }
  }
  return true;
}

bool criterion_ealg_closed() {
  return is_ealg_closed(sub(2, {"ab"})) && !is_ealg_closed(sub(2, {"aa"})) &&
         is_ealg_closed(sub(3, {"ab", "acba"}));
}

bool criterion_basis_change() {
  StallingsGraph h = sub(3, {"ab", "acba"});
  Tuple target{w("a"), w("ab"), w("acba")};
  auto min = minimize_tuple(target, 3);
  if (min.tuple != Tuple{w("a"), w("b"), w("c")}) return false;
  // verify the moves before use: the inverse composite must carry the
  // standard basis onto (a, ab, acba)
  std::vector<WhiteheadAutomorphism> inv(min.trace.rbegin(),
                                         min.trace.rend());
  for (auto& m : inv) m = m.inverse();
  if (composite(inv).images != std::vector<Word>{w("a"), w("ab"), w("acba")}) {
    return false;
  }
  SubgroupSet s = fringe_in_basis(h, min.trace);
  return s.size() == 1 && s.contains(h);
}

bool criterion_fold_properties() {
  std::mt19937_64 rng(113);
  // folding confluence under shuffled edge insertion order
  for (int trial = 0; trial < 1000; ++trial) {
    StallingsGraph ref = random_subgroup(rng, 20);
    RawGraph raw;
    raw.rank = ref.rank();
    raw.vertex_count = 1;
    for (const Word& u : ref.basis()) {
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
    if (StallingsGraph::fold(raw) != ref) return false;
  }
  // index formula on random covers of the bouquet
  for (int trial = 0; trial < 1000; ++trial) {
    int rank = 2 + static_cast<int>(rng() % 2);
    int n = 1 + static_cast<int>(rng() % 5);
    RawGraph raw;
    raw.rank = rank;
    raw.vertex_count = n;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int g = 0; g < rank; ++g) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int v = 0; v < n; ++v) {
        raw.edges.push_back({v, g, perm[static_cast<std::size_t>(v)]});
      }
    }
    StallingsGraph g = StallingsGraph::fold(raw);
    auto idx = g.index();
    if (!idx) return false;
    // the base component of a cover is a cover; its vertex count may be
    // smaller than n but the formula must hold exactly
    if (g.subgroup_rank() != *idx * (rank - 1) + 1) return false;
    if (g.edge_count() != *idx * rank) return false;
  }
  return true;
}

}  // namespace

int main() {
  report(1, "fringe of <ab,acba> is the six expected subgroups",
         criterion_fringe());
  report(2, "golden graph of <aba^-1, aca^-1>", criterion_golden_graph());
  report(3, "AE(<a, bab^-1>) = {H, F}", criterion_ae());
  report(4, "intersection examples", criterion_intersections());
  report(5, "algebraic closure examples", criterion_algclosure());
  report(6, "free-factor criterion and 200-pair oracle agreement",
         criterion_free_factor());
  report(7, "closure rank bounds on 100 random subgroups",
         criterion_closure_ranks());
  report(8, "Takahasi property on 100 random extension pairs",
         criterion_takahasi());
  report(9, "purity cross-validation on 200 random subgroups",
         criterion_purity());
  report(10, "e-algebraic closedness exact cases", criterion_ealg_closed());
  report(11, "fringe in the basis {a, ab, acba} is {H}",
         criterion_basis_change());
  report(12, "folding confluence and index formula, 1000 trials each",
         criterion_fold_properties());
  if (failures == 0) {
    std::cout << "all criteria passed" << std::endl;
    return 0;
  }
  std::cout << failures << " criteria failed" << std::endl;
  return 1;
}
