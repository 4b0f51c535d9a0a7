#include "fg/properties.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "fg/algext.hpp"
#include "fg/errors.hpp"

namespace fg {

PropertyPredicate PropertyPredicate::p_pure(int p) {
  if (p < 2) throw Error("p-pure requires a prime parameter");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw Error("p-pure requires a prime parameter");
  }
  return {Name::kPPure, p};
}

bool is_malnormal(const StallingsGraph& h) {
  // full self-product over all vertex pairs; H is malnormal iff every
  // non-diagonal component is a tree (first Betti number 0)
  int n = h.vertex_count();
  int states = n * n;
  std::vector<int> parent(static_cast<std::size_t>(states));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  std::vector<int> edge_count(static_cast<std::size_t>(states), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int g = 0; g < h.rank(); ++g) {
        int u2 = h.next(u, g), v2 = h.next(v, g);
        if (u2 >= 0 && v2 >= 0) {
          int a = find(u * n + v), b = find(u2 * n + v2);
          ++edge_count[static_cast<std::size_t>(a)];
          if (a != b) {
            // edge tally is re-rooted below; union the components
            parent[static_cast<std::size_t>(b)] = a;
          }
        }
      }
    }
  }
  // re-tally edges and vertices per final root
  std::vector<int> edges(static_cast<std::size_t>(states), 0);
  std::vector<int> vertices(static_cast<std::size_t>(states), 0);
  for (int s = 0; s < states; ++s) {
    edges[static_cast<std::size_t>(find(s))] +=
        edge_count[static_cast<std::size_t>(s)];
    ++vertices[static_cast<std::size_t>(find(s))];
  }
  int diagonal = find(0);  // component of (base, base)
  for (int s = 0; s < states; ++s) {
    if (find(s) != s || s == diagonal) continue;
    if (edges[static_cast<std::size_t>(s)] -
            vertices[static_cast<std::size_t>(s)] + 1 >
        0) {
      return false;
    }
  }
  return true;
}

namespace {

inline int inv_arc(int arc) { return arc ^ 1; }

Letter arc_letter(int arc) { return Letter::from_arc(arc); }

std::vector<int> primes_up_to(int n) {
  std::vector<int> ps;
  for (int d = 2; d <= n; ++d) {
    bool prime = true;
    for (int q = 2; q * q <= d; ++q) {
      if (d % q == 0) prime = false;
    }
    if (prime) ps.push_back(d);
  }
  return ps;
}

// Reduced words readable from the base: for each vertex, the set of
// possible last arcs (kNoArc marks the empty word at the base), with
// parent pointers for path reconstruction.
constexpr int kNoArc = -1;

struct ReachTable {
  // key: vertex * (2r+1) + (last+1); value: index into the state list
  std::map<int, int> index;
  std::vector<std::pair<int, int>> states;   // (vertex, last arc)
  std::vector<std::pair<int, int>> parents;  // (state index, arc), -1 at root

  Word word_to(int state_index) const {
    std::vector<Letter> letters;
    int s = state_index;
    while (parents[static_cast<std::size_t>(s)].first >= 0) {
      letters.push_back(arc_letter(parents[static_cast<std::size_t>(s)].second));
      s = parents[static_cast<std::size_t>(s)].first;
    }
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
  }
};

ReachTable reachable_prefixes(const StallingsGraph& g) {
  ReachTable t;
  int arcs = 2 * g.rank();
  auto key = [&](int v, int last) { return v * (arcs + 1) + (last + 1); };
  auto add = [&](int v, int last, int parent_state, int arc) {
    auto [it, fresh] = t.index.try_emplace(key(v, last),
                                           static_cast<int>(t.states.size()));
    if (fresh) {
      t.states.emplace_back(v, last);
      t.parents.emplace_back(parent_state, arc);
    }
    return std::pair(it->second, fresh);
  };
  add(StallingsGraph::base(), kNoArc, -1, -1);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int s = q.front();
    q.pop();
    auto [v, last] = t.states[static_cast<std::size_t>(s)];
    for (int arc = 0; arc < arcs; ++arc) {
      if (last != kNoArc && arc == inv_arc(last)) continue;
      int w = g.step(v, arc);
      if (w < 0) continue;
      auto [idx, fresh] = add(w, arc, s, arc);
      if (fresh) q.push(idx);
    }
  }
  return t;
}

// Orbit-tuple emptiness check: searches for a cyclically reduced w whose
// action cycles the given vertices, compatible with some reduced prefix
// u from the base. See root_witness below for the factorization argument.
struct OrbitSearch {
  const StallingsGraph& g;
  const ReachTable& reach;
  long long state_budget;

  struct Hit {
    Word x;
    int exponent;
  };

  std::optional<Hit> try_tuple(const std::vector<int>& tuple) {
    int d = static_cast<int>(tuple.size());
    int arcs = 2 * g.rank();
    // state: vertex positions of all d copies + first arc + last arc
    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>> states;
    std::vector<std::pair<int, int>> parents;  // (state, arc)
    std::queue<int> q;

    auto push = [&](std::vector<int> s, int parent, int arc) -> bool {
      auto [it, fresh] = seen.try_emplace(std::move(s),
                                          static_cast<int>(states.size()));
      if (!fresh) return false;
      states.push_back(it->first);
      parents.emplace_back(parent, arc);
      q.push(it->second);
      return true;
    };

    for (int f = 0; f < arcs; ++f) {
      std::vector<int> s(static_cast<std::size_t>(d) + 2);
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) {
        s[static_cast<std::size_t>(i)] = g.step(tuple[static_cast<std::size_t>(i)], f);
        ok = s[static_cast<std::size_t>(i)] >= 0;
      }
      if (!ok) continue;
      s[static_cast<std::size_t>(d)] = f;      // first arc
      s[static_cast<std::size_t>(d) + 1] = f;  // last arc
      push(std::move(s), -1, f);
    }

    while (!q.empty()) {
      int si = q.front();
      q.pop();
      if (--state_budget < 0) {
        throw BudgetExceeded("root witness search exceeded its state budget");
      }
      const std::vector<int> s = states[static_cast<std::size_t>(si)];
      int d_first = s[static_cast<std::size_t>(d)];
      int d_last = s[static_cast<std::size_t>(d) + 1];

      // acceptance: all copies advanced one step around the cycle, the
      // word is cyclically reduced, and some rotation start admits a
      // compatible prefix u
      bool at_target = true;
      for (int i = 0; i < d && at_target; ++i) {
        at_target = s[static_cast<std::size_t>(i)] ==
                    tuple[static_cast<std::size_t>((i + 1) % d)];
      }
      if (at_target && d_last != inv_arc(d_first)) {
        for (int j = 0; j < d; ++j) {
          int vj = tuple[static_cast<std::size_t>(j)];
          for (const auto& [key, ridx] : reach.index) {
            auto [rv, rlast] = reach.states[static_cast<std::size_t>(ridx)];
            if (rv != vj) continue;
            bool compatible =
                rlast == kNoArc ||
                (d_first != inv_arc(rlast) && d_last != rlast);
            if (!compatible) continue;
            // rebuild w, then x = u w u^-1
            std::vector<Letter> wl;
            int cur = si;
            while (cur >= 0) {
              wl.push_back(arc_letter(parents[static_cast<std::size_t>(cur)].second));
              cur = parents[static_cast<std::size_t>(cur)].first;
            }
            std::reverse(wl.begin(), wl.end());
            Word w(std::move(wl));
            Word u = reach.word_to(ridx);
            return Hit{multiply(multiply(u, w), invert(u)), d};
          }
        }
      }

      for (int arc = 0; arc < arcs; ++arc) {
        if (arc == inv_arc(d_last)) continue;
        std::vector<int> s2 = s;
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
          s2[static_cast<std::size_t>(i)] =
              g.step(s[static_cast<std::size_t>(i)], arc);
          ok = s2[static_cast<std::size_t>(i)] >= 0;
        }
        if (!ok) continue;
        s2[static_cast<std::size_t>(d) + 1] = arc;
        push(std::move(s2), si, arc);
      }
    }
    return std::nullopt;
  }

  int d = 0;
};

}  // namespace

std::optional<RootWitness> root_witness(const StallingsGraph& h,
                                        std::optional<int> coprime_to,
                                        int vertex_cap) {
  // Every root witness x factors as x = u w u^-1 (reduced, w cyclically
  // reduced); x^d in H forces u to read base -> v0 and w to cycle an
  // orbit v0 -> .. -> v_{per-1} -> v0 of period per >= 2 dividing d, and
  // conversely any such orbit yields the witness (x, per). A witness
  // with composite period yields one with prime period (replace x by
  // x^(per/q)), so prime exponents suffice.
  int n = h.vertex_count();
  if (n > vertex_cap) {
    throw BudgetExceeded("graph has " + std::to_string(n) +
                         " vertices, above the exhaustive-search cap of " +
                         std::to_string(vertex_cap));
  }
  if (n < 2) return std::nullopt;

  ReachTable reach = reachable_prefixes(h);
  OrbitSearch search{h, reach, 5'000'000};

  for (int d : primes_up_to(n)) {
    if (coprime_to && d == *coprime_to) continue;
    search.d = d;
    // ordered tuples of d distinct vertices, up to rotation: the first
    // entry is the minimum
    std::vector<int> tuple(static_cast<std::size_t>(d));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::optional<RootWitness> found;
    auto recurse = [&](auto&& self, int depth) -> bool {
      if (depth == d) {
        auto hit = search.try_tuple(tuple);
        if (hit) {
          found = RootWitness{hit->x, hit->exponent};
          return true;
        }
        return false;
      }
      for (int v = tuple[0] + 1; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = true;
        tuple[static_cast<std::size_t>(depth)] = v;
        if (self(self, depth + 1)) return true;
        used[static_cast<std::size_t>(v)] = false;
      }
      return false;
    };
    for (int v0 = 0; v0 + d <= n; ++v0) {
      tuple[0] = v0;
      std::fill(used.begin(), used.end(), false);
      used[static_cast<std::size_t>(v0)] = true;
      if (recurse(recurse, 1)) return found;
    }
  }
  return std::nullopt;
}

bool is_pure(const StallingsGraph& h, int vertex_cap) {
  return !root_witness(h, std::nullopt, vertex_cap).has_value();
}

bool is_p_pure(const StallingsGraph& h, int p, int vertex_cap) {
  PropertyPredicate::p_pure(p);  // validates p
  return !root_witness(h, p, vertex_cap).has_value();
}

bool satisfies(const StallingsGraph& h, const PropertyPredicate& p,
               int vertex_cap) {
  switch (p.name) {
    case PropertyPredicate::Name::kMalnormal:
      return is_malnormal(h);
    case PropertyPredicate::Name::kPure:
      return is_pure(h, vertex_cap);
    case PropertyPredicate::Name::kPPure:
      return is_p_pure(h, p.prime, vertex_cap);
    case PropertyPredicate::Name::kEalgClosed:
      return is_ealg_closed(h);
  }
  throw Error("unknown property");
}

StallingsGraph property_closure(const StallingsGraph& h,
                                const PropertyPredicate& p, int vertex_cap) {
  std::vector<StallingsGraph> candidates;
  for (const StallingsGraph& k : algebraic_extensions(h)) {
    if (satisfies(k, p, vertex_cap)) candidates.push_back(k);
  }
  if (candidates.empty()) {
    throw InternalInconsistency(
        "property closure: no algebraic extension satisfies the property; "
        "this contradicts the closure existence theorem and indicates a bug");
  }
  for (const StallingsGraph& m : candidates) {
    bool minimum = true;
    for (const StallingsGraph& l : candidates) {
      if (!leq(m, l)) {
        minimum = false;
        break;
      }
    }
    if (minimum) return m;
  }
  throw InternalInconsistency(
      "property closure: satisfying set has no unique minimum; this "
      "contradicts uniqueness and indicates a bug");
}

StallingsGraph pure_closure_iterative(const StallingsGraph& h,
                                      std::optional<int> coprime_to,
                                      int vertex_cap) {
  StallingsGraph current = h;
  for (int step = 0; step < 100000; ++step) {
    auto witness = root_witness(current, coprime_to, vertex_cap);
    if (!witness) return current;
    std::vector<Word> gens = current.basis();
    gens.push_back(witness->x);
    current = StallingsGraph::build(current.rank(), gens);
  }
  throw InternalInconsistency(
      "iterative pure closure failed to terminate; this contradicts the "
      "finiteness of AE(H) and indicates a bug");
}

}  // namespace fg
