#include "fg/lattice.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "fg/errors.hpp"

namespace fg {

bool SubgroupSet::insert(const StallingsGraph& g) {
  auto it = std::lower_bound(members_.begin(), members_.end(), g);
  if (it != members_.end() && *it == g) return false;
  members_.insert(it, g);
  return true;
}

bool SubgroupSet::contains(const StallingsGraph& g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

StallingsGraph intersect(const StallingsGraph& h, const StallingsGraph& k) {
  if (h.rank() != k.rank()) {
    throw RankMismatch("subgroups over different alphabets");
  }
  // product restricted to the component of (base, base)
  auto encode = [&](int u, int v) { return u * k.vertex_count() + v; };
  std::map<int, int> id;  // encoded pair -> raw vertex
  RawGraph raw;
  raw.rank = h.rank();
  auto vertex = [&](int u, int v) {
    auto [it, fresh] = id.try_emplace(encode(u, v), raw.vertex_count);
    if (fresh) ++raw.vertex_count;
    return std::pair(it->second, fresh);
  };
  std::queue<std::pair<int, int>> q;
  vertex(0, 0);
  q.emplace(0, 0);
  while (!q.empty()) {
    auto [u, v] = q.front();
    q.pop();
    for (int arc = 0; arc < 2 * h.rank(); ++arc) {
      int u2 = h.step(u, arc), v2 = k.step(v, arc);
      if (u2 >= 0 && v2 >= 0) {
        auto [tgt, fresh] = vertex(u2, v2);
        (void)tgt;
        if (fresh) q.emplace(u2, v2);
      }
    }
  }
  // collect every edge among discovered pairs once
  for (const auto& [code, src] : id) {
    int u = code / k.vertex_count();
    int v = code % k.vertex_count();
    for (int g = 0; g < h.rank(); ++g) {
      int u2 = h.next(u, g), v2 = k.next(v, g);
      if (u2 >= 0 && v2 >= 0) {
        auto it = id.find(encode(u2, v2));
        if (it != id.end()) raw.edges.push_back({src, g, it->second});
      }
    }
  }
  return StallingsGraph::fold(raw);
}

StallingsGraph join(const StallingsGraph& h, const StallingsGraph& k) {
  if (h.rank() != k.rank()) {
    throw RankMismatch("subgroups over different alphabets");
  }
  std::vector<Word> gens = h.basis();
  for (const Word& w : k.basis()) gens.push_back(w);
  return StallingsGraph::build(h.rank(), gens);
}

SubgroupSet fringe(const StallingsGraph& h) {
  // BFS over single-pair vertex merges; every congruence quotient is
  // reached because congruences are generated by vertex pairs
  SubgroupSet result;
  result.insert(h);
  std::queue<StallingsGraph> frontier;
  frontier.push(h);
  while (!frontier.empty()) {
    StallingsGraph g = frontier.front();
    frontier.pop();
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int w = v + 1; w < g.vertex_count(); ++w) {
        StallingsGraph q = quotient(g, VertexPartition{{{v, w}}});
        if (result.insert(q)) frontier.push(q);
      }
    }
  }
  return result;
}

StallingsGraph takahasi_factor(const StallingsGraph& h,
                               const StallingsGraph& k) {
  auto phi = leq(h, k);
  if (!phi) throw NotSubgroup("H is not a subgroup of K");
  // image subgraph of Gamma(K); it is already folded
  RawGraph raw;
  raw.rank = k.rank();
  raw.vertex_count = k.vertex_count();
  raw.base = StallingsGraph::base();
  for (const Edge& e : h.edges()) {
    raw.edges.push_back(
        {phi->vertex_map[static_cast<std::size_t>(e.source)], e.gen,
         phi->vertex_map[static_cast<std::size_t>(e.target)]});
  }
  std::sort(raw.edges.begin(), raw.edges.end());
  raw.edges.erase(std::unique(raw.edges.begin(), raw.edges.end()),
                  raw.edges.end());
  return StallingsGraph::fold(raw);
}

SubgroupSet fringe_in_basis(const StallingsGraph& h,
                            const std::vector<WhiteheadAutomorphism>& moves) {
  if (moves.empty()) return fringe(h);
  Endomorphism phi = composite(moves);
  std::vector<WhiteheadAutomorphism> inverted;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    inverted.push_back(it->inverse());
  }
  Endomorphism phi_inv = composite(inverted);
  SubgroupSet result;
  for (const StallingsGraph& k : fringe(subgroup_image(phi, h))) {
    result.insert(subgroup_image(phi_inv, k));
  }
  return result;
}

}  // namespace fg
