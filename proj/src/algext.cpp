#include "fg/algext.hpp"

#include <queue>

#include "fg/errors.hpp"
#include "fg/whitehead.hpp"

namespace fg {

SubgroupSet algebraic_extensions(const StallingsGraph& h) {
  SubgroupSet all = fringe(h);
  SubgroupSet result;
  for (const StallingsGraph& k : all) {
    bool has_proper_factor = false;
    for (const StallingsGraph& l : all) {
      if (l == k) continue;
      if (leq(l, k) && is_free_factor(l, k)) {
        has_proper_factor = true;
        break;
      }
    }
    if (!has_proper_factor) result.insert(k);
  }
  return result;
}

bool is_algebraic(const StallingsGraph& h, const StallingsGraph& k) {
  if (!leq(h, k)) throw NotSubgroup("H is not a subgroup of K");
  return algebraic_extensions(h).contains(k);
}

StallingsGraph algebraic_closure(const StallingsGraph& h,
                                 const StallingsGraph& k) {
  if (!leq(h, k)) throw NotSubgroup("H is not a subgroup of K");
  std::vector<StallingsGraph> candidates;
  for (const StallingsGraph& l : algebraic_extensions(h)) {
    if (leq(l, k) && is_free_factor(l, k)) candidates.push_back(l);
  }
  if (candidates.empty()) {
    throw InternalInconsistency(
        "algebraic closure: no candidate found; this contradicts the "
        "existence theorem and indicates a bug");
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
      "algebraic closure: candidate set has no unique minimum; this "
      "contradicts uniqueness and indicates a bug");
}

SubgroupSet elementary_algebraic_successors(const StallingsGraph& l) {
  SubgroupSet result;
  for (int v = 0; v < l.vertex_count(); ++v) {
    for (int w = v + 1; w < l.vertex_count(); ++w) {
      StallingsGraph q = quotient(l, VertexPartition{{{v, w}}});
      if (q.subgroup_rank() <= l.subgroup_rank()) result.insert(q);
    }
  }
  return result;
}

namespace {

// All subgroups reachable from H along elementary algebraic successors,
// H included.
SubgroupSet ealg_reachable(const StallingsGraph& h) {
  SubgroupSet seen;
  seen.insert(h);
  std::queue<StallingsGraph> frontier;
  frontier.push(h);
  while (!frontier.empty()) {
    StallingsGraph g = frontier.front();
    frontier.pop();
    for (const StallingsGraph& s : elementary_algebraic_successors(g)) {
      if (seen.insert(s)) frontier.push(s);
    }
  }
  return seen;
}

}  // namespace

bool is_ealg_extension(const StallingsGraph& h, const StallingsGraph& k) {
  if (!leq(h, k)) throw NotSubgroup("H is not a subgroup of K");
  return ealg_reachable(h).contains(k);
}

StallingsGraph ealg_closure(const StallingsGraph& h) {
  SubgroupSet reachable = ealg_reachable(h);
  std::vector<StallingsGraph> maximal;
  for (const StallingsGraph& m : reachable) {
    bool is_max = true;
    for (const StallingsGraph& k : reachable) {
      if (k != m && leq(m, k)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(m);
  }
  if (maximal.size() != 1) {
    throw InternalInconsistency(
        "e-algebraic closure: maximal reachable subgroup is not unique (" +
        std::to_string(maximal.size()) + " candidates); this indicates a bug");
  }
  return maximal.front();
}

bool is_ealg_closed(const StallingsGraph& h) {
  return elementary_algebraic_successors(h).size() == 0;
}

bool is_compressed(const StallingsGraph& h) {
  for (const StallingsGraph& k : algebraic_extensions(h)) {
    if (k.subgroup_rank() < h.subgroup_rank()) return false;
  }
  return true;
}

}  // namespace fg
