#ifndef FG_STALLINGS_HPP_
#define FG_STALLINGS_HPP_

#include <compare>
#include <optional>
#include <tuple>
#include <vector>

#include "fg/words.hpp"

namespace fg {

// An edge (source, generator, target); the generator is a 0-based index.
struct Edge {
  int source;
  int gen;
  int target;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A not-necessarily-folded rooted labeled graph, the input of fold().
struct RawGraph {
  int rank = 0;
  int vertex_count = 0;
  int base = 0;
  std::vector<Edge> edges;
  // pairs of vertices to identify before folding
  std::vector<std::pair<int, int>> merges;
};

// A partition of a graph's vertex set; singleton blocks may be omitted.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;
};

// The Stallings graph of a finitely generated subgroup H <= F(rank):
// rooted at vertex 0, folded (deterministic and co-deterministic),
// trimmed, and in canonical form (vertices numbered in BFS discovery
// order from the base). Two subgroups are equal iff their graphs
// compare equal.
class StallingsGraph {
 public:
  // Gamma of <generators>.
  static StallingsGraph build(int rank, const std::vector<Word>& generators);
  // Fold, trim and canonicalize an arbitrary rooted labeled graph.
  static StallingsGraph fold(const RawGraph& raw);
  // Gamma(F): one vertex, a loop per generator.
  static StallingsGraph bouquet(int rank);
  // The trivial subgroup: one vertex, no edges.
  static StallingsGraph trivial(int rank);

  int rank() const { return rank_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  static constexpr int base() { return 0; }

  // Transition along generator g, or -1.
  int next(int v, int g) const { return fwd_[idx(v, g)]; }
  int prev(int v, int g) const { return bwd_[idx(v, g)]; }
  // Transition along an arc (2g forward, 2g+1 backward), or -1.
  int step(int v, int arc) const {
    return arc % 2 == 0 ? next(v, arc / 2) : prev(v, arc / 2);
  }

  // Edges sorted by (source, gen).
  std::vector<Edge> edges() const;

  // Reads w from the base; returns the final vertex or nullopt if the
  // path leaves the graph.
  std::optional<int> trace(const Word& w) const;
  std::optional<int> trace_from(int v, const Word& w) const;

  bool contains(const Word& w) const;

  // rk(H) = E - V + 1.
  int subgroup_rank() const { return edge_count_ - vertex_count_ + 1; }

  // Spanning-tree basis of H, one word per non-tree edge of the
  // canonical BFS tree, in canonical edge order.
  std::vector<Word> basis() const;

  // Rewrites w (a member of H) as a word over the basis alphabet
  // {0, .., subgroup_rank()-1}; substituting basis() words back
  // reproduces w. Throws NotMember otherwise.
  Word express(const Word& w) const;

  // Number of vertices if the graph covers the bouquet, nullopt otherwise.
  std::optional<int> index() const;

  // Reduced path word from the base to v along the canonical BFS tree.
  Word tree_path(int v) const;

  friend bool operator==(const StallingsGraph&, const StallingsGraph&) =
      default;
  // Orders by (vertex count, edge list); used for canonical subgroup sets.
  friend auto operator<=>(const StallingsGraph& a, const StallingsGraph& b) {
    return std::tie(a.vertex_count_, a.rank_, a.fwd_) <=>
           std::tie(b.vertex_count_, b.rank_, b.fwd_);
  }

 private:
  StallingsGraph() = default;
  std::size_t idx(int v, int g) const {
    return static_cast<std::size_t>(v) * rank_ + g;
  }

  int rank_ = 0;
  int vertex_count_ = 1;
  int edge_count_ = 0;
  std::vector<int> fwd_;  // vertex_count_ x rank_, -1 = absent
  std::vector<int> bwd_;
};

// The label- and base-preserving vertex map Gamma(H) -> Gamma(K); it
// exists iff H <= K and is unique.
struct GraphMorphism {
  std::vector<int> vertex_map;
};

StallingsGraph quotient(const StallingsGraph& g, const VertexPartition& p);

// The unique morphism Gamma(H) -> Gamma(K) if H <= K, nullopt otherwise.
std::optional<GraphMorphism> leq(const StallingsGraph& h,
                                 const StallingsGraph& k);

bool equal(const StallingsGraph& h, const StallingsGraph& k);

// Gamma of <e(w) : w in basis(H)>.
StallingsGraph subgroup_image(const Endomorphism& e, const StallingsGraph& h);

// True iff <images of e> = F(rank); by hopficity this makes e an
// automorphism.
bool is_surjective_endomorphism(const Endomorphism& e);

}  // namespace fg

#endif  // FG_STALLINGS_HPP_
