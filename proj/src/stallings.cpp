#include "fg/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>

#include "fg/errors.hpp"

namespace fg {

namespace {

// Worklist folding engine: union-find over vertices plus per-class
// transition maps; identifying two classes re-inserts the smaller
// class's edges, which may queue further identifications.
class Folder {
 public:
  Folder(int rank, int n) : rank_(rank), parent_(n), out_(n), in_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_edge(int u, int g, int v) { edges_.push_back({u, g, v}); }
  void add_merge(int a, int b) { unions_.emplace_back(a, b); }

  void run() {
    while (!unions_.empty() || !edges_.empty()) {
      if (!unions_.empty()) {
        auto [a, b] = unions_.back();
        unions_.pop_back();
        unite(a, b);
      } else {
        Edge e = edges_.back();
        edges_.pop_back();
        insert(e.source, e.gen, e.target);
      }
    }
  }

  // Folded edge list with normalized endpoints; call after run().
  std::vector<Edge> folded_edges() {
    std::vector<Edge> result;
    for (int v = 0; v < static_cast<int>(parent_.size()); ++v) {
      if (find(v) != v) continue;
      for (auto [g, t] : out_[v]) result.push_back({v, g, find(t)});
    }
    return result;
  }

 private:
  void insert(int u, int g, int v) {
    u = find(u);
    v = find(v);
    auto it = out_[u].find(g);
    if (it != out_[u].end()) {
      int t = find(it->second);
      it->second = t;
      if (t != v) {
        // the edge collapses onto u -g-> t; the union re-inserts the
        // smaller class's edges, which redoes the checks at the target
        unions_.emplace_back(t, v);
        return;
      }
      // duplicate of an existing edge: still run the co-determinism
      // check at v, the recorded in-source may differ from u
    } else {
      out_[u][g] = v;
    }
    auto jt = in_[v].find(g);
    if (jt != in_[v].end()) {
      int s = find(jt->second);
      jt->second = s;
      if (s != u) unions_.emplace_back(s, u);
    } else {
      in_[v][g] = u;
    }
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (out_[a].size() + in_[a].size() < out_[b].size() + in_[b].size()) {
      std::swap(a, b);
    }
    parent_[b] = a;
    for (auto [g, t] : out_[b]) edges_.push_back({b, g, t});
    for (auto [g, s] : in_[b]) edges_.push_back({s, g, b});
    out_[b].clear();
    in_[b].clear();
  }

  int rank_;
  std::vector<int> parent_;
  std::vector<std::map<int, int>> out_, in_;
  std::vector<Edge> edges_;
  std::vector<std::pair<int, int>> unions_;
};

struct Tables {
  int rank;
  int n;
  std::vector<int> fwd, bwd;  // n x rank, -1 = absent

  Tables(int rank_, int n_)
      : rank(rank_),
        n(n_),
        fwd(static_cast<std::size_t>(n_) * rank_, -1),
        bwd(static_cast<std::size_t>(n_) * rank_, -1) {}

  std::size_t idx(int v, int g) const {
    return static_cast<std::size_t>(v) * rank + g;
  }
};

}  // namespace

StallingsGraph StallingsGraph::fold(const RawGraph& raw) {
  for (const Edge& e : raw.edges) {
    if (e.gen < 0 || e.gen >= raw.rank) {
      throw RankMismatch("edge label outside alphabet of rank " +
                         std::to_string(raw.rank));
    }
  }
  Folder folder(raw.rank, raw.vertex_count);
  for (auto [a, b] : raw.merges) folder.add_merge(a, b);
  for (const Edge& e : raw.edges) folder.add_edge(e.source, e.gen, e.target);
  folder.run();

  int base = folder.find(raw.base);
  Tables t(raw.rank, raw.vertex_count);
  for (const Edge& e : folder.folded_edges()) {
    t.fwd[t.idx(e.source, e.gen)] = e.target;
    t.bwd[t.idx(e.target, e.gen)] = e.source;
  }

  // keep the base component only
  std::vector<bool> alive(t.n, false);
  {
    std::queue<int> q;
    q.push(base);
    alive[base] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int g = 0; g < t.rank; ++g) {
        for (int w : {t.fwd[t.idx(v, g)], t.bwd[t.idx(v, g)]}) {
          if (w >= 0 && !alive[w]) {
            alive[w] = true;
            q.push(w);
          }
        }
      }
    }
  }

  // trim: drop non-base vertices of degree <= 1 until none remain
  auto degree = [&](int v) {
    int d = 0;
    for (int g = 0; g < t.rank; ++g) {
      if (t.fwd[t.idx(v, g)] >= 0) ++d;
      if (t.bwd[t.idx(v, g)] >= 0) ++d;
    }
    return d;
  };
  std::queue<int> trim;
  for (int v = 0; v < t.n; ++v) {
    if (alive[v] && v != base && degree(v) <= 1) trim.push(v);
  }
  while (!trim.empty()) {
    int v = trim.front();
    trim.pop();
    if (!alive[v] || degree(v) > 1) continue;
    alive[v] = false;
    for (int g = 0; g < t.rank; ++g) {
      int w = t.fwd[t.idx(v, g)];
      if (w >= 0) {
        t.bwd[t.idx(w, g)] = -1;
        t.fwd[t.idx(v, g)] = -1;
        if (w != base && alive[w] && degree(w) <= 1) trim.push(w);
      }
      w = t.bwd[t.idx(v, g)];
      if (w >= 0) {
        t.fwd[t.idx(w, g)] = -1;
        t.bwd[t.idx(v, g)] = -1;
        if (w != base && alive[w] && degree(w) <= 1) trim.push(w);
      }
    }
  }

  // canonical renumbering: BFS from the base, outgoing edges by
  // generator first, then incoming edges by generator
  std::vector<int> number(t.n, -1);
  std::vector<int> order;
  number[base] = 0;
  order.push_back(base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int g = 0; g < t.rank; ++g) {
      int w = t.fwd[t.idx(v, g)];
      if (w >= 0 && number[w] < 0) {
        number[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
    }
    for (int g = 0; g < t.rank; ++g) {
      int w = t.bwd[t.idx(v, g)];
      if (w >= 0 && number[w] < 0) {
        number[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
    }
  }

  StallingsGraph result;
  result.rank_ = t.rank;
  result.vertex_count_ = static_cast<int>(order.size());
  result.fwd_.assign(static_cast<std::size_t>(result.vertex_count_) * t.rank,
                     -1);
  result.bwd_.assign(result.fwd_.size(), -1);
  int edges = 0;
  for (int v : order) {
    for (int g = 0; g < t.rank; ++g) {
      int w = t.fwd[t.idx(v, g)];
      if (w >= 0) {
        result.fwd_[result.idx(number[v], g)] = number[w];
        result.bwd_[result.idx(number[w], g)] = number[v];
        ++edges;
      }
    }
  }
  result.edge_count_ = edges;
  return result;
}

StallingsGraph StallingsGraph::build(int rank,
                                     const std::vector<Word>& generators) {
  RawGraph raw;
  raw.rank = rank;
  raw.base = 0;
  raw.vertex_count = 1;
  for (const Word& w : generators) {
    if (w.max_gen() >= rank) {
      throw RankMismatch("generator word uses a letter outside rank " +
                         std::to_string(rank));
    }
    if (w.empty()) continue;
    int prev = 0;
    const auto& ls = w.letters();
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
  return fold(raw);
}

StallingsGraph StallingsGraph::bouquet(int rank) {
  RawGraph raw;
  raw.rank = rank;
  raw.vertex_count = 1;
  for (int g = 0; g < rank; ++g) raw.edges.push_back({0, g, 0});
  return fold(raw);
}

StallingsGraph StallingsGraph::trivial(int rank) {
  RawGraph raw;
  raw.rank = rank;
  raw.vertex_count = 1;
  return fold(raw);
}

std::vector<Edge> StallingsGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (int v = 0; v < vertex_count_; ++v) {
    for (int g = 0; g < rank_; ++g) {
      int w = next(v, g);
      if (w >= 0) result.push_back({v, g, w});
    }
  }
  return result;
}

std::optional<int> StallingsGraph::trace_from(int v, const Word& w) const {
  if (w.max_gen() >= rank_) return std::nullopt;
  for (Letter l : w.letters()) {
    v = step(v, l.arc());
    if (v < 0) return std::nullopt;
  }
  return v;
}

std::optional<int> StallingsGraph::trace(const Word& w) const {
  return trace_from(base(), w);
}

bool StallingsGraph::contains(const Word& w) const {
  return trace(w) == std::optional<int>(base());
}

namespace {

// Per-vertex parent arc of the canonical BFS tree; vertices are already
// in discovery order, so parents have smaller numbers.
struct TreeInfo {
  // parent_arc[v]: arc from parent to v (2g forward, 2g+1 backward), -1 at base
  std::vector<int> parent_arc;
  std::vector<int> parent;
  // for each forward edge key (v*rank+g): basis index, or -1 for tree edges
  std::vector<int> basis_index;
  int basis_count = 0;
};

TreeInfo tree_info(const StallingsGraph& g) {
  TreeInfo info;
  int n = g.vertex_count();
  int r = g.rank();
  info.parent_arc.assign(n, -1);
  info.parent.assign(n, -1);
  info.basis_index.assign(static_cast<std::size_t>(n) * r, -2);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  // mirror the canonical BFS; discovery edges form the spanning tree
  std::vector<int> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int gen = 0; gen < r; ++gen) {
      int w = g.next(v, gen);
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        info.parent[w] = v;
        info.parent_arc[w] = 2 * gen;
        info.basis_index[static_cast<std::size_t>(v) * r + gen] = -1;
        order.push_back(w);
      }
    }
    for (int gen = 0; gen < r; ++gen) {
      int w = g.prev(v, gen);
      if (w >= 0 && !seen[w]) {
        seen[w] = true;
        info.parent[w] = v;
        info.parent_arc[w] = 2 * gen + 1;
        info.basis_index[static_cast<std::size_t>(w) * r + gen] = -1;
        order.push_back(w);
      }
    }
  }
  // remaining edges get basis indices in canonical edge order
  for (int v = 0; v < n; ++v) {
    for (int gen = 0; gen < r; ++gen) {
      if (g.next(v, gen) >= 0 &&
          info.basis_index[static_cast<std::size_t>(v) * r + gen] == -2) {
        info.basis_index[static_cast<std::size_t>(v) * r + gen] =
            info.basis_count++;
      }
    }
  }
  return info;
}

}  // namespace

Word StallingsGraph::tree_path(int v) const {
  TreeInfo info = tree_info(*this);
  std::vector<Letter> letters;
  while (v != base()) {
    int arc = info.parent_arc[v];
    letters.push_back(arc % 2 == 0 ? Letter(arc / 2, true)
                                   : Letter(arc / 2, false));
    v = info.parent[v];
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

std::vector<Word> StallingsGraph::basis() const {
  TreeInfo info = tree_info(*this);
  // tree paths, computed once
  std::vector<Word> path(vertex_count_);
  for (int v = 1; v < vertex_count_; ++v) {
    int arc = info.parent_arc[v];
    Letter l = arc % 2 == 0 ? Letter(arc / 2, true) : Letter(arc / 2, false);
    path[v] = multiply(path[info.parent[v]], Word(l));
  }
  std::vector<Word> result(static_cast<std::size_t>(info.basis_count));
  for (int v = 0; v < vertex_count_; ++v) {
    for (int gen = 0; gen < rank_; ++gen) {
      int bi = info.basis_index[idx(v, gen)];
      if (bi >= 0) {
        int w = next(v, gen);
        result[static_cast<std::size_t>(bi)] = multiply(
            multiply(path[v], Word(Letter(gen, true))), invert(path[w]));
      }
    }
  }
  return result;
}

Word StallingsGraph::express(const Word& w) const {
  TreeInfo info = tree_info(*this);
  std::vector<Letter> out;
  int v = base();
  for (Letter l : w.letters()) {
    if (l.gen >= rank_) throw NotMember("word outside the ambient alphabet");
    int src, tgt;
    if (l.positive) {
      src = v;
      tgt = next(v, l.gen);
      if (tgt < 0) throw NotMember("word is not a member of the subgroup");
      v = tgt;
    } else {
      tgt = v;
      src = prev(v, l.gen);
      if (src < 0) throw NotMember("word is not a member of the subgroup");
      v = src;
    }
    int bi = info.basis_index[idx(src, l.gen)];
    if (bi >= 0) {
      Letter bl(bi, l.positive);
      if (!out.empty() && out.back() == bl.inverse()) {
        out.pop_back();
      } else {
        out.push_back(bl);
      }
    }
  }
  if (v != base()) throw NotMember("word is not a member of the subgroup");
  return Word(std::move(out));
}

std::optional<int> StallingsGraph::index() const {
  for (int v = 0; v < vertex_count_; ++v) {
    for (int g = 0; g < rank_; ++g) {
      if (next(v, g) < 0 || prev(v, g) < 0) return std::nullopt;
    }
  }
  return vertex_count_;
}

StallingsGraph quotient(const StallingsGraph& g, const VertexPartition& p) {
  RawGraph raw;
  raw.rank = g.rank();
  raw.vertex_count = g.vertex_count();
  raw.base = StallingsGraph::base();
  raw.edges = g.edges();
  for (const auto& block : p.blocks) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      raw.merges.emplace_back(block[0], block[i]);
    }
  }
  return StallingsGraph::fold(raw);
}

std::optional<GraphMorphism> leq(const StallingsGraph& h,
                                 const StallingsGraph& k) {
  if (h.rank() != k.rank()) {
    throw RankMismatch("subgroups over different alphabets");
  }
  std::vector<int> map(static_cast<std::size_t>(h.vertex_count()), -1);
  map[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int arc = 0; arc < 2 * h.rank(); ++arc) {
      int w = h.step(v, arc);
      if (w < 0) continue;
      int img = k.step(map[static_cast<std::size_t>(v)], arc);
      if (img < 0) return std::nullopt;
      int& slot = map[static_cast<std::size_t>(w)];
      if (slot < 0) {
        slot = img;
        q.push(w);
      } else if (slot != img) {
        return std::nullopt;
      }
    }
  }
  return GraphMorphism{std::move(map)};
}

bool equal(const StallingsGraph& h, const StallingsGraph& k) {
  return h == k;
}

StallingsGraph subgroup_image(const Endomorphism& e, const StallingsGraph& h) {
  if (e.rank != h.rank()) {
    throw RankMismatch("endomorphism rank differs from the ambient rank");
  }
  std::vector<Word> images;
  for (const Word& w : h.basis()) {
    images.push_back(apply_endomorphism(e, w));
  }
  return StallingsGraph::build(e.rank, images);
}

bool is_surjective_endomorphism(const Endomorphism& e) {
  return StallingsGraph::build(e.rank, e.images) ==
         StallingsGraph::bouquet(e.rank);
}

}  // namespace fg
