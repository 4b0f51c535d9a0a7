#include "fg/whitehead.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "fg/errors.hpp"

namespace fg {

WhiteheadAutomorphism WhiteheadAutomorphism::type_one(
    std::vector<int> perm, std::vector<bool> positive) {
  WhiteheadAutomorphism m;
  m.kind = Kind::kTypeI;
  m.rank = static_cast<int>(perm.size());
  m.perm = std::move(perm);
  m.positive = std::move(positive);
  return m;
}

WhiteheadAutomorphism WhiteheadAutomorphism::type_two(
    int rank, Letter multiplier, std::vector<WhiteheadAction> actions) {
  if (static_cast<int>(actions.size()) != rank ||
      actions[static_cast<std::size_t>(multiplier.gen)] !=
          WhiteheadAction::kFix) {
    throw Error("type II move must fix the multiplier's generator");
  }
  WhiteheadAutomorphism m;
  m.kind = Kind::kTypeII;
  m.rank = rank;
  m.multiplier = multiplier;
  m.actions = std::move(actions);
  return m;
}

WhiteheadAutomorphism WhiteheadAutomorphism::inverse() const {
  if (kind == Kind::kTypeI) {
    std::vector<int> inv_perm(perm.size());
    std::vector<bool> inv_pos(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      inv_perm[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
      inv_pos[static_cast<std::size_t>(perm[i])] = positive[i];
    }
    return type_one(std::move(inv_perm), std::move(inv_pos));
  }
  // (x -> m x)^-1 = (x -> m^-1 x), and likewise for the other actions
  return type_two(rank, multiplier.inverse(), actions);
}

Endomorphism WhiteheadAutomorphism::to_endomorphism() const {
  Endomorphism e;
  e.rank = rank;
  if (kind == Kind::kTypeI) {
    for (int g = 0; g < rank; ++g) {
      e.images.emplace_back(
          Letter(perm[static_cast<std::size_t>(g)],
                 positive[static_cast<std::size_t>(g)]));
    }
    return e;
  }
  Word m(multiplier);
  Word mi = invert(m);
  for (int g = 0; g < rank; ++g) {
    Word x{Letter(g, true)};
    switch (actions[static_cast<std::size_t>(g)]) {
      case WhiteheadAction::kFix:
        e.images.push_back(x);
        break;
      case WhiteheadAction::kLeft:
        e.images.push_back(multiply(m, x));
        break;
      case WhiteheadAction::kRight:
        e.images.push_back(multiply(x, mi));
        break;
      case WhiteheadAction::kConjugate:
        e.images.push_back(multiply(multiply(m, x), mi));
        break;
    }
  }
  return e;
}

Endomorphism composite(const std::vector<WhiteheadAutomorphism>& moves) {
  if (moves.empty()) {
    throw Error("composite of an empty move sequence has no defined rank");
  }
  Endomorphism e = Endomorphism::identity(moves.front().rank);
  for (const auto& m : moves) e = compose(m.to_endomorphism(), e);
  return e;
}

const std::vector<WhiteheadAutomorphism>& enumerate_whitehead(int rank) {
  if (rank < 1) throw Error("rank must be at least 1");
  static std::mutex mu;
  static std::map<int, std::vector<WhiteheadAutomorphism>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rank);
  if (it != cache.end()) return it->second;

  std::vector<WhiteheadAutomorphism> moves;

  // type I: all signed permutations, in lexicographic order
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int signs = 0; signs < (1 << rank); ++signs) {
      std::vector<bool> positive(static_cast<std::size_t>(rank));
      for (int g = 0; g < rank; ++g) {
        positive[static_cast<std::size_t>(g)] = ((signs >> g) & 1) == 0;
      }
      moves.push_back(WhiteheadAutomorphism::type_one(perm, positive));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  // type II: every multiplier letter, every non-identity action vector
  constexpr WhiteheadAction kActions[] = {
      WhiteheadAction::kFix, WhiteheadAction::kLeft, WhiteheadAction::kRight,
      WhiteheadAction::kConjugate};
  for (int arc = 0; arc < 2 * rank; ++arc) {
    Letter m = Letter::from_arc(arc);
    int others = rank - 1;
    long long count = 1;
    for (int i = 0; i < others; ++i) count *= 4;
    for (long long code = 1; code < count; ++code) {  // skip the identity
      long long c = code;
      std::vector<WhiteheadAction> actions(static_cast<std::size_t>(rank),
                                           WhiteheadAction::kFix);
      for (int g = 0; g < rank; ++g) {
        if (g == m.gen) continue;
        actions[static_cast<std::size_t>(g)] = kActions[c % 4];
        c /= 4;
      }
      moves.push_back(WhiteheadAutomorphism::type_two(rank, m, actions));
    }
  }

  return cache.emplace(rank, std::move(moves)).first->second;
}

Tuple apply_move(const WhiteheadAutomorphism& m, const Tuple& t) {
  Endomorphism e = m.to_endomorphism();
  Tuple out;
  out.reserve(t.size());
  for (const Word& w : t) out.push_back(apply_endomorphism(e, w));
  return out;
}

std::size_t total_length(const Tuple& t) {
  std::size_t n = 0;
  for (const Word& w : t) n += w.length();
  return n;
}

MinimizationResult minimize_tuple(const Tuple& t, int rank) {
  MinimizationResult result;
  result.tuple = t;
  result.length = total_length(t);
  const auto& moves = enumerate_whitehead(rank);
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& m : moves) {
      Tuple candidate = apply_move(m, result.tuple);
      std::size_t len = total_length(candidate);
      if (len < result.length) {
        result.tuple = std::move(candidate);
        result.length = len;
        result.trace.push_back(m);
        improved = true;
        break;  // first strictly decreasing move in enumeration order
      }
    }
  }
  return result;
}

bool is_distinct_letter_tuple(const Tuple& t) {
  std::vector<bool> used;
  for (const Word& w : t) {
    if (w.length() != 1) return false;
    int g = w.letters().front().gen;
    if (static_cast<std::size_t>(g) >= used.size()) {
      used.resize(static_cast<std::size_t>(g) + 1, false);
    }
    if (used[static_cast<std::size_t>(g)]) return false;
    used[static_cast<std::size_t>(g)] = true;
  }
  return true;
}

Tuple rewrite_over(const StallingsGraph& l, const StallingsGraph& k) {
  if (!leq(l, k)) throw NotSubgroup("L is not a subgroup of K");
  Tuple t;
  for (const Word& w : l.basis()) t.push_back(k.express(w));
  return t;
}

bool is_free_factor(const StallingsGraph& l, const StallingsGraph& k) {
  Tuple t = rewrite_over(l, k);
  int ambient = k.subgroup_rank();
  if (t.empty()) return true;  // the trivial subgroup
  if (ambient == 0) return false;
  MinimizationResult m = minimize_tuple(t, ambient);
  return m.length == t.size() && is_distinct_letter_tuple(m.tuple);
}

bool is_primitive(const Word& w, const StallingsGraph& k) {
  if (w.empty()) throw EmptyWord("the empty word is never primitive");
  if (!k.contains(w)) throw NotMember("word is not a member of the subgroup");
  return is_free_factor(StallingsGraph::build(k.rank(), {w}), k);
}

}  // namespace fg
