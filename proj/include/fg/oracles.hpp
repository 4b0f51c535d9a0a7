#ifndef FG_ORACLES_HPP_
#define FG_ORACLES_HPP_

#include <cstdint>
#include <optional>

#include "fg/properties.hpp"
#include "fg/stallings.hpp"

namespace fg {

// Brute-force reference implementations, deliberately independent of the
// production algorithms. Test-suite only; bounded by explicit budgets.

// Exhaustive free-factor check: BFS over the full Whitehead orbit of
// basis(L) rewritten over K, restricted to tuples no longer than the
// start. Throws BudgetExceeded when the rewritten tuple exceeds
// length_budget.
bool oracle_free_factor(const StallingsGraph& l, const StallingsGraph& k,
                        std::size_t length_budget);

// Scans all reduced x with |x| <= max_len and 2 <= d <= max_exp for
// x not in H, x^d in H. One-sided: absence proves nothing.
std::optional<RootWitness> oracle_root_search(const StallingsGraph& h,
                                              int max_len, int max_exp);

// For `trials` random extensions K = join(H, <random words>): checks
// that takahasi_factor(H, K) lies in fringe(H) and is a free factor
// of K. Deterministic given the seed.
bool oracle_fringe_is_takahasi(const StallingsGraph& h, int trials,
                               std::uint64_t seed);

}  // namespace fg

#endif  // FG_ORACLES_HPP_
