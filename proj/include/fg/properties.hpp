#ifndef FG_PROPERTIES_HPP_
#define FG_PROPERTIES_HPP_

#include <optional>

#include "fg/lattice.hpp"
#include "fg/stallings.hpp"

namespace fg {

// A decidable subgroup property usable with property_closure().
struct PropertyPredicate {
  enum class Name { kMalnormal, kPure, kPPure, kEalgClosed };
  Name name = Name::kPure;
  int prime = 0;  // for kPPure

  static PropertyPredicate malnormal() { return {Name::kMalnormal, 0}; }
  static PropertyPredicate pure() { return {Name::kPure, 0}; }
  static PropertyPredicate p_pure(int p);
  static PropertyPredicate ealg_closed() { return {Name::kEalgClosed, 0}; }
};

// A proper root of a subgroup element: x not in H with x^exponent in H.
struct RootWitness {
  Word x;
  int exponent = 0;
};

// H^g inter H = 1 for all g outside H: every non-diagonal component of
// the full self-product of Gamma(H) must be a tree.
bool is_malnormal(const StallingsGraph& h);

// Searches for x not in H with x^d in H for some d >= 2 (d coprime to
// `coprime_to` when given). Complete: returns nullopt only if no such
// element exists. Throws BudgetExceeded when the graph exceeds
// vertex_cap (never approximates silently).
std::optional<RootWitness> root_witness(const StallingsGraph& h,
                                        std::optional<int> coprime_to,
                                        int vertex_cap = 12);

bool is_pure(const StallingsGraph& h, int vertex_cap = 12);
bool is_p_pure(const StallingsGraph& h, int p, int vertex_cap = 12);

bool satisfies(const StallingsGraph& h, const PropertyPredicate& p,
               int vertex_cap = 12);

// The unique minimal member of AE(H) satisfying P. Throws
// InternalInconsistency if the minimum is not unique.
StallingsGraph property_closure(const StallingsGraph& h,
                                const PropertyPredicate& p,
                                int vertex_cap = 12);

// Pure (resp. p-pure) closure by saturation: adjoin a root witness until
// none remains. Agrees with property_closure(pure / p-pure).
StallingsGraph pure_closure_iterative(const StallingsGraph& h,
                                      std::optional<int> coprime_to,
                                      int vertex_cap = 12);

}  // namespace fg

#endif  // FG_PROPERTIES_HPP_
