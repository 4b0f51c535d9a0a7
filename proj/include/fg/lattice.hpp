#ifndef FG_LATTICE_HPP_
#define FG_LATTICE_HPP_

#include <vector>

#include "fg/stallings.hpp"
#include "fg/whitehead_types.hpp"

namespace fg {

// A deduplicated set of subgroups over a common alphabet, kept sorted by
// (vertex count, canonical edge list).
class SubgroupSet {
 public:
  SubgroupSet() = default;

  // Returns true if the graph was not already present.
  bool insert(const StallingsGraph& g);
  bool contains(const StallingsGraph& g) const;

  const std::vector<StallingsGraph>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const SubgroupSet&, const SubgroupSet&) = default;

 private:
  std::vector<StallingsGraph> members_;
};

// Gamma(H inter K): base component of the product graph.
StallingsGraph intersect(const StallingsGraph& h, const StallingsGraph& k);

// <H union K>.
StallingsGraph join(const StallingsGraph& h, const StallingsGraph& k);

// The fringe O_A(H): all principal overgroups of H, H included.
SubgroupSet fringe(const StallingsGraph& h);

// The principal overgroup L with Gamma(L) = image of the inclusion
// morphism Gamma(H) -> Gamma(K); L is a free factor of K.
// Throws NotSubgroup if H is not contained in K.
StallingsGraph takahasi_factor(const StallingsGraph& h,
                               const StallingsGraph& k);

// The fringe of H with respect to the basis B = phi^-1(A), where phi is
// the composite of the given moves (applied first to last):
// { phi^-1(K) : K in fringe(phi(H)) }.
SubgroupSet fringe_in_basis(const StallingsGraph& h,
                            const std::vector<WhiteheadAutomorphism>& moves);

}  // namespace fg

#endif  // FG_LATTICE_HPP_
