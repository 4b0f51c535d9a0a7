#ifndef FG_ALGEXT_HPP_
#define FG_ALGEXT_HPP_

#include "fg/lattice.hpp"
#include "fg/stallings.hpp"

namespace fg {

// AE(H): the principal overgroups of H that contain no other principal
// overgroup of H as a proper free factor. Always contains H.
SubgroupSet algebraic_extensions(const StallingsGraph& h);

// True iff H is contained in no proper free factor of K.
// Throws NotSubgroup if H is not contained in K.
bool is_algebraic(const StallingsGraph& h, const StallingsGraph& k);

// The unique L with H <=alg L <=ff K: the minimal member of AE(H) that
// is a free factor of K. Throws NotSubgroup; throws
// InternalInconsistency if the minimum is not unique (theory violation).
StallingsGraph algebraic_closure(const StallingsGraph& h,
                                 const StallingsGraph& k);

// All single-pair quotients of L whose rank does not exceed rank(L):
// exactly the elementary algebraic extensions of L.
SubgroupSet elementary_algebraic_successors(const StallingsGraph& l);

// Reachability of K from H along elementary algebraic successors.
bool is_ealg_extension(const StallingsGraph& h, const StallingsGraph& k);

// The greatest e-algebraic extension of H.
StallingsGraph ealg_closure(const StallingsGraph& h);

bool is_ealg_closed(const StallingsGraph& h);

// rank(H) <= rank(K) for every K in AE(H).
bool is_compressed(const StallingsGraph& h);

}  // namespace fg

#endif  // FG_ALGEXT_HPP_
