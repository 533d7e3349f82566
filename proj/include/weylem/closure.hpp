#pragma once

#include "weylem/ema.hpp"

#include <map>

namespace weylem::weylmod {

using lie::SVec;
using lie::Weight;

/// Input data for the highest-weight cyclic closure: the truncated algebra,
/// the character of its Cartan part on the cyclic vector, the highest
/// weight, and the integrability seeds (f_i (x) 1)^{lambda(h_i)+1} w.
struct ClosureInput {
    const ema::TruncatedEMA* alg = nullptr;
    Weight lambda;                      // folded highest weight
    std::vector<Scalar> hev;            // per EMA basis index (0 off Cartan)
    std::vector<std::pair<SVec, long>> seeds;  // (lowering element, power)
    long depth_cap = 0;
};

/// Weight-graded cyclic module produced by the closure.
struct ClosureModule {
    std::vector<Weight> level_weights;  // by depth, then lex
    std::vector<int> level_dims;
    std::vector<int> level_offsets;
    int dim = 0;
    int cyclic = 0;  // global index of the image of w (level 0)
    bool zero_module = false;
    bool depth_capped = false;  // nonzero content at the depth cap
    std::vector<linalg::Matrix> action;  // per EMA basis index, dim x dim

    int level_of_global(int g) const;
    std::map<Weight, int> character() const;
};

/// Builds the maximal cyclic module with relations: raising part kills w,
/// the Cartan part acts by hev, and the given seed powers vanish.  Works
/// level by level: each weight space is the quotient of the symbol space
/// {lowering generator x basis vector above} by the bracket syzygies, the
/// downward images of known relations and the seed relations; the relation
/// set is closed under the full algebra action to a fixpoint.
ClosureModule cyclic_closure(const ClosureInput& in);

} // namespace weylem::weylmod
