#pragma once

#include "weylem/liealgebra.hpp"

namespace weylem::lie {

/// Folding data for (L, sigma): node orbits, kappa coefficients, folded
/// sl2-triples e_i = sqrt(kappa_i) sum e_i etc., the folded Cartan matrix
/// and the weight-restriction map onto the fixed-point subalgebra.
struct FoldedDatum {
    const LieAlgebra* L = nullptr;
    LieAut aut;                        // lifted automorphism
    std::vector<std::vector<int>> orbits;   // sorted by least element
    std::vector<int> orbit_of_node;
    std::vector<long> kappa;           // per orbit, 1 or 2
    std::vector<int> isotropy_order;   // |Gamma_i| per orbit
    std::vector<SVec> triple_e, triple_f, triple_h;  // per orbit, in L basis
    std::vector<std::vector<long>> folded_cartan;    // [i][j] = alpha_j(h_i)
    RootSystem folded_rs;              // root system on the orbit node set
    std::string folded_label;          // identified simple type, e.g. "C2"

    int gamma_order() const { return aut.sigma.order; }
    int num_orbits() const { return int(orbits.size()); }
    bool trivial() const { return aut.sigma.order == 1; }

    /// mu|_{h^Gamma}: lambda_i = kappa_i * sum_{j in orbit i} mu_j.
    Weight restrict_weight(const Weight& mu) const;
    /// sigma acting on g-weights through the node permutation.
    Weight sigma_on_weight(const Weight& mu) const;
    /// True when lambda is the restriction of a dominant g-weight (fails
    /// only for an odd short-orbit coefficient in type A_{2n}).
    bool is_restriction(const Weight& lambda) const;
    /// Some dominant g-weight restricting to lambda (throws if none).
    Weight lift_weight(const Weight& lambda) const;
};

FoldedDatum fold(const LieAlgebra& L, const DiagramAutomorphism& sigma);

struct TriangularSplit {
    std::vector<int> g_minus, g_zero, g_plus;  // basis indices of L
    bool g0_abelian = false;
};

/// Computes g^0 (centralizer of h^Gamma), the g^-/g^0/g^+ partition and
/// whether g^0 is abelian.
TriangularSplit check_g0_abelian(const LieAlgebra& L, const FoldedDatum& fd);

} // namespace weylem::lie
