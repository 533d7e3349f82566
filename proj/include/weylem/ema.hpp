#pragma once

#include "weylem/gammaring.hpp"

namespace weylem::ema {

using lie::SVec;
using lie::Weight;

/// Xi-eigenvector of the lifted automorphism on g.
struct GEigenVector {
    SVec vec;        // in the Lie algebra basis
    int deg = 0;     // tau v = zeta^deg v
    Weight folded_weight;
    int part = 0;    // -1 lowering, 0 Cartan, +1 raising
    long fheight = 0;  // folded height of the weight
};

/// Truncated equivariant map algebra (g (x) A/J(psi)^N)^Gamma with an
/// explicit basis {eigenvector (x) monomial}, bracket table, triangular
/// partition and h^Gamma-weight per basis vector.  A trivial fold gives the
/// full untwisted g (x) A/J^N.
class TruncatedEMA {
public:
    TruncatedEMA(const lie::LieAlgebra& L, const lie::FoldedDatum& fd,
                 ring::RingQuotient quot);

    const lie::LieAlgebra& lie_algebra() const { return *L_; }
    const lie::FoldedDatum& fold() const { return *fd_; }
    const ring::RingQuotient& quotient() const { return quot_; }

    int dim() const { return int(basis_.size()); }
    struct BasisLabel {
        int eig;   // index into eigenvectors()
        int mono;  // ring monomial exponent (reduced basis index)
    };
    const BasisLabel& label(int idx) const { return basis_[idx]; }
    const std::vector<GEigenVector>& eigenvectors() const { return eig_; }

    const Weight& weight_of(int idx) const { return eig_[basis_[idx].eig].folded_weight; }
    int part_of(int idx) const { return eig_[basis_[idx].eig].part; }
    long fheight_of(int idx) const { return eig_[basis_[idx].eig].fheight; }
    int xi_of(int idx) const { return eig_[basis_[idx].eig].deg; }

    std::vector<int> lowering_indices() const;
    std::vector<int> cartan_indices() const;
    std::vector<int> raising_indices() const;

    const SVec& bracket(int a, int b) const { return table_[size_t(a) * dim() + b]; }
    SVec bracket(const SVec& u, const SVec& v) const;

    /// Symmetrized element: sum over Gamma/Gamma_i of gamma(x_i (x) a)
    /// with x the Chevalley generator of the given flavor ('e','f','h').
    SVec bar(char flavor, int node, const ring::GammaRing::Elem& a) const;

    /// Expresses an ambient element, given per Lie-basis-index ring parts,
    /// in the EMA basis; throws if it is not Gamma-fixed.
    SVec express_ambient(const std::vector<linalg::Vec>& ring_part_per_lie_index) const;

    /// Ambient representation (ring vector per Lie basis index).
    std::vector<linalg::Vec> ambient_of(const SVec& v) const;

    bool verify_antisymmetry(linalg::Mode mode = linalg::default_mode()) const;
    bool verify_jacobi(linalg::Mode mode = linalg::default_mode()) const;
    /// [g_xi (x) A_-xi, g_tau (x) A_-tau] lands in degree xi+tau, and
    /// h^Gamma-weights add under the bracket.
    bool verify_gradings(linalg::Mode mode = linalg::default_mode()) const;

private:
    const lie::LieAlgebra* L_;
    const lie::FoldedDatum* fd_;
    ring::RingQuotient quot_;
    std::vector<GEigenVector> eig_;
    std::vector<std::vector<Scalar>> eig_expand_;  // lie basis -> eigen coords
    std::vector<BasisLabel> basis_;
    std::vector<std::vector<int>> index_of_;  // [eig][mono] -> basis index or -1
    std::vector<SVec> table_;

    void build_eigenbasis();
    void build_basis();
    void build_table();
    SVec express_pair(int eig_idx, const linalg::Vec& ring_vec) const;
};

/// L_N = (g (x) A/J(psi)^N)^Gamma for an equivariant psi (or any psi when
/// the fold is trivial).  Checks the freeness of the action on the support.
TruncatedEMA build_truncated_ema(const lie::LieAlgebra& L, const lie::FoldedDatum& fd,
                                 const ring::GammaRing& A, const ring::WeightFunction& psi,
                                 int N);

/// Untwisted g (x) A/J(psi_x)^N over an orbit section x; the caller owns a
/// trivial FoldedDatum for the same algebra.
TruncatedEMA build_untwisted_section_ema(const lie::LieAlgebra& L,
                                         const lie::FoldedDatum& trivial_fd,
                                         const ring::GammaRing& A,
                                         const std::vector<Scalar>& section, int N);

/// The untwisting linear isomorphism L_N -> g (x) A/J(psi_x)^N given by
/// restriction of germs to the section.
struct UntwistIso {
    const TruncatedEMA* source;
    const TruncatedEMA* target;
    std::vector<SVec> image;  // per source basis index, in target coordinates

    SVec apply(const SVec& v) const;
    bool verify_bijective() const;
    bool verify_bracket_compat(linalg::Mode mode = linalg::default_mode()) const;
};

UntwistIso untwist_isomorphism(const TruncatedEMA& twisted, const TruncatedEMA& untwisted);

} // namespace weylem::ema
