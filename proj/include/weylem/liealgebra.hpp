#pragma once

#include "weylem/linalg.hpp"
#include "weylem/rootsystem.hpp"

#include <optional>
#include <vector>

namespace weylem::lie {

/// Sparse vector over a basis: sorted (index, coefficient) pairs.
using SVec = std::vector<std::pair<int, Scalar>>;

SVec sv_add(const SVec& a, const SVec& b);
SVec sv_scale(const SVec& a, const Scalar& c);
SVec sv_normalize(SVec v);  // sort, merge, drop zeros
bool sv_is_zero(const SVec& v);

/// Permutation of Dynkin nodes preserving the Cartan matrix.
struct DiagramAutomorphism {
    std::vector<int> perm;  // sigma[i]
    int order = 1;

    static DiagramAutomorphism identity(int rank);
    static DiagramAutomorphism from_permutation(const RootSystem& rs, std::vector<int> perm);
    bool is_identity() const { return order == 1; }
};

/// Simple Lie algebra in a Chevalley basis.  Basis layout:
///   [0, P)      x_beta for positive roots (root order of the RootSystem),
///   [P, 2P)     x_{-beta} in the same order,
///   [2P, 2P+n)  h_1, ..., h_n.
/// Structure constants follow the extraspecial-pair sign convention
/// (positive sign on extraspecial pairs); Jacobi is checked after
/// construction rather than assumed.
class LieAlgebra {
public:
    static LieAlgebra chevalley(const RootSystem& rs);

    const RootSystem& root_system() const { return rs_; }
    int dim() const { return dim_; }
    int num_positive() const { return int(rs_.positive_roots().size()); }
    int rank() const { return rs_.rank(); }

    int index_pos_root(int k) const { return k; }
    int index_neg_root(int k) const { return num_positive() + k; }
    int index_cartan(int i) const { return 2 * num_positive() + i; }

    bool is_cartan(int idx) const { return idx >= 2 * num_positive(); }
    /// Root of the basis vector: positive-root index with sign, or nullopt
    /// for Cartan elements.
    std::optional<std::pair<int, int>> root_of(int idx) const;  // (pos index, +-1)
    /// h^Gamma-independent g-weight of a basis vector (0 for Cartan part).
    Weight weight_of(int idx) const;

    const SVec& bracket(int a, int b) const { return table_[a * dim_ + b]; }
    SVec bracket(const SVec& u, const SVec& v) const;

    /// e_i, f_i, h_i as basis indices.
    int e(int i) const;
    int f(int i) const;
    int h(int i) const { return index_cartan(i); }

    bool verify_antisymmetry(linalg::Mode mode = linalg::default_mode()) const;
    bool verify_jacobi(linalg::Mode mode = linalg::default_mode()) const;

private:
    RootSystem rs_;
    int dim_ = 0;
    std::vector<SVec> table_;
};

/// Bracket-preserving lift of a diagram automorphism: permutes root
/// vectors with signs, permutes the h_i.
struct LieAut {
    const LieAlgebra* L = nullptr;
    DiagramAutomorphism sigma;
    std::vector<int> image;      // basis index -> basis index (root vectors)
    std::vector<Scalar> coeff;   // sign carried by the image (1 on Cartan)

    SVec apply(const SVec& v) const;
    SVec apply_basis(int idx) const;
    bool verify_bracket_compat(linalg::Mode mode = linalg::default_mode()) const;
    bool verify_order() const;
};

/// Extends sigma to the algebra: e_i -> e_{sigma i} etc., signs on
/// non-simple root vectors solved from the structure constants.  Throws if
/// the extension fails bracket compatibility.
LieAut lift_automorphism(const LieAlgebra& L, const DiagramAutomorphism& sigma);

} // namespace weylem::lie
