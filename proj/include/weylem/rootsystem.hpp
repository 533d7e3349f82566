#pragma once

#include "weylem/scalar.hpp"

#include <string>
#include <vector>

namespace weylem::lie {

/// Integral weight in fundamental-weight coordinates: w[i] = mu(h_i).
using Weight = std::vector<long>;
/// Root in simple-root coordinates.
using RootVec = std::vector<long>;

/// Root system of a simple type with the standard (Humphreys) node
/// labeling.  Cartan matrix convention: cartan[i][j] = alpha_j(h_i),
/// i.e. column j holds the fundamental-weight coordinates of alpha_j.
class RootSystem {
public:
    static RootSystem build(char type, int rank);
    static bool valid_type(char type, int rank);
    /// Root system on an externally supplied Cartan matrix (e.g. a folded
    /// one, keeping the orbit node order); the label records the identified
    /// simple type.
    static RootSystem from_cartan(const std::vector<std::vector<long>>& cartan);

    char type() const { return type_; }
    int rank() const { return rank_; }
    const std::string& label() const { return label_; }

    long cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<std::vector<long>>& cartan_matrix() const { return cartan_; }
    long d(int i) const { return d_[i]; }  // (alpha_i, alpha_i)/2

    const std::vector<RootVec>& positive_roots() const { return positive_; }
    int num_positive() const { return int(positive_.size()); }
    /// Index of a positive root in positive_roots(); -1 if absent.
    int root_index(const RootVec& r) const;
    bool is_root(const RootVec& r) const { return root_index(r) >= 0; }

    static long height(const RootVec& r);
    const RootVec& highest_root() const { return positive_.back(); }

    /// beta(h_i) for beta given in root coordinates.
    long root_pairing(const RootVec& beta, int i) const;
    /// Fundamental-weight coordinates of a root.
    Weight weight_of_root(const RootVec& beta) const;
    /// (beta, gamma) under the W-invariant form with short roots of norm 2.
    long form_roots(const RootVec& a, const RootVec& b) const;
    /// Coroot h_beta expanded in the h_i basis (integral for roots).
    std::vector<long> coroot(const RootVec& beta) const;
    /// mu(h_beta) for an integral weight mu.
    long pair_weight_coroot(const Weight& mu, const RootVec& beta) const;

    /// Root coordinates of an integral weight (exact rationals).
    std::vector<mpq_class> root_coords_of_weight(const Weight& mu) const;
    /// Sum of the root coordinates of mu.
    mpq_class height_of_weight(const Weight& mu) const;

    Weight simple_reflection(int i, const Weight& mu) const;
    bool dominant(const Weight& mu) const;
    Weight dominant_representative(const Weight& mu) const;
    Weight longest_element_action(const Weight& mu) const;  // w0 . mu

    /// Dimension of the irreducible highest-weight module (Weyl formula).
    mpz_class weyl_dim(const Weight& mu) const;

    /// Matches a square integer matrix against the standard Cartan matrix
    /// of some simple type, allowing node permutations; identity labeling
    /// is preferred.  Returns e.g. "C2"; throws if no simple type matches.
    static std::string identify_cartan(const std::vector<std::vector<long>>& m);

private:
    char type_ = 'A';
    int rank_ = 0;
    std::string label_;
    std::vector<std::vector<long>> cartan_;
    std::vector<long> d_;
    std::vector<RootVec> positive_;

    void generate_positive_roots();
};

} // namespace weylem::lie
