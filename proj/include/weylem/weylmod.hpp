#pragma once

#include "weylem/closure.hpp"

#include <memory>
#include <optional>

namespace weylem::weylmod {

/// Evaluation character of the Cartan part attached to psi: the value on
/// h (x) a is sum over an orbit section M of psi(m)(h) a(m).
struct Character {
    std::vector<Scalar> on_basis;  // per EMA basis index; zero off the Cartan part

    static Character of(const ema::TruncatedEMA& alg, const ring::WeightFunction& psi,
                        const std::vector<Scalar>& section);
};

/// Abstract hev on a bar element (no truncation): sum over the section of
/// psi(x)(h_{gamma k}) * (gamma a)(x).
Scalar hev_on_bar(const lie::FoldedDatum& fd, const ring::GammaRing& A,
                  const ring::WeightFunction& psi, int node, const ring::GammaRing::Elem& a);

/// Weight-graded module with action matrices for every algebra basis
/// element and a distinguished cyclic (highest-weight) vector.
struct WeightModule {
    std::shared_ptr<const ema::TruncatedEMA> alg;
    ring::WeightFunction psi;
    lie::Weight lambda;
    ClosureModule mod;
    bool zero() const { return mod.zero_module; }
    bool stable = true;

    int dim() const { return mod.dim; }
    std::map<lie::Weight, int> character() const { return mod.character(); }

    bool verify_representation(linalg::Mode mode = linalg::default_mode()) const;
    bool verify_highest_weight(const Character& hev) const;
    /// Characters are invariant under the folded Weyl group.
    bool character_weyl_invariant() const;
};

struct LocalWeylOptions {
    std::optional<int> N;
    std::optional<long> depth;
    bool check_stability = false;
};

/// Annihilation-bound default truncation exponent: lambda(h_theta), or
/// 2 lambda(h_theta) for a nontrivially folded A_{2n}.
long annihilator_bound(const lie::FoldedDatum& fd, const lie::Weight& lambda);

/// The local Weyl module W^Gamma(psi) built by linear closure over the
/// truncated algebra.  psi is completed to an equivariant function first.
WeightModule local_weyl_module(const lie::LieAlgebra& L, const lie::FoldedDatum& fd,
                               const ring::GammaRing& A, const ring::WeightFunction& psi_in,
                               LocalWeylOptions opt = {});

/// Entry point by folded highest weight at a single default point; returns
/// a zero-flagged module when lambda is not the restriction of a g-weight
/// (odd short-orbit coefficient in type A_{2n}).
WeightModule local_weyl_module_lambda(const lie::LieAlgebra& L, const lie::FoldedDatum& fd,
                                      const ring::GammaRing& A, const lie::Weight& lambda,
                                      const Scalar& point, LocalWeylOptions opt = {});

/// Quotient by the largest submodule missing the highest weight line.
WeightModule simple_quotient(const WeightModule& W);

std::map<lie::Weight, int> restrict_character(const std::map<lie::Weight, int>& ch,
                                              const lie::FoldedDatum& fd);

/// Untwisted local Weyl module over g (x) A/J(psi_x)^N for the section
/// restriction psi_x of an equivariant psi.
WeightModule untwisted_section_weyl_module(const lie::LieAlgebra& L,
                                           const lie::FoldedDatum& trivial_fd,
                                           const ring::GammaRing& A,
                                           const ring::WeightFunction& psi_section,
                                           LocalWeylOptions opt = {});

/// Pulls an untwisted module back through the untwisting isomorphism and
/// re-grades its weights by restriction.
WeightModule twist_restrict(const WeightModule& untwisted, const lie::LieAlgebra& L,
                            const lie::FoldedDatum& fd, const ring::GammaRing& A);

/// Diagonal-action tensor product over the common truncation.
WeightModule tensor(const WeightModule& W1, const WeightModule& W2, const lie::LieAlgebra& L,
                    const lie::FoldedDatum& fd, const ring::GammaRing& A);

/// Least k >= 1 with (g (x) J(psi)^k)^Gamma acting as zero.
int min_annihilator_exponent(const WeightModule& W);

struct IsotypicReport {
    bool ok = false;
    std::vector<std::pair<lie::Weight, int>> highest_weight_vectors;  // weight, multiplicity
};

/// Joint kernels of the folded raising operators per weight, matched
/// against Weyl-dimension bookkeeping.
IsotypicReport isotypic_check(const WeightModule& W);

/// Membership test for the Garland-identity consequence: the vector
/// (bar e_i (x) a^delta)^(l) (bar f_i (x) 1)^(l+1) w lies in
/// sum_s bar(f_i (x) a^{delta(l-s)}) U_h w.
bool garland_span_check(const WeightModule& W, int orbit, const ring::GammaRing::Elem& a,
                        long ell);

} // namespace weylem::weylmod
