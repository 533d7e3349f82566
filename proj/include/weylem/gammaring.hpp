#pragma once

#include "weylem/fold.hpp"
#include "weylem/linalg.hpp"

#include <map>

namespace weylem::ring {

/// k[t, t^-1] or k[t] with the scaling action sigma(t) = zeta t for a
/// primitive |Gamma|-th root of unity zeta.  Elements are sparse Laurent
/// polynomials over the configured scalar field.
class GammaRing {
public:
    enum class Kind { Laurent, Poly };

    GammaRing(Kind kind, int gamma_order);

    Kind kind() const { return kind_; }
    int gamma_order() const { return m_; }
    Scalar zeta() const { return zeta_; }

    using Elem = std::map<long, Scalar>;  // exponent -> coefficient

    static Elem monomial(long k, Scalar c = Scalar(1));
    static Elem add(const Elem& a, const Elem& b);
    static Elem mul(const Elem& a, const Elem& b);
    Elem pow(const Elem& a, long e) const;

    bool valid_element(const Elem& a) const;  // no negative exponents in k[t]

    /// sigma acting on functions: t -> zeta t.
    Elem act_sigma(const Elem& a) const;
    Elem act(int power, const Elem& a) const;  // sigma^power
    bool is_invariant_under(int isotropy_order, const Elem& a) const;

    /// sigma acting on rational points (so that sigma(m_x) = m_{sigma x}).
    Scalar point_sigma(const Scalar& a) const;
    Scalar point_act(int power, const Scalar& a) const;
    /// Gamma-orbit of a point; throws on a fixed point (freeness violation).
    std::vector<Scalar> orbit(const Scalar& a) const;
    /// Least orbit representative under the deterministic scalar order.
    Scalar orbit_representative(const Scalar& a) const;

    int xi_of_exponent(long k) const { return int(((k % m_) + m_) % m_); }
    Elem xi_component(const Elem& a, int xi) const;

    /// Generators of the fixed ring A^Gamma.
    std::vector<Elem> fixed_ring_generators() const;

    static Scalar eval(const Elem& a, const Scalar& point);

private:
    Kind kind_;
    int m_;
    Scalar zeta_;
};

/// Finitely supported map from rational points to dominant g-weights.
struct WeightFunction {
    std::vector<std::pair<Scalar, lie::Weight>> support;  // sorted, nonzero values

    static WeightFunction make(std::vector<std::pair<Scalar, lie::Weight>> entries);
    lie::Weight value(const Scalar& p) const;
    bool empty() const { return support.empty(); }
    void insert_add(const Scalar& p, const lie::Weight& w);

    bool is_equivariant(const GammaRing& A, const lie::FoldedDatum& fd) const;
    /// Orbit completion: psi(sigma^k x) := sigma^k psi(x) for every support
    /// point; throws if the given values conflict.
    WeightFunction equivariant_completion(const GammaRing& A, const lie::FoldedDatum& fd) const;
    /// One point per orbit (the least representative present in the support).
    std::vector<Scalar> orbit_section(const GammaRing& A) const;
    WeightFunction restrict_to(const std::vector<Scalar>& points) const;

    lie::Weight wt(int rank) const;  // sum of values
    /// wt_Gamma: restriction of the section sum (independent of the section).
    lie::Weight wt_gamma(const GammaRing& A, const lie::FoldedDatum& fd) const;
};

/// A/J^N for J a product of distinct point ideals, with the monomial basis
/// 1, t, ..., t^{d-1} of the quotient (d = N * #points).
class RingQuotient {
public:
    RingQuotient() = default;
    RingQuotient(const GammaRing& A, std::vector<Scalar> points, int N);

    int dim() const { return d_; }
    int N() const { return N_; }
    const std::vector<Scalar>& points() const { return points_; }
    const GammaRing& ring() const { return *ring_; }
    bool gamma_invariant() const { return invariant_; }

    linalg::Vec reduce(const GammaRing::Elem& a) const;
    linalg::Vec mul(const linalg::Vec& a, const linalg::Vec& b) const;
    linalg::Vec one() const;

    /// Induced sigma-action; only available for invariant ideals.
    linalg::Vec act_sigma(const linalg::Vec& a) const;

    Scalar eval(const linalg::Vec& a, const Scalar& point) const;

    /// Basis of the image of J^k in A/J^N.
    std::vector<linalg::Vec> power_ideal_basis(int k) const;

    /// Natural projection onto a quotient by a larger ideal (the target
    /// modulus must divide a power situation J^N subset J'^{N'}).
    linalg::Vec project_to(const RingQuotient& target, const linalg::Vec& a) const;

private:
    const GammaRing* ring_ = nullptr;
    std::vector<Scalar> points_;
    int N_ = 0;
    int d_ = 0;
    bool invariant_ = false;
    std::vector<Scalar> modulus_;           // monic, degree d
    std::vector<linalg::Vec> tpow_;         // t^k mod g for k up to 2d
    linalg::Vec tinv_;                      // t^{-1} mod g (Laurent only)
    linalg::Vec monomial_reduced(long k) const;
};

/// J(psi)^N quotient (all support points) and the section variant.
RingQuotient product_ideal(const GammaRing& A, const WeightFunction& psi, int N);
RingQuotient product_ideal_at(const GammaRing& A, const std::vector<Scalar>& points, int N);

} // namespace weylem::ring
