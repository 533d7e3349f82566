#pragma once

#include "weylem/weylmod.hpp"

namespace weylem::weylalg {

using ring::GammaRing;

/// Tensor-factor presentation of the highest-weight-space algebra model:
/// one symmetric power S^{r_j}(A^{Gamma_j}) per node orbit.
struct SymAlgebraDescriptor {
    bool zero_algebra = false;  // lambda not a restriction (folded A_{2n})
    struct Factor {
        int orbit = 0;       // orbit index
        int node = 0;        // chosen section node
        long r = 0;          // multiplicity
        int isotropy = 1;    // |Gamma_j|
        std::string presentation;
    };
    std::vector<Factor> factors;
};

SymAlgebraDescriptor build_descriptor(const lie::Weight& lambda, const lie::FoldedDatum& fd,
                                      const GammaRing& A);

/// Point of maxSpec of the model: per factor an unordered tuple of points
/// of maxSpec A^{Gamma_j}, each stored as the least representative of a
/// Gamma_j-orbit of rational points, sorted.
struct MaxSpecPoint {
    std::vector<std::vector<Scalar>> points;  // per factor, canonical order

    void canonicalize(const SymAlgebraDescriptor& d, const lie::FoldedDatum& fd,
                      const GammaRing& A);
    bool operator==(const MaxSpecPoint& o) const;
};

ring::WeightFunction maxspec_to_psi(const MaxSpecPoint& mm, const SymAlgebraDescriptor& d,
                                    const lie::FoldedDatum& fd, const GammaRing& A);

MaxSpecPoint psi_to_maxspec(const ring::WeightFunction& psi, const SymAlgebraDescriptor& d,
                            const lie::FoldedDatum& fd, const GammaRing& A);

/// sym^j_lambda(a) evaluated at mm: the sum of a over the factor's points.
/// Throws unless it matches hev_{psi_mm} on the corresponding bar element.
Scalar tau_eval(const MaxSpecPoint& mm, const SymAlgebraDescriptor& d,
                const lie::FoldedDatum& fd, const GammaRing& A, int factor,
                const GammaRing::Elem& a);

// ---- symmetric Laurent polynomials --------------------------------------

/// Fully expanded (Laurent) polynomial in nvars variables.
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<long>, Scalar> terms;

    static MultiPoly zero(int nvars) { return {nvars, {}}; }
    void add_term(const std::vector<long>& e, const Scalar& c);
    bool is_symmetric() const;
    MultiPoly mul(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

/// Polynomial in e_1, ..., e_nvars with the last allowed negative exponents.
struct ElementaryPoly {
    int nvars = 0;
    std::map<std::vector<long>, Scalar> terms;  // exponents of e_1..e_nvars
};

/// The l-th elementary symmetric polynomial in nvars variables.
MultiPoly elementary_symmetric(int nvars, int l);

/// Rewrites a symmetric Laurent polynomial in terms of e_1..e_m, e_m^{-1}
/// by clearing denominators with a power of e_m.
ElementaryPoly sym_laurent_rewrite(const MultiPoly& f);

MultiPoly expand_elementary(const ElementaryPoly& p);

// ---- coinvariants --------------------------------------------------------

/// Presentation of (S^n A)_Gamma for the Laurent ring: the zero algebra when
/// |Gamma| does not divide n, else generators e_m, e_2m, ..., e_n, e_n^{-1}.
struct CoinvariantPresentation {
    bool zero_algebra = false;
    long n = 0, m = 0;
    std::vector<long> generator_degrees;  // m, 2m, ..., n; the last is invertible
};

CoinvariantPresentation coinvariants_laurent(long n, long m);

/// Graded dimensions of (S^n k[t])_Gamma computed from the definition
/// (quotient by the ideal generated by the nonzero isotypic components).
std::vector<long> coinvariant_graded_dims_poly(long n, long m, long maxdeg);

/// Graded dimensions of S^r(k[u]) with deg u = m.
std::vector<long> sym_power_fixed_graded_dims(long r, long m, long maxdeg);

} // namespace weylem::weylalg
