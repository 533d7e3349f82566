#pragma once

#include "weylem/weylalg.hpp"

namespace weylem {

/// Named configuration: Lie type, diagram automorphism, ring instance,
/// base field and default points.  Loading a scenario sets the global
/// scalar-field configuration.
struct Scenario {
    std::string name;
    char type = 'A';
    int rank = 1;
    std::vector<int> sigma;  // node permutation (identity when trivial)
    int gamma_order = 1;
    field::MinPoly minpoly = field::MinPoly::X;
    ring::GammaRing::Kind kind = ring::GammaRing::Kind::Laurent;
    std::vector<long> default_points;

    std::shared_ptr<lie::LieAlgebra> L;
    std::shared_ptr<lie::FoldedDatum> fd;
    std::shared_ptr<lie::FoldedDatum> fd_trivial;
    std::shared_ptr<ring::GammaRing> A;
    std::shared_ptr<ring::GammaRing> A1;  // same ring with trivial group

    Scalar default_point() const { return Scalar(default_points.front()); }
};

std::vector<std::string> scenario_names();
Scenario load_scenario(const std::string& name);

} // namespace weylem
