#include "weylem/scenario.hpp"

namespace weylem {

std::vector<std::string> scenario_names() { return {"S1", "S2", "S3", "S4"}; }

Scenario load_scenario(const std::string& name) {
    Scenario s;
    s.name = name;
    if (name == "S1") {
        s.type = 'A';
        s.rank = 1;
        s.sigma = {0};
        s.gamma_order = 1;
        s.minpoly = field::MinPoly::X;
        s.default_points = {1, 2, 3, 5, 7};
    } else if (name == "S2") {
        s.type = 'A';
        s.rank = 3;
        s.sigma = {2, 1, 0};  // (1 3)
        s.gamma_order = 2;
        s.minpoly = field::MinPoly::X;
        s.default_points = {1, 2, 3, 5, 7};
    } else if (name == "S3") {
        s.type = 'A';
        s.rank = 2;
        s.sigma = {1, 0};  // (1 2)
        s.gamma_order = 2;
        s.minpoly = field::MinPoly::X2Minus2;
        s.default_points = {1, 2, 3, 5, 7};
    } else if (name == "S4") {
        s.type = 'D';
        s.rank = 4;
        s.sigma = {2, 1, 3, 0};  // (1 3 4)
        s.gamma_order = 3;
        s.minpoly = field::MinPoly::X2PlusXPlus1;
        s.default_points = {1, 2, 3, 5, 7};
    } else {
        throw error("unknown scenario: " + name);
    }
    field::set_minpoly(s.minpoly);
    auto rs = lie::RootSystem::build(s.type, s.rank);
    s.L = std::make_shared<lie::LieAlgebra>(lie::LieAlgebra::chevalley(rs));
    auto sig = lie::DiagramAutomorphism::from_permutation(s.L->root_system(), s.sigma);
    if (sig.order != s.gamma_order) throw error("scenario: automorphism order mismatch");
    s.fd = std::make_shared<lie::FoldedDatum>(lie::fold(*s.L, sig));
    s.fd_trivial = std::make_shared<lie::FoldedDatum>(
        lie::fold(*s.L, lie::DiagramAutomorphism::identity(s.rank)));
    s.A = std::make_shared<ring::GammaRing>(s.kind, s.gamma_order);
    s.A1 = std::make_shared<ring::GammaRing>(s.kind, 1);
    return s;
}

} // namespace weylem
