#include "weylem/liealgebra.hpp"

#include <doctest.h>

using namespace weylem;
using namespace weylem::lie;

TEST_CASE("sl2 in the Chevalley basis") {
    field::set_minpoly(field::MinPoly::X);
    LieAlgebra L = LieAlgebra::chevalley(RootSystem::build('A', 1));
    CHECK(L.dim() == 3);
    // [e, f] = h
    CHECK(L.bracket(L.e(0), L.f(0)) == SVec{{L.h(0), Scalar(1)}});
    CHECK(L.bracket(L.h(0), L.e(0)) == SVec{{L.e(0), Scalar(2)}});
    CHECK(L.bracket(L.h(0), L.f(0)) == SVec{{L.f(0), Scalar(-2)}});
}

TEST_CASE("A2: consistent sign on [e1, e2] and full Jacobi") {
    LieAlgebra L = LieAlgebra::chevalley(RootSystem::build('A', 2));
    CHECK(L.dim() == 8);
    SVec br = L.bracket(L.e(0), L.e(1));
    REQUIRE(br.size() == 1);
    int theta = L.root_system().root_index(RootVec{1, 1});
    CHECK(br[0].first == theta);
    CHECK((br[0].second == Scalar(1) || br[0].second == Scalar(-1)));
    CHECK(L.verify_jacobi());
    CHECK(L.verify_antisymmetry());
}

TEST_CASE("D4 has dimension 28 and passes the structure checks") {
    LieAlgebra L = LieAlgebra::chevalley(RootSystem::build('D', 4));
    CHECK(L.dim() == 28);  // 2*12 + 4
    CHECK(L.verify_antisymmetry(linalg::Mode::Serial));
    CHECK(L.verify_antisymmetry(linalg::Mode::Parallel));
    CHECK(L.verify_jacobi(linalg::Mode::Parallel));
}

TEST_CASE("structure constants carry |N| = p+1 (G2 reaches 3)") {
    LieAlgebra L = LieAlgebra::chevalley(RootSystem::build('G', 2));
    CHECK(L.verify_jacobi());
    // [x_a1, x_{a1+a2}] has |N| = 2, [x_a1, x_{2a1+a2}] has |N| = 3
    int a1 = L.root_system().root_index(RootVec{1, 0});
    int r11 = L.root_system().root_index(RootVec{1, 1});
    int r21 = L.root_system().root_index(RootVec{2, 1});
    SVec b1 = L.bracket(a1, r11);
    REQUIRE(b1.size() == 1);
    Scalar c1 = b1[0].second;
    CHECK((c1 == Scalar(2) || c1 == Scalar(-2)));
    SVec b2 = L.bracket(a1, r21);
    REQUIRE(b2.size() == 1);
    Scalar c2 = b2[0].second;
    CHECK((c2 == Scalar(3) || c2 == Scalar(-3)));
}

TEST_CASE("automorphism lifts: identity, order 2, order 3") {
    {
        LieAlgebra L = LieAlgebra::chevalley(RootSystem::build('A', 1));
        LieAut t = lift_automorphism(L, DiagramAutomorphism::identity(1));
        for (int i = 0; i < L.dim(); ++i) {
            CHECK(t.image[i] == i);
            CHECK(t.coeff[i] == Scalar(1));
        }
    }
    {
        LieAlgebra L = LieAlgebra::chevalley(RootSystem::build('A', 3));
        auto sigma = DiagramAutomorphism::from_permutation(L.root_system(), {2, 1, 0});
        CHECK(sigma.order == 2);
        LieAut t = lift_automorphism(L, sigma);
        CHECK(t.verify_bracket_compat());
        CHECK(t.verify_order());
        CHECK(t.image[L.e(0)] == L.e(2));
    }
    {
        LieAlgebra L = LieAlgebra::chevalley(RootSystem::build('D', 4));
        auto sigma = DiagramAutomorphism::from_permutation(L.root_system(), {2, 1, 3, 0});
        CHECK(sigma.order == 3);
        LieAut t = lift_automorphism(L, sigma);
        CHECK(t.verify_bracket_compat(linalg::Mode::Parallel));
        CHECK(t.verify_order());
    }
}

TEST_CASE("non-invariant permutations are rejected") {
    RootSystem b3 = RootSystem::build('B', 3);
    CHECK_THROWS_AS(DiagramAutomorphism::from_permutation(b3, {2, 1, 0}), error);
    RootSystem a3 = RootSystem::build('A', 3);
    CHECK_THROWS_AS(DiagramAutomorphism::from_permutation(a3, {1, 0, 2}), error);
}
