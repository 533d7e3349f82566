#include "weylem/scenario.hpp"

#include <doctest.h>

using namespace weylem;
using namespace weylem::ring;

TEST_CASE("orbits under the scaling action") {
    field::set_minpoly(field::MinPoly::X);
    GammaRing A2(GammaRing::Kind::Laurent, 2);
    auto o = A2.orbit(Scalar(1));
    CHECK(o == std::vector<Scalar>{Scalar(1), Scalar(-1)});
    CHECK_THROWS_AS(A2.orbit(Scalar(0)), error);

    field::set_minpoly(field::MinPoly::X2PlusXPlus1);
    GammaRing A3(GammaRing::Kind::Laurent, 3);
    auto o3 = A3.orbit(Scalar(1));
    CHECK(o3.size() == 3);
    Scalar eta = Scalar::eta();
    CHECK((o3[1] == eta || o3[1] == eta * eta));
    CHECK(o3[1] * o3[2] == Scalar(1));  // the two nontrivial cube roots
}

TEST_CASE("xi components") {
    field::set_minpoly(field::MinPoly::X);
    GammaRing A(GammaRing::Kind::Laurent, 2);
    auto f = GammaRing::add(GammaRing::monomial(3), GammaRing::monomial(2));
    CHECK(A.xi_component(f, 0) == GammaRing::monomial(2));
    CHECK(A.xi_component(f, 1) == GammaRing::monomial(3));
    CHECK(A.xi_component(GammaRing::monomial(2), 1).empty());

    field::set_minpoly(field::MinPoly::X2PlusXPlus1);
    GammaRing A3(GammaRing::Kind::Laurent, 3);
    CHECK(A3.xi_component(GammaRing::monomial(4), 1) == GammaRing::monomial(4));
    CHECK(A3.xi_component(GammaRing::monomial(4), 0).empty());
}

TEST_CASE("fixed-ring generators") {
    field::set_minpoly(field::MinPoly::X);
    GammaRing lau(GammaRing::Kind::Laurent, 2);
    auto g = lau.fixed_ring_generators();
    CHECK(g == std::vector<GammaRing::Elem>{GammaRing::monomial(2), GammaRing::monomial(-2)});
    GammaRing poly(GammaRing::Kind::Poly, 2);
    CHECK(poly.fixed_ring_generators() == std::vector<GammaRing::Elem>{GammaRing::monomial(2)});
    GammaRing triv(GammaRing::Kind::Laurent, 1);
    CHECK(triv.fixed_ring_generators() ==
          std::vector<GammaRing::Elem>{GammaRing::monomial(1), GammaRing::monomial(-1)});
}

TEST_CASE("product ideal quotients") {
    field::set_minpoly(field::MinPoly::X);
    GammaRing A(GammaRing::Kind::Laurent, 2);
    // psi supported at {1, -1}, N = 1: J = (t^2 - 1), dim 2
    CHECK(product_ideal_at(A, {Scalar(1), Scalar(-1)}, 1).dim() == 2);
    // psi at {1}, N = 2: dim 2
    CHECK(product_ideal_at(A, {Scalar(1)}, 2).dim() == 2);
    // psi at {1, -1}, N = 2: dim 4
    RingQuotient q = product_ideal_at(A, {Scalar(1), Scalar(-1)}, 2);
    CHECK(q.dim() == 4);
    CHECK(q.gamma_invariant());
    // multiplication against evaluation at the support
    auto u = q.reduce(GammaRing::monomial(3));
    auto v = q.reduce(GammaRing::monomial(-1));
    auto w = q.mul(u, v);
    CHECK(q.eval(w, Scalar(-1)) == Scalar(1));
    CHECK(q.eval(w, Scalar(1)) == Scalar(1));
    // t * t^{-1} = 1 in the quotient
    CHECK(q.mul(q.reduce(GammaRing::monomial(1)), q.reduce(GammaRing::monomial(-1))) == q.one());
    CHECK_THROWS_AS(product_ideal_at(A, {Scalar(1), Scalar(1)}, 1), error);
}

TEST_CASE("induced action on an invariant quotient has order dividing m") {
    field::set_minpoly(field::MinPoly::X);
    GammaRing A(GammaRing::Kind::Laurent, 2);
    RingQuotient q = product_ideal_at(A, {Scalar(1), Scalar(-1)}, 2);
    for (int k = 0; k < q.dim(); ++k) {
        linalg::Vec v(q.dim());
        v[size_t(k)] = Scalar(1);
        CHECK(q.act_sigma(q.act_sigma(v)) == v);
    }
    RingQuotient bad = product_ideal_at(A, {Scalar(1)}, 2);
    CHECK(!bad.gamma_invariant());
    linalg::Vec one = bad.one();
    CHECK_THROWS_AS(bad.act_sigma(one), error);
}

TEST_CASE("power ideal bases have the right dimensions") {
    field::set_minpoly(field::MinPoly::X);
    GammaRing A(GammaRing::Kind::Laurent, 2);
    RingQuotient q = product_ideal_at(A, {Scalar(1), Scalar(-1)}, 3);  // dim 6
    CHECK(int(q.power_ideal_basis(1).size()) == 4);
    CHECK(int(q.power_ideal_basis(2).size()) == 2);
    CHECK(int(q.power_ideal_basis(3).size()) == 0);
}

TEST_CASE("weight functions: equivariant completion and sections") {
    Scenario sc = load_scenario("S3");
    WeightFunction psi;
    psi.insert_add(Scalar(1), lie::Weight{1, 0});
    CHECK(!psi.is_equivariant(*sc.A, *sc.fd));
    WeightFunction full = psi.equivariant_completion(*sc.A, *sc.fd);
    CHECK(full.is_equivariant(*sc.A, *sc.fd));
    CHECK(full.value(Scalar(-1)) == lie::Weight{0, 1});
    CHECK(full.orbit_section(*sc.A) == std::vector<Scalar>{Scalar(-1)});
    CHECK(full.wt_gamma(*sc.A, *sc.fd) == lie::Weight{2});
    // conflicting values on one orbit are rejected
    WeightFunction bad;
    bad.insert_add(Scalar(1), lie::Weight{1, 0});
    bad.insert_add(Scalar(-1), lie::Weight{1, 0});
    CHECK_THROWS_AS(bad.equivariant_completion(*sc.A, *sc.fd), error);
}
