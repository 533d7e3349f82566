#include "weylem/scenario.hpp"

#include "oracle_sl2.hpp"

#include <doctest.h>

using namespace weylem;

namespace {
ring::WeightFunction point_psi(const Scenario& sc, const Scalar& p, lie::Weight w) {
    ring::WeightFunction psi;
    psi.insert_add(p, std::move(w));
    return psi;
}
} // namespace

TEST_CASE("sl2 local Weyl dimensions match the independent brute-force closure") {
    Scenario sc = load_scenario("S1");
    for (long m = 1; m <= 3; ++m) {
        // oracle at N = m+1, D = 2m+2; its own (N+1, D+2) re-check runs for
        // m <= 2 (the window gets large for m = 3, where the engine-side
        // stability re-run below covers the enlargement)
        oracle::Sl2PointOracle ora(m, Scalar(1), int(m) + 1, 2 * m + 2);
        int od = ora.weyl_dim();
        if (m <= 2) {
            oracle::Sl2PointOracle ora2(m, Scalar(1), int(m) + 2, 2 * m + 4);
            CHECK(od == ora2.weyl_dim());
        }
        CHECK(od == (1 << m));  // the frozen value

        weylmod::LocalWeylOptions opt;
        opt.check_stability = true;
        auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A,
                                            point_psi(sc, Scalar(1), {m}), opt);
        CHECK(W.dim() == od);
        CHECK(W.stable);
        CHECK(!W.mod.depth_capped);
        CHECK(W.verify_representation());
    }
}

TEST_CASE("oracle is insensitive to the support point") {
    field::set_minpoly(field::MinPoly::X);
    CHECK(oracle::Sl2PointOracle(2, Scalar(3), 3, 6).weyl_dim() == 4);
    CHECK(oracle::Sl2PointOracle(2, Scalar(1, 2), 3, 6).weyl_dim() == 4);
}

TEST_CASE("psi = 0 gives the trivial module") {
    Scenario sc = load_scenario("S1");
    auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, ring::WeightFunction{});
    CHECK(W.dim() == 1);
    CHECK(W.lambda == lie::Weight{0});
    CHECK(weylmod::min_annihilator_exponent(W) == 1);
}

TEST_CASE("character of W(2 omega) and its simple quotient") {
    Scenario sc = load_scenario("S1");
    auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {2}));
    std::map<lie::Weight, int> expected{{{2}, 1}, {{0}, 2}, {{-2}, 1}};
    CHECK(W.character() == expected);
    CHECK(W.character_weyl_invariant());

    auto S = weylmod::simple_quotient(W);
    CHECK(S.dim() == 3);  // the evaluation module V(2 omega)
    std::map<lie::Weight, int> simple_ch{{{2}, 1}, {{0}, 1}, {{-2}, 1}};
    CHECK(S.character() == simple_ch);
    CHECK(S.verify_representation());
    auto S2 = weylmod::simple_quotient(S);
    CHECK(S2.dim() == S.dim());
}

TEST_CASE("minuscule highest weight: simple equals Weyl (untwisted sl3)") {
    Scenario sc = load_scenario("S3");  // ambient sl3; use the trivial fold
    auto W = weylmod::untwisted_section_weyl_module(*sc.L, *sc.fd_trivial, *sc.A1,
                                                    point_psi(sc, Scalar(1), {1, 0}));
    CHECK(W.dim() == 3);
    CHECK(weylmod::simple_quotient(W).dim() == 3);
}

TEST_CASE("evaluation characters") {
    {
        Scenario sc = load_scenario("S1");
        auto psi = point_psi(sc, Scalar(2), {3});  // psi({2}) = 3 omega
        auto E = ema::build_truncated_ema(*sc.L, *sc.fd, *sc.A, psi, 2);
        auto hev = weylmod::Character::of(E, psi, {Scalar(2)});
        // hev(h (x) t^k) = 3 * 2^k
        lie::SVec h1 = E.bar('h', 0, ring::GammaRing::monomial(1));
        REQUIRE(h1.size() == 1);
        CHECK(h1[0].second * hev.on_basis[h1[0].first] == Scalar(6));
        // psi = 0: the zero functional
        auto zero = weylmod::Character::of(E, ring::WeightFunction{}, {});
        for (const auto& c : zero.on_basis) CHECK(c.is_zero());
    }
    {
        Scenario sc = load_scenario("S3");
        auto psi = point_psi(sc, Scalar(1), {1, 0}).equivariant_completion(*sc.A, *sc.fd);
        // abstract evaluation over the section {1}: hev(bar(h,1,1)) = omega_1(h1) = 1
        CHECK(weylmod::hev_on_bar(*sc.fd, *sc.A, psi, 0, ring::GammaRing::monomial(0)) ==
              Scalar(1));
    }
}

TEST_CASE("twisted sl3: dimension 3 with the folded character") {
    Scenario sc = load_scenario("S3");
    weylmod::LocalWeylOptions opt;
    opt.check_stability = true;
    auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {1, 0}),
                                        opt);
    CHECK(W.dim() == 3);
    CHECK(W.lambda == lie::Weight{2});
    std::map<lie::Weight, int> expected{{{2}, 1}, {{0}, 1}, {{-2}, 1}};
    CHECK(W.character() == expected);
    CHECK(W.stable);
    CHECK(W.verify_representation());
    CHECK(weylmod::min_annihilator_exponent(W) == 1);
}

TEST_CASE("character restriction through the A2 fold") {
    Scenario sc = load_scenario("S3");
    // weights of V(omega_1) of sl3 restrict to {2, 0, -2}
    std::map<lie::Weight, int> untwisted{{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}};
    std::map<lie::Weight, int> expected{{{2}, 1}, {{0}, 1}, {{-2}, 1}};
    CHECK(weylmod::restrict_character(untwisted, *sc.fd) == expected);
}

TEST_CASE("twisting functor: restriction of the untwisted module") {
    {
        Scenario sc = load_scenario("S3");
        auto psi = point_psi(sc, Scalar(1), {1, 0});
        auto Wt = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, psi);
        auto psic = psi.equivariant_completion(*sc.A, *sc.fd);
        auto Wu = weylmod::untwisted_section_weyl_module(
            *sc.L, *sc.fd_trivial, *sc.A1, psic.restrict_to(psic.orbit_section(*sc.A)));
        auto Wr = weylmod::twist_restrict(Wu, *sc.L, *sc.fd, *sc.A);
        CHECK(Wr.dim() == 3);
        CHECK(Wr.character() == Wt.character());
        CHECK(Wr.verify_representation());
    }
    {
        // sl4: W(omega_1 at 1) restricts to the 4-dimensional twisted module
        // with the short fundamental weight of C2
        Scenario sc = load_scenario("S2");
        auto Wu = weylmod::untwisted_section_weyl_module(*sc.L, *sc.fd_trivial, *sc.A1,
                                                         point_psi(sc, Scalar(1), {1, 0, 0}));
        CHECK(Wu.dim() == 4);
        auto Wr = weylmod::twist_restrict(Wu, *sc.L, *sc.fd, *sc.A);
        CHECK(Wr.dim() == 4);
        CHECK(Wr.lambda == lie::Weight{1, 0});
        CHECK(Wr.verify_representation());
        auto Wt = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A,
                                             point_psi(sc, Scalar(1), {1, 0, 0}));
        CHECK(Wt.character() == Wr.character());
    }
    {
        // trivial Gamma: twisting is the identity on modules
        Scenario sc = load_scenario("S1");
        auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {1}));
        auto Wr = weylmod::twist_restrict(W, *sc.L, *sc.fd_trivial, *sc.A1);
        CHECK(Wr.dim() == W.dim());
        CHECK(Wr.character() == W.character());
    }
}

TEST_CASE("order-3 twisting equivalence (D4 triality)") {
    Scenario sc = load_scenario("S4");
    auto psi = point_psi(sc, Scalar(1), {1, 0, 0, 0});
    auto Wt = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, psi);
    CHECK(Wt.dim() == 8);
    auto psic = psi.equivariant_completion(*sc.A, *sc.fd);
    auto Wu = weylmod::untwisted_section_weyl_module(
        *sc.L, *sc.fd_trivial, *sc.A1, psic.restrict_to(psic.orbit_section(*sc.A)));
    auto Wr = weylmod::twist_restrict(Wu, *sc.L, *sc.fd, *sc.A);
    CHECK(Wr.dim() == 8);
    CHECK(Wr.character() == Wt.character());
    CHECK(Wr.verify_representation());
}

TEST_CASE("tensor products") {
    Scenario sc = load_scenario("S1");
    auto W1 = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {1}));
    auto W2 = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(2), {1}));
    auto T = weylmod::tensor(W1, W2, *sc.L, *sc.fd, *sc.A);
    CHECK(T.dim() == 4);
    CHECK(T.verify_representation());
    // matches the direct construction at the union support
    ring::WeightFunction both;
    both.insert_add(Scalar(1), {1});
    both.insert_add(Scalar(2), {1});
    auto D = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, both);
    CHECK(D.dim() == 4);
    CHECK(T.character() == D.character());
    // W (x) trivial = W
    auto triv = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, ring::WeightFunction{});
    auto Wt = weylmod::tensor(W1, triv, *sc.L, *sc.fd, *sc.A);
    CHECK(Wt.dim() == W1.dim());
    CHECK(Wt.character() == W1.character());
}

TEST_CASE("twisted tensor over two orbits has dimension 9") {
    Scenario sc = load_scenario("S3");
    auto W1 = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {1, 0}));
    auto W2 = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(2), {1, 0}));
    auto T = weylmod::tensor(W1, W2, *sc.L, *sc.fd, *sc.A);
    CHECK(T.dim() == 9);
    CHECK(T.verify_representation());
}

TEST_CASE("annihilator exponents") {
    Scenario sc = load_scenario("S1");
    auto W1 = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {1}));
    CHECK(weylmod::min_annihilator_exponent(W1) == 1);  // evaluation module
    auto W2 = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {2}));
    CHECK(weylmod::min_annihilator_exponent(W2) == 2);
    CHECK(weylmod::annihilator_bound(*sc.fd, lie::Weight{2}) == 2);
    // the A_{2n} bound doubles
    Scenario s3 = load_scenario("S3");
    CHECK(weylmod::annihilator_bound(*s3.fd, lie::Weight{2}) == 4);
}

TEST_CASE("isotypic decomposition bookkeeping") {
    Scenario sc = load_scenario("S1");
    auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {2}));
    auto rep = weylmod::isotypic_check(W);
    CHECK(rep.ok);
    std::vector<std::pair<lie::Weight, int>> expected{{{2}, 1}, {{0}, 1}};
    CHECK(rep.highest_weight_vectors == expected);
    // a simple module has exactly one highest-weight vector
    auto S = weylmod::simple_quotient(W);
    auto srep = weylmod::isotypic_check(S);
    CHECK(srep.ok);
    CHECK(srep.highest_weight_vectors.size() == 1);
    // twisted dim-3 module: one vector at 2 omega
    Scenario s3 = load_scenario("S3");
    auto Wt = weylmod::local_weyl_module(*s3.L, *s3.fd, *s3.A, point_psi(s3, Scalar(1), {1, 0}));
    auto trep = weylmod::isotypic_check(Wt);
    CHECK(trep.ok);
    CHECK(trep.highest_weight_vectors ==
          std::vector<std::pair<lie::Weight, int>>{{{2}, 1}});
}

TEST_CASE("zero-module gate for non-restricted weights") {
    Scenario sc = load_scenario("S3");
    auto Z = weylmod::local_weyl_module_lambda(*sc.L, *sc.fd, *sc.A, {1}, sc.default_point());
    CHECK(Z.zero());
    CHECK(Z.dim() == 0);
    auto W = weylmod::local_weyl_module_lambda(*sc.L, *sc.fd, *sc.A, {2}, sc.default_point());
    CHECK(!W.zero());
    CHECK(W.dim() == 3);
}

TEST_CASE("Garland membership") {
    {
        Scenario sc = load_scenario("S1");
        auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {1}));
        CHECK(weylmod::garland_span_check(W, 0, ring::GammaRing::monomial(1), 1));
        CHECK(weylmod::garland_span_check(W, 0, ring::GammaRing::monomial(1), 2));
        // lambda = 0: both sides vanish
        auto T = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, ring::WeightFunction{});
        CHECK(weylmod::garland_span_check(T, 0, ring::GammaRing::monomial(1), 0));
    }
    {
        Scenario sc = load_scenario("S3");
        auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, point_psi(sc, Scalar(1), {1, 0}));
        CHECK(weylmod::garland_span_check(W, 0, ring::GammaRing::monomial(1), 2));
        // inhomogeneous or invariant elements are rejected in the twisted case
        CHECK_THROWS_AS(weylmod::garland_span_check(
                            W, 0,
                            ring::GammaRing::add(ring::GammaRing::monomial(1),
                                                 ring::GammaRing::monomial(2)),
                            2),
                        error);
        CHECK_THROWS_AS(weylmod::garland_span_check(W, 0, ring::GammaRing::monomial(2), 2),
                        error);
    }
}

TEST_CASE("multi-coordinate highest weights") {
    {
        // untwisted sl3 at one point, lambda = omega1 + omega2: the two
        // fundamental factors give 3 x 3 = 9
        Scenario sc = load_scenario("S3");
        weylmod::LocalWeylOptions opt;
        opt.check_stability = true;
        auto W = weylmod::untwisted_section_weyl_module(*sc.L, *sc.fd_trivial, *sc.A1,
                                                        point_psi(sc, Scalar(1), {1, 1}), opt);
        CHECK(W.dim() == 9);
        CHECK(W.stable);
        CHECK(W.verify_representation());
        CHECK(W.character_weyl_invariant());
        auto iso = weylmod::isotypic_check(W);
        CHECK(iso.ok);
        CHECK(iso.highest_weight_vectors ==
              std::vector<std::pair<lie::Weight, int>>{{{1, 1}, 1}, {{0, 0}, 1}});
    }
    {
        // twisted S2 with both orbit coordinates nonzero, against the
        // untwisted restriction
        Scenario sc = load_scenario("S2");
        auto psi = point_psi(sc, Scalar(1), {1, 1, 0});
        auto Wt = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, psi);
        CHECK(Wt.lambda == lie::Weight{1, 1});
        CHECK(Wt.dim() == 24);
        CHECK(Wt.verify_representation());
        auto psic = psi.equivariant_completion(*sc.A, *sc.fd);
        auto Wu = weylmod::untwisted_section_weyl_module(
            *sc.L, *sc.fd_trivial, *sc.A1, psic.restrict_to(psic.orbit_section(*sc.A)));
        CHECK(Wu.dim() == 24);
        CHECK(weylmod::restrict_character(Wu.character(), *sc.fd) == Wt.character());
    }
}

TEST_CASE("hev is independent of the orbit section") {
    Scenario sc = load_scenario("S2");
    auto psi =
        point_psi(sc, Scalar(1), {0, 1, 0}).equivariant_completion(*sc.A, *sc.fd);
    auto E = ema::build_truncated_ema(*sc.L, *sc.fd, *sc.A, psi, 2);
    auto h1 = weylmod::Character::of(E, psi, {Scalar(1)});
    auto h2 = weylmod::Character::of(E, psi, {Scalar(-1)});
    for (int i = 0; i < E.dim(); ++i) CHECK(h1.on_basis[i] == h2.on_basis[i]);
}
