#include "weylem/json_io.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <random>

using namespace weylem;
using io::ordered_json;

namespace {

struct SuiteResult {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

ring::WeightFunction fundamental_psi(const Scenario& sc, int node, const Scalar& point) {
    lie::Weight w(sc.rank, 0);
    w[node] = 1;
    ring::WeightFunction psi;
    psi.insert_add(point, w);
    return sc.fd->trivial() ? psi : psi.equivariant_completion(*sc.A, *sc.fd);
}

void suite_liecore(const Scenario& sc, SuiteResult& r) {
    const auto& L = *sc.L;
    r.expect(L.verify_antisymmetry(), "antisymmetry on " + L.root_system().label());
    r.expect(L.verify_jacobi(), "Jacobi on " + L.root_system().label());
    r.expect(sc.fd->aut.verify_bracket_compat(), "lift preserves brackets");
    r.expect(sc.fd->aut.verify_order(), "lift has order m");
    auto ts = lie::check_g0_abelian(L, *sc.fd);
    r.expect(ts.g0_abelian, "g^0 abelian");
    // restriction maps dominant weights to dominant weights
    for (int i = 0; i < sc.rank; ++i) {
        lie::Weight w(sc.rank, 0);
        w[i] = 1;
        r.expect(sc.fd->folded_rs.dominant(sc.fd->restrict_weight(w)),
                 "restriction of omega_" + std::to_string(i + 1) + " dominant");
    }
    // the folded Cartan matrix is a valid Cartan matrix of simple type
    try {
        lie::RootSystem::identify_cartan(sc.fd->folded_cartan);
        r.expect(true, "folded Cartan identifiable");
    } catch (const error&) {
        r.expect(false, "folded Cartan identifiable");
    }
}

void suite_gammaring(const Scenario& sc, SuiteResult& r) {
    const auto& A = *sc.A;
    int m = A.gamma_order();
    // grading: products of graded components stay graded, checked on
    // monomials up to a degree bound
    bool graded = true;
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            auto p = ring::GammaRing::mul(ring::GammaRing::monomial(a),
                                          ring::GammaRing::monomial(b));
            for (const auto& [k, c] : p)
                if (A.xi_of_exponent(k) != A.xi_of_exponent(a + b)) graded = false;
        }
    r.expect(graded, "monomial grading multiplicative");
    // xi projections sum to the identity
    ring::GammaRing::Elem f;
    f[-3] = Scalar(2);
    f[0] = Scalar(1);
    f[2] = Scalar(5);
    ring::GammaRing::Elem sum;
    for (int xi = 0; xi < m; ++xi) sum = ring::GammaRing::add(sum, A.xi_component(f, xi));
    r.expect(sum == f, "xi components sum to the identity");
    // orbits are free away from 0
    r.expect(int(A.orbit(Scalar(2)).size()) == m, "orbit size equals the group order");
    if (m > 1) {
        bool threw = false;
        try {
            A.orbit(Scalar(0));
        } catch (const error&) {
            threw = true;
        }
        r.expect(threw, "fixed point rejected");
    }
    // quotient dimensions are additive over support points
    ring::WeightFunction psi = fundamental_psi(sc, 0, sc.default_point());
    for (int N = 1; N <= 3; ++N) {
        auto q = ring::product_ideal(*sc.A, psi, N);
        r.expect(q.dim() == N * int(psi.support.size()), "dim A/J^N additive (N=" +
                                                            std::to_string(N) + ")");
    }
}

void suite_ema(const Scenario& sc, SuiteResult& r) {
    ring::WeightFunction psi = fundamental_psi(sc, 0, sc.default_point());
    for (int N = 1; N <= 3; ++N) {
        auto E = ema::build_truncated_ema(*sc.L, *sc.fd, *sc.A, psi, N);
        r.expect(E.verify_antisymmetry(), "EMA antisymmetry (N=" + std::to_string(N) + ")");
        r.expect(E.verify_jacobi(), "EMA Jacobi (N=" + std::to_string(N) + ")");
        r.expect(E.verify_gradings(), "EMA gradings (N=" + std::to_string(N) + ")");
    }
    if (!sc.fd->trivial()) {
        auto E = ema::build_truncated_ema(*sc.L, *sc.fd, *sc.A, psi, 2);
        auto section = psi.orbit_section(*sc.A);
        auto U = ema::build_untwisted_section_ema(*sc.L, *sc.fd_trivial, *sc.A, section, 2);
        auto iso = ema::untwist_isomorphism(E, U);
        r.expect(iso.verify_bijective(), "untwist bijective");
        r.expect(iso.verify_bracket_compat(), "untwist preserves brackets");
    }
}

void suite_weylmod(const Scenario& sc, SuiteResult& r) {
    ring::WeightFunction psi = fundamental_psi(sc, 0, sc.default_point());
    weylmod::LocalWeylOptions opt;
    opt.check_stability = true;
    auto W = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, psi, opt);
    r.expect(!W.zero(), "module nonzero");
    r.expect(W.stable, "stable under N+1, D+2");
    r.expect(W.verify_representation(), "representation property");
    auto section = psi.orbit_section(*sc.A);
    auto hev = weylmod::Character::of(*W.alg, W.psi, section);
    r.expect(W.verify_highest_weight(hev), "highest-weight relations");
    r.expect(W.character_weyl_invariant(), "character Weyl-invariant");
    auto S = weylmod::simple_quotient(W);
    auto S2 = weylmod::simple_quotient(S);
    r.expect(S.dim() == S2.dim(), "simple quotient idempotent");
    r.expect(S.character().at(W.lambda) == 1, "simple keeps the lambda line");
    int k = weylmod::min_annihilator_exponent(W);
    r.expect(k <= weylmod::annihilator_bound(*sc.fd, W.lambda), "annihilator within the bound");
    auto iso = weylmod::isotypic_check(W);
    r.expect(iso.ok, "isotypic bookkeeping");
    // hev is independent of the orbit-section choice
    if (!sc.fd->trivial()) {
        std::vector<Scalar> other;
        for (const Scalar& x : section) other.push_back(sc.A->point_sigma(x));
        auto hev2 = weylmod::Character::of(*W.alg, W.psi, other);
        bool same = true;
        for (int i = 0; i < W.alg->dim(); ++i)
            if (!(hev.on_basis[i] == hev2.on_basis[i])) same = false;
        r.expect(same, "hev section-independent");
    }
}

void suite_weylalg(const Scenario& sc, SuiteResult& r, unsigned seed) {
    // descriptor for a small dominant lambda: twice the restriction of omega_1
    lie::Weight lambda = sc.fd->restrict_weight([&] {
        lie::Weight w(sc.rank, 0);
        w[0] = 1;
        return w;
    }());
    auto d = weylalg::build_descriptor(lambda, *sc.fd, *sc.A);
    r.expect(!d.zero_algebra, "descriptor nonzero for a restricted weight");

    std::mt19937_64 rng(seed);
    auto random_point = [&]() {
        // small nonzero rationals, distinct orbits with high probability
        long num = long(rng() % 19) + 1;
        long den = long(rng() % 3) + 1;
        return Scalar(num, den);
    };
    bool round_trip = true, eval_ok = true;
    for (int iter = 0; iter < 100 && round_trip; ++iter) {
        weylalg::MaxSpecPoint mm;
        mm.points.resize(d.factors.size());
        for (size_t k = 0; k < d.factors.size(); ++k)
            for (long i = 0; i < d.factors[k].r; ++i) mm.points[k].push_back(random_point());
        try {
            mm.canonicalize(d, *sc.fd, *sc.A);
            auto psi = weylalg::maxspec_to_psi(mm, d, *sc.fd, *sc.A);
            auto back = weylalg::psi_to_maxspec(psi, d, *sc.fd, *sc.A);
            if (!(back == mm)) round_trip = false;
            if (iter < 10) {
                for (size_t k = 0; k < d.factors.size(); ++k) {
                    if (d.factors[k].r == 0) continue;
                    for (long deg = 0; deg <= 4; ++deg) {
                        ring::GammaRing::Elem a =
                            ring::GammaRing::monomial(deg * d.factors[k].isotropy);
                        weylalg::tau_eval(mm, d, *sc.fd, *sc.A, int(k), a);  // throws on mismatch
                    }
                }
            }
        } catch (const error&) {
            eval_ok = false;
            break;
        }
    }
    r.expect(round_trip, "maxSpec <-> psi round trip (100 samples)");
    r.expect(eval_ok, "tau_eval matches hev (degree <= 4)");

    // symmetric Laurent rewriting round-trips
    {
        weylalg::MultiPoly f = weylalg::MultiPoly::zero(2);
        f.add_term({1, 0}, Scalar(1));
        f.add_term({0, 1}, Scalar(1));
        f.add_term({-2, 1}, Scalar(3));
        f.add_term({1, -2}, Scalar(3));
        auto e = weylalg::sym_laurent_rewrite(f);
        r.expect(weylalg::expand_elementary(e) == f, "sym_laurent_rewrite round trip");
    }

    // coinvariants of S^{rm}(Laurent) against S^r(fixed ring)
    int m = sc.A->gamma_order();
    if (m > 1) {
        auto zero = weylalg::coinvariants_laurent(m + 1, m);
        r.expect(zero.zero_algebra, "coinvariants vanish when the order does not divide n");
        for (long rr = 1; rr <= 3; ++rr) {
            auto pres = weylalg::coinvariants_laurent(rr * m, m);
            bool degrees_ok = long(pres.generator_degrees.size()) == rr;
            for (long i = 0; i < rr && degrees_ok; ++i)
                if (pres.generator_degrees[size_t(i)] != (i + 1) * m) degrees_ok = false;
            r.expect(degrees_ok, "coinvariant presentation degrees (r=" + std::to_string(rr) + ")");
            auto lhs = weylalg::coinvariant_graded_dims_poly(rr * m, m, 8);
            auto rhs = weylalg::sym_power_fixed_graded_dims(rr, m, 8);
            r.expect(lhs == rhs, "coinvariant graded dimensions (r=" + std::to_string(rr) + ")");
        }
    }
}

int run_suites(const std::string& suite, const std::string& scenario, unsigned seed) {
    std::vector<std::string> scenarios =
        scenario.empty() ? scenario_names() : std::vector<std::string>{scenario};
    ordered_json report = ordered_json::array();
    bool all_ok = true;
    for (const auto& name : scenarios) {
        Scenario sc = load_scenario(name);
        std::vector<std::pair<std::string, void (*)(const Scenario&, SuiteResult&)>> table = {
            {"liecore", suite_liecore},
            {"gammaring", suite_gammaring},
            {"ema", suite_ema},
            {"weylmod", suite_weylmod},
        };
        for (const auto& [sname, fn] : table) {
            if (suite != "all" && suite != sname) continue;
            SuiteResult res;
            fn(sc, res);
            ordered_json entry;
            entry["scenario"] = name;
            entry["suite"] = sname;
            entry["checks"] = res.checks;
            entry["failures"] = res.failures;
            report.push_back(entry);
            if (!res.failures.empty()) all_ok = false;
        }
        if (suite == "all" || suite == "weylalg") {
            SuiteResult res;
            suite_weylalg(sc, res, seed);
            ordered_json entry;
            entry["scenario"] = name;
            entry["suite"] = "weylalg";
            entry["checks"] = res.checks;
            entry["failures"] = res.failures;
            report.push_back(entry);
            if (!res.failures.empty()) all_ok = false;
        }
    }
    ordered_json out;
    out["suites"] = report;
    out["ok"] = all_ok;
    std::cout << out.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

lie::Weight parse_lambda(const std::string& s, size_t expected) {
    ordered_json j = ordered_json::parse(s);
    lie::Weight w;
    if (j.is_array())
        for (const auto& c : j) w.push_back(c.get<long>());
    else
        w.push_back(j.get<long>());
    if (w.size() != expected)
        throw error("lambda must have " + std::to_string(expected) + " coordinates");
    return w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equivariant map algebras, local Weyl modules and the\n"
                 "highest-weight-space algebra model."};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread cap (0 = default)");

    std::string scenario = "S1", psi_str, psi2_str, lambda_str, suite = "all";
    int opt_N = 0;
    long opt_depth = -1;
    unsigned seed = 20240901;

    auto add_scenario = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario, "scenario name (S1..S4)")->required();
    };

    auto* cmd_fold = app.add_subcommand("fold", "folded Cartan data of the scenario");
    add_scenario(cmd_fold);

    auto* cmd_lw = app.add_subcommand("local-weyl", "local Weyl module for psi");
    add_scenario(cmd_lw);
    cmd_lw->add_option("--psi", psi_str, "psi as JSON: {\"point\": [coeffs...]}");
    cmd_lw->add_option("--lambda", lambda_str, "folded highest weight (uses the default point)");
    cmd_lw->add_option("--N", opt_N, "truncation exponent override");
    cmd_lw->add_option("--depth", opt_depth, "depth window override");
    bool dump_algebra = false;
    cmd_lw->add_flag("--dump-algebra", dump_algebra, "include the truncated algebra tables");

    auto* cmd_simple = app.add_subcommand("simple", "simple quotient of the local Weyl module");
    add_scenario(cmd_simple);
    cmd_simple->add_option("--psi", psi_str, "psi as JSON");
    cmd_simple->add_option("--lambda", lambda_str, "folded highest weight");
    cmd_simple->add_option("--N", opt_N, "truncation exponent override");

    auto* cmd_char = app.add_subcommand("char", "character of the local Weyl module");
    add_scenario(cmd_char);
    cmd_char->add_option("--psi", psi_str, "psi as JSON")->required();
    cmd_char->add_option("--N", opt_N, "truncation exponent override");

    auto* cmd_tensor = app.add_subcommand("tensor", "tensor product of two local Weyl modules");
    add_scenario(cmd_tensor);
    cmd_tensor->add_option("--psi", psi_str, "first psi")->required();
    cmd_tensor->add_option("--psi2", psi2_str, "second psi")->required();
    cmd_tensor->add_option("--N", opt_N, "truncation exponent override");

    auto* cmd_ann = app.add_subcommand("annihilator", "least annihilating power of J(psi)");
    add_scenario(cmd_ann);
    cmd_ann->add_option("--psi", psi_str, "psi as JSON")->required();
    cmd_ann->add_option("--N", opt_N, "truncation exponent override");

    auto* cmd_bba = app.add_subcommand("bba", "symmetric-power model of the weight-space algebra");
    add_scenario(cmd_bba);
    cmd_bba->add_option("--lambda", lambda_str, "folded dominant weight")->required();

    auto* cmd_bbacheck = app.add_subcommand("bba-check", "bijection and evaluation suites");
    add_scenario(cmd_bbacheck);
    cmd_bbacheck->add_option("--seed", seed, "randomization seed");

    auto* cmd_verify = app.add_subcommand("verify", "invariant suites");
    cmd_verify->add_option("--suite", suite,
                           "suite name: liecore, gammaring, ema, weylmod, weylalg, all");
    cmd_verify->add_option("--scenario", scenario, "restrict to one scenario");
    cmd_verify->add_option("--seed", seed, "randomization seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (threads > 0) linalg::set_threads(threads);

    try {
        if (cmd_fold->parsed()) {
            Scenario sc = load_scenario(scenario);
            std::cout << io::fold_json(sc).dump(2) << "\n";
            return 0;
        }
        auto build_module = [&](const Scenario& sc) {
            weylmod::LocalWeylOptions opt;
            if (opt_N > 0) opt.N = opt_N;
            if (opt_depth >= 0) opt.depth = opt_depth;
            opt.check_stability = true;
            if (!lambda_str.empty()) {
                lie::Weight lambda = parse_lambda(lambda_str, sc.fd->orbits.size());
                return weylmod::local_weyl_module_lambda(*sc.L, *sc.fd, *sc.A, lambda,
                                                         sc.default_point(), opt);
            }
            if (psi_str.empty()) throw error("need --psi or --lambda");
            auto psi = io::parse_psi(ordered_json::parse(psi_str), sc.rank);
            return weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, psi, opt);
        };
        if (cmd_lw->parsed()) {
            Scenario sc = load_scenario(scenario);
            auto W = build_module(sc);
            ordered_json out = io::module_json(W);
            if (!W.zero()) {
                out["annihilator_exponent"] = weylmod::min_annihilator_exponent(W);
                out["psi"] = io::psi_json(W.psi);
                if (dump_algebra) out["algebra"] = io::ema_json(*W.alg);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_simple->parsed()) {
            Scenario sc = load_scenario(scenario);
            auto W = build_module(sc);
            auto S = weylmod::simple_quotient(W);
            ordered_json out;
            out["weyl"] = io::module_json(W);
            out["simple"] = io::module_json(S);
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_char->parsed()) {
            Scenario sc = load_scenario(scenario);
            auto W = build_module(sc);
            ordered_json out;
            out["dimension"] = W.dim();
            out["character"] = io::character_json(W.character());
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_tensor->parsed()) {
            Scenario sc = load_scenario(scenario);
            weylmod::LocalWeylOptions opt;
            if (opt_N > 0) opt.N = opt_N;
            auto psi1 = io::parse_psi(ordered_json::parse(psi_str), sc.rank);
            auto psi2 = io::parse_psi(ordered_json::parse(psi2_str), sc.rank);
            auto W1 = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, psi1, opt);
            auto W2 = weylmod::local_weyl_module(*sc.L, *sc.fd, *sc.A, psi2, opt);
            auto T = weylmod::tensor(W1, W2, *sc.L, *sc.fd, *sc.A);
            ordered_json out;
            out["factor_dimensions"] = {W1.dim(), W2.dim()};
            out["dimension"] = T.dim();
            out["character"] = io::character_json(T.character());
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_ann->parsed()) {
            Scenario sc = load_scenario(scenario);
            auto W = build_module(sc);
            ordered_json out;
            out["dimension"] = W.dim();
            out["annihilator_exponent"] = weylmod::min_annihilator_exponent(W);
            out["bound"] = weylmod::annihilator_bound(*sc.fd, W.lambda);
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cmd_bba->parsed()) {
            Scenario sc = load_scenario(scenario);
            lie::Weight lambda = parse_lambda(lambda_str, sc.fd->orbits.size());
            auto d = weylalg::build_descriptor(lambda, *sc.fd, *sc.A);
            std::cout << io::descriptor_json(d).dump(2) << "\n";
            return 0;
        }
        if (cmd_bbacheck->parsed()) {
            Scenario sc = load_scenario(scenario);
            SuiteResult res;
            suite_weylalg(sc, res, seed);
            ordered_json out;
            out["scenario"] = scenario;
            out["checks"] = res.checks;
            out["failures"] = res.failures;
            std::cout << out.dump(2) << "\n";
            return res.failures.empty() ? 0 : 1;
        }
        if (cmd_verify->parsed()) {
            std::string sel = cmd_verify->count("--scenario") ? scenario : "";
            return run_suites(suite, sel, seed);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
