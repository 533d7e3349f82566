#include "weylem/fold.hpp"

#include <algorithm>

namespace weylem::lie {

Weight FoldedDatum::restrict_weight(const Weight& mu) const {
    Weight out(orbits.size(), 0);
    for (size_t k = 0; k < orbits.size(); ++k) {
        long s = 0;
        for (int i : orbits[k]) s += mu[i];
        out[k] = kappa[k] * s;
    }
    return out;
}

Weight FoldedDatum::sigma_on_weight(const Weight& mu) const {
    Weight out(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) out[aut.sigma.perm[i]] = mu[i];
    return out;
}

bool FoldedDatum::is_restriction(const Weight& lambda) const {
    for (size_t k = 0; k < orbits.size(); ++k)
        if (lambda[k] % kappa[k] != 0) return false;
    return true;
}

Weight FoldedDatum::lift_weight(const Weight& lambda) const {
    if (!is_restriction(lambda))
        throw error("lift_weight: lambda is not the restriction of a g-weight");
    Weight mu(L->rank(), 0);
    for (size_t k = 0; k < orbits.size(); ++k) mu[orbits[k].front()] = lambda[k] / kappa[k];
    return mu;
}

FoldedDatum fold(const LieAlgebra& L, const DiagramAutomorphism& sigma) {
    FoldedDatum fd;
    fd.L = &L;
    fd.aut = lift_automorphism(L, sigma);
    int n = L.rank();

    fd.orbit_of_node.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (fd.orbit_of_node[i] >= 0) continue;
        std::vector<int> orb;
        int j = i;
        do {
            orb.push_back(j);
            j = sigma.perm[j];
        } while (j != i);
        std::sort(orb.begin(), orb.end());
        int id = int(fd.orbits.size());
        for (int k : orb) fd.orbit_of_node[k] = id;
        fd.orbits.push_back(std::move(orb));
    }
    // orbits come out ordered by least element because nodes are scanned in order

    const RootSystem& rs = L.root_system();
    for (const auto& orb : fd.orbits) {
        // kappa = 2 exactly for an orbit containing two adjacent nodes
        // (the short-root orbit of a nontrivially folded A_{2n})
        bool adjacent = false;
        for (int a : orb)
            for (int b : orb)
                if (a != b && rs.cartan(a, b) != 0) adjacent = true;
        fd.kappa.push_back(adjacent ? 2 : 1);
        fd.isotropy_order.push_back(sigma.order / int(orb.size()));
    }

    for (size_t k = 0; k < fd.orbits.size(); ++k) {
        Scalar root_kappa(1);
        if (fd.kappa[k] == 2) {
            if (field::minpoly() != field::MinPoly::X2Minus2)
                throw error("fold: type A_{2n} folding needs the Q(sqrt2) scalar configuration");
            root_kappa = Scalar::sqrt2();
        }
        SVec e, f, h;
        for (int i : fd.orbits[k]) {
            e.push_back({L.e(i), root_kappa});
            f.push_back({L.f(i), root_kappa});
            h.push_back({L.h(i), Scalar(fd.kappa[k])});
        }
        fd.triple_e.push_back(sv_normalize(std::move(e)));
        fd.triple_f.push_back(sv_normalize(std::move(f)));
        fd.triple_h.push_back(sv_normalize(std::move(h)));
    }

    // Folded Cartan entries alpha_j(h_i) read off from [h_i, e_j]
    size_t K = fd.orbits.size();
    fd.folded_cartan.assign(K, std::vector<long>(K, 0));
    for (size_t i = 0; i < K; ++i) {
        // postcondition [e_i, f_i] = h_i
        SVec comm = L.bracket(fd.triple_e[i], fd.triple_f[i]);
        if (!sv_add(comm, sv_scale(fd.triple_h[i], Scalar(-1))).empty())
            throw error("fold: [e_i, f_i] != h_i");
        for (size_t j = 0; j < K; ++j) {
            SVec br = L.bracket(fd.triple_h[i], fd.triple_e[j]);
            if (br.empty()) continue;
            // must be a multiple of e_j
            Scalar c = br.front().second / fd.triple_e[j].front().second;
            if (!sv_add(br, sv_scale(fd.triple_e[j], -c)).empty())
                throw error("fold: [h_i, e_j] not proportional to e_j");
            if (!c.is_rational() || c.c0().get_den() != 1)
                throw error("fold: non-integral folded Cartan entry");
            fd.folded_cartan[i][j] = c.c0().get_num().get_si();
        }
    }
    for (size_t i = 0; i < K; ++i)
        if (fd.folded_cartan[i][i] != 2) throw error("fold: alpha_i(h_i) != 2");

    fd.folded_label = RootSystem::identify_cartan(fd.folded_cartan);
    fd.folded_rs = RootSystem::from_cartan(fd.folded_cartan);
    return fd;
}

TriangularSplit check_g0_abelian(const LieAlgebra& L, const FoldedDatum& fd) {
    TriangularSplit ts;
    for (int idx = 0; idx < L.dim(); ++idx) {
        // classify by the folded root coordinates (orbit sums): g^- is the
        // part with restriction in -Q^+_Gamma minus zero, g^+ the rest
        auto r = L.root_of(idx);
        std::vector<long> s(fd.orbits.size(), 0);
        if (r) {
            const RootVec& beta = L.root_system().positive_roots()[r->first];
            for (size_t k = 0; k < fd.orbits.size(); ++k)
                for (int i : fd.orbits[k]) s[k] += r->second * beta[i];
        }
        bool zero = std::all_of(s.begin(), s.end(), [](long c) { return c == 0; });
        bool nonpos = std::all_of(s.begin(), s.end(), [](long c) { return c <= 0; });
        if (zero)
            ts.g_zero.push_back(idx);
        else if (nonpos)
            ts.g_minus.push_back(idx);
        else
            ts.g_plus.push_back(idx);
    }
    ts.g0_abelian = true;
    for (int a : ts.g_zero)
        for (int b : ts.g_zero)
            if (!L.bracket(a, b).empty()) ts.g0_abelian = false;
    return ts;
}

} // namespace weylem::lie
