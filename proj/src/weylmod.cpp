#include "weylem/weylmod.hpp"

#include <algorithm>

namespace weylem::weylmod {

using linalg::Matrix;
using linalg::Vec;
using ring::GammaRing;

Character Character::of(const ema::TruncatedEMA& alg, const ring::WeightFunction& psi,
                        const std::vector<Scalar>& section) {
    Character ch;
    ch.on_basis.assign(alg.dim(), Scalar());
    const auto& L = alg.lie_algebra();
    const auto& quot = alg.quotient();
    for (int i : alg.cartan_indices()) {
        auto per_lie = alg.ambient_of(SVec{{i, Scalar(1)}});
        Scalar val;
        for (int k = 0; k < L.rank(); ++k) {
            const Vec& ring_part = per_lie[L.h(k)];
            if (linalg::is_zero(ring_part)) continue;
            for (const Scalar& x : section) {
                lie::Weight w = psi.value(x);
                if (w.empty() || w[k] == 0) continue;
                val += Scalar(w[k]) * quot.eval(ring_part, x);
            }
        }
        // Cartan EMA elements are supported on the Cartan part of g, so the
        // root-vector components carry nothing.
        ch.on_basis[i] = val;
    }
    return ch;
}

Scalar hev_on_bar(const lie::FoldedDatum& fd, const GammaRing& A,
                  const ring::WeightFunction& psi, int node, const GammaRing::Elem& a) {
    int orbit_id = fd.orbit_of_node[node];
    int orbit_size = int(fd.orbits[orbit_id].size());
    auto section = psi.orbit_section(A);
    Scalar val;
    int cur = node;
    GammaRing::Elem ca = a;
    for (int j = 0; j < orbit_size; ++j) {
        for (const Scalar& x : section) {
            lie::Weight w = psi.value(x);
            if (!w.empty() && w[cur] != 0) val += Scalar(w[cur]) * GammaRing::eval(ca, x);
        }
        cur = fd.aut.sigma.perm[cur];
        ca = A.act_sigma(ca);
    }
    return val;
}

bool WeightModule::verify_representation(linalg::Mode mode) const {
    if (zero()) return true;
    int n = alg->dim();
    return linalg::parallel_all(int64_t(n) * n, mode, [&](int64_t k) {
        int a = int(k / n), b = int(k % n);
        if (b <= a) return true;
        Matrix lhs = mod.action[a].mul(mod.action[b], linalg::Mode::Serial);
        Matrix rhs = mod.action[b].mul(mod.action[a], linalg::Mode::Serial);
        Matrix comm(dim(), dim());
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) comm.at(i, j) = lhs.at(i, j) - rhs.at(i, j);
        Matrix expect(dim(), dim());
        for (const auto& [z, c] : alg->bracket(a, b))
            for (int i = 0; i < dim(); ++i)
                for (int j = 0; j < dim(); ++j)
                    if (!mod.action[z].at(i, j).is_zero())
                        expect.at(i, j) += c * mod.action[z].at(i, j);
        return comm == expect;
    });
}

bool WeightModule::verify_highest_weight(const Character& hev) const {
    if (zero()) return true;
    // lambda space is one-dimensional and spanned by the cyclic vector
    if (!(mod.level_weights.front() == lambda) || mod.level_dims.front() != 1 ||
        mod.cyclic != mod.level_offsets.front())
        return false;
    Vec w(dim());
    w[mod.cyclic] = Scalar(1);
    for (int x = 0; x < alg->dim(); ++x) {
        Vec img = mod.action[x].apply(w);
        int part = alg->part_of(x);
        if (part > 0 && !linalg::is_zero(img)) return false;
        if (part == 0) {
            Vec expect = w;
            linalg::scale(expect, hev.on_basis[x]);
            if (img != expect) return false;
        }
    }
    return true;
}

bool WeightModule::character_weyl_invariant() const {
    if (zero()) return true;
    auto ch = character();
    const auto& frs = alg->fold().folded_rs;
    for (const auto& [mu, mult] : ch)
        for (int i = 0; i < frs.rank(); ++i) {
            auto ref = frs.simple_reflection(i, mu);
            auto it = ch.find(ref);
            if (it == ch.end() || it->second != mult) return false;
        }
    return true;
}

long annihilator_bound(const lie::FoldedDatum& fd, const lie::Weight& lambda) {
    const auto& frs = fd.folded_rs;
    long v = frs.pair_weight_coroot(lambda, frs.highest_root());
    bool a2n = std::any_of(fd.kappa.begin(), fd.kappa.end(), [](long k) { return k == 2; });
    if (a2n) v *= 2;
    return std::max(1L, v);
}

namespace {

ClosureModule run_closure(const ema::TruncatedEMA& alg, const lie::FoldedDatum& fd,
                          const Character& hev, const lie::Weight& lambda, long cap) {
    ClosureInput in;
    in.alg = &alg;
    in.lambda = lambda;
    in.hev = hev.on_basis;
    for (size_t k = 0; k < fd.orbits.size(); ++k) {
        long power = lambda[k] + 1;
        SVec f = alg.bar('f', fd.orbits[k].front(), GammaRing::monomial(0));
        if (!f.empty()) in.seeds.push_back({f, power});
    }
    long seed_depth = 0;
    for (size_t k = 0; k < fd.orbits.size(); ++k) seed_depth = std::max(seed_depth, lambda[k] + 1);
    in.depth_cap = std::max(cap, seed_depth);
    return cyclic_closure(in);
}

long default_depth(const lie::FoldedDatum& fd, const lie::Weight& lambda) {
    lie::Weight w0 = fd.folded_rs.longest_element_action(lambda);
    lie::Weight diff(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) diff[i] = lambda[i] - w0[i];
    mpq_class h = fd.folded_rs.height_of_weight(diff);
    h.canonicalize();
    return h.get_num().get_si();
}

WeightModule build_local_weyl(const lie::LieAlgebra& L, const lie::FoldedDatum& fd,
                              const GammaRing& A, const ring::WeightFunction& psi, int N,
                              long depth) {
    WeightModule W;
    W.psi = psi;
    W.lambda = psi.wt_gamma(A, fd);
    if (!fd.folded_rs.dominant(W.lambda))
        throw error("local_weyl_module: wt_Gamma(psi) is not dominant");
    auto alg = std::make_shared<ema::TruncatedEMA>(
        ema::build_truncated_ema(L, fd, A, psi, N));
    auto section = psi.orbit_section(A);
    Character hev = Character::of(*alg, psi, section);
    W.alg = alg;
    W.mod = run_closure(*alg, fd, hev, W.lambda, depth);
    return W;
}

} // namespace

WeightModule local_weyl_module(const lie::LieAlgebra& L, const lie::FoldedDatum& fd,
                               const GammaRing& A, const ring::WeightFunction& psi_in,
                               LocalWeylOptions opt) {
    ring::WeightFunction psi =
        fd.trivial() ? psi_in : psi_in.equivariant_completion(A, fd);
    if (psi.empty()) {
        // trivial module: one-dimensional, everything acts as zero
        WeightModule W;
        W.psi = psi;
        W.lambda = lie::Weight(fd.orbits.size(), 0);
        auto alg = std::make_shared<ema::TruncatedEMA>(
            ema::build_truncated_ema(L, fd, A, psi, 1));
        W.alg = alg;
        W.mod.level_weights = {W.lambda};
        W.mod.level_dims = {1};
        W.mod.level_offsets = {0};
        W.mod.dim = 1;
        W.mod.cyclic = 0;
        W.mod.action.assign(alg->dim(), Matrix(1, 1));
        return W;
    }
    lie::Weight lambda = psi.wt_gamma(A, fd);
    int N = opt.N ? *opt.N : int(annihilator_bound(fd, lambda));
    long depth = opt.depth ? *opt.depth : default_depth(fd, lambda);
    WeightModule W = build_local_weyl(L, fd, A, psi, N, depth);
    if (opt.check_stability && !W.zero()) {
        WeightModule W2 = build_local_weyl(L, fd, A, psi, N + 1, depth + 2);
        W.stable = W.character() == W2.character();
    }
    return W;
}

WeightModule local_weyl_module_lambda(const lie::LieAlgebra& L, const lie::FoldedDatum& fd,
                                      const GammaRing& A, const lie::Weight& lambda,
                                      const Scalar& point, LocalWeylOptions opt) {
    WeightModule W;
    W.lambda = lambda;
    if (!fd.is_restriction(lambda)) {
        // the zero module, flagged rather than thrown
        W.mod.zero_module = true;
        return W;
    }
    if (std::all_of(lambda.begin(), lambda.end(), [](long c) { return c == 0; }))
        return local_weyl_module(L, fd, A, ring::WeightFunction{}, opt);
    ring::WeightFunction psi;
    psi.insert_add(point, fd.lift_weight(lambda));
    return local_weyl_module(L, fd, A, psi, opt);
}

WeightModule simple_quotient(const WeightModule& W) {
    if (W.zero()) return W;
    int nlev = int(W.mod.level_weights.size());
    if (!(W.mod.level_weights.front() == W.lambda) || W.mod.level_dims.front() != 1)
        throw error("simple_quotient: lambda space is not one-dimensional");

    // per-level subspaces of the largest submodule with zero lambda part
    std::vector<linalg::Subspace> T;
    for (int l = 0; l < nlev; ++l) {
        linalg::Subspace s(W.mod.level_dims[l]);
        if (l > 0)
            for (int j = 0; j < W.mod.level_dims[l]; ++j) {
                Vec v(W.mod.level_dims[l]);
                v[j] = Scalar(1);
                s.add(std::move(v));
            }
        T.push_back(std::move(s));
    }
    std::map<lie::Weight, int> level_of;
    for (int l = 0; l < nlev; ++l) level_of[W.mod.level_weights[l]] = l;

    auto slice = [&](const Vec& global, int l) {
        Vec out(W.mod.level_dims[l]);
        for (int j = 0; j < W.mod.level_dims[l]; ++j) out[j] = global[W.mod.level_offsets[l] + j];
        return out;
    };
    auto embed = [&](const Vec& local, int l) {
        Vec out(W.dim());
        for (int j = 0; j < W.mod.level_dims[l]; ++j) out[W.mod.level_offsets[l] + j] = local[j];
        return out;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int l = 0; l < nlev; ++l) {
            if (T[l].dim() == 0) continue;
            // keep v = sum c_b basis[b] whose images under every action
            // matrix stay inside T; the residue is linear in c
            std::vector<Vec> basis = T[l].rows();
            int nb = int(basis.size());
            std::vector<Vec> rows;  // constraints indexed by (x, coordinate)
            for (int x = 0; x < W.alg->dim(); ++x) {
                lie::Weight tgt = W.mod.level_weights[l];
                const auto& wx = W.alg->weight_of(x);
                for (size_t i = 0; i < tgt.size(); ++i) tgt[i] += wx[i];
                auto it = level_of.find(tgt);
                if (it == level_of.end()) continue;
                std::vector<Vec> residues(nb);
                int rdim = 0;
                for (int b = 0; b < nb; ++b) {
                    Vec img = W.mod.action[x].apply(embed(basis[b], l));
                    residues[b] = T[it->second].reduce(slice(img, it->second));
                    rdim = int(residues[b].size());
                }
                for (int c = 0; c < rdim; ++c) {
                    Vec row(nb);
                    bool nonzero = false;
                    for (int b = 0; b < nb; ++b) {
                        row[b] = residues[b][c];
                        if (!row[b].is_zero()) nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
            if (rows.empty()) continue;
            // kernel of the constraint matrix
            Matrix M = Matrix::from_rows(rows, nb);
            auto piv = linalg::row_reduce(M, linalg::Mode::Serial);
            if (int(piv.size()) == 0) continue;
            std::vector<bool> is_piv(nb, false);
            for (int p : piv) is_piv[p] = true;
            linalg::Subspace newT(W.mod.level_dims[l]);
            for (int fc = 0; fc < nb; ++fc) {
                if (is_piv[fc]) continue;
                // kernel vector: free var fc = 1
                Vec c(nb);
                c[fc] = Scalar(1);
                for (size_t r = 0; r < piv.size(); ++r) c[piv[r]] = -M.at(int(r), fc);
                Vec v(W.mod.level_dims[l]);
                for (int b = 0; b < nb; ++b)
                    if (!c[b].is_zero()) linalg::axpy(v, c[b], basis[b]);
                newT.add(std::move(v));
            }
            if (newT.dim() != T[l].dim()) {
                T[l] = std::move(newT);
                changed = true;
            }
        }
    }

    // quotient by T
    WeightModule Q;
    Q.alg = W.alg;
    Q.psi = W.psi;
    Q.lambda = W.lambda;
    std::vector<std::vector<int>> free_cols(nlev);
    int total = 0;
    std::vector<int> new_offset(nlev);
    for (int l = 0; l < nlev; ++l) {
        const auto& piv = T[l].pivots();
        size_t pi = 0;
        for (int c = 0; c < W.mod.level_dims[l]; ++c) {
            if (pi < piv.size() && piv[pi] == c) {
                ++pi;
                continue;
            }
            free_cols[l].push_back(c);
        }
        new_offset[l] = total;
        total += int(free_cols[l].size());
    }
    for (int l = 0; l < nlev; ++l) {
        if (free_cols[l].empty()) continue;
        Q.mod.level_weights.push_back(W.mod.level_weights[l]);
        Q.mod.level_dims.push_back(int(free_cols[l].size()));
        Q.mod.level_offsets.push_back(new_offset[l]);
    }
    Q.mod.dim = total;
    Q.mod.cyclic = 0;
    auto to_quotient = [&](const Vec& global) {
        Vec out(total);
        for (int l = 0; l < nlev; ++l) {
            Vec local = slice(global, l);
            local = T[l].reduce(std::move(local));
            for (size_t j = 0; j < free_cols[l].size(); ++j)
                out[new_offset[l] + int(j)] = local[free_cols[l][j]];
        }
        return out;
    };
    Q.mod.action.assign(W.alg->dim(), Matrix(total, total));
    for (int x = 0; x < W.alg->dim(); ++x) {
        for (int l = 0; l < nlev; ++l) {
            for (size_t j = 0; j < free_cols[l].size(); ++j) {
                Vec rep(W.mod.level_dims[l]);
                rep[free_cols[l][j]] = Scalar(1);
                Vec img = W.mod.action[x].apply(embed(rep, l));
                Vec q = to_quotient(img);
                int col = new_offset[l] + int(j);
                for (int i = 0; i < total; ++i)
                    if (!q[i].is_zero()) Q.mod.action[x].at(i, col) = q[i];
            }
        }
    }
    return Q;
}

std::map<lie::Weight, int> restrict_character(const std::map<lie::Weight, int>& ch,
                                              const lie::FoldedDatum& fd) {
    std::map<lie::Weight, int> out;
    for (const auto& [mu, mult] : ch) out[fd.restrict_weight(mu)] += mult;
    return out;
}

WeightModule untwisted_section_weyl_module(const lie::LieAlgebra& L,
                                           const lie::FoldedDatum& trivial_fd,
                                           const ring::GammaRing& A,
                                           const ring::WeightFunction& psi_section,
                                           LocalWeylOptions opt) {
    return local_weyl_module(L, trivial_fd, A, psi_section, opt);
}

WeightModule twist_restrict(const WeightModule& untwisted, const lie::LieAlgebra& L,
                            const lie::FoldedDatum& fd, const ring::GammaRing& A) {
    // the untwisting isomorphism pairs equal truncation exponents
    int N = untwisted.alg->quotient().N();
    if (untwisted.zero()) {
        WeightModule W;
        W.mod.zero_module = true;
        return W;
    }
    // equivariant extension of the untwisted psi (its support must be a
    // partial section)
    ring::WeightFunction psi = untwisted.psi.equivariant_completion(A, fd);
    auto twisted_alg = std::make_shared<ema::TruncatedEMA>(
        ema::build_truncated_ema(L, fd, A, psi, N));
    ema::UntwistIso iso = ema::untwist_isomorphism(*twisted_alg, *untwisted.alg);

    WeightModule W;
    W.alg = twisted_alg;
    W.psi = psi;
    W.lambda = fd.restrict_weight(untwisted.lambda);

    // regrade the untwisted levels by weight restriction
    int n = untwisted.dim();
    std::vector<lie::Weight> folded_of_level;
    for (const auto& mu : untwisted.mod.level_weights)
        folded_of_level.push_back(fd.restrict_weight(mu));
    std::map<lie::Weight, std::vector<int>> groups;  // folded weight -> source levels
    for (size_t l = 0; l < folded_of_level.size(); ++l)
        groups[folded_of_level[l]].push_back(int(l));

    // order groups by folded depth then weight
    std::vector<std::pair<long, lie::Weight>> keys;
    for (const auto& [mu, lst] : groups) {
        lie::Weight diff(W.lambda.size());
        for (size_t i = 0; i < diff.size(); ++i) diff[i] = W.lambda[i] - mu[i];
        mpq_class h = fd.folded_rs.height_of_weight(diff);
        keys.push_back({h.get_num().get_si(), mu});
    }
    std::sort(keys.begin(), keys.end());

    std::vector<int> perm(n);  // new index -> old index
    int pos = 0;
    for (const auto& [dep, mu] : keys) {
        W.mod.level_weights.push_back(mu);
        W.mod.level_offsets.push_back(pos);
        int dim = 0;
        for (int l : groups[mu]) {
            for (int j = 0; j < untwisted.mod.level_dims[l]; ++j)
                perm[pos + dim + j] = untwisted.mod.level_offsets[l] + j;
            dim += untwisted.mod.level_dims[l];
        }
        W.mod.level_dims.push_back(dim);
        pos += dim;
    }
    W.mod.dim = n;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    W.mod.cyclic = inv[untwisted.mod.cyclic];

    W.mod.action.assign(twisted_alg->dim(), Matrix(n, n));
    for (int z = 0; z < twisted_alg->dim(); ++z) {
        // action of the twisted element through the untwisting isomorphism
        Matrix m(n, n);
        for (const auto& [u, c] : iso.image[z])
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!untwisted.mod.action[u].at(i, j).is_zero())
                        m.at(i, j) += c * untwisted.mod.action[u].at(i, j);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!m.at(i, j).is_zero()) W.mod.action[z].at(inv[i], inv[j]) = m.at(i, j);
    }
    return W;
}

WeightModule tensor(const WeightModule& W1, const WeightModule& W2, const lie::LieAlgebra& L,
                    const lie::FoldedDatum& fd, const ring::GammaRing& A) {
    if (W1.zero() || W2.zero()) {
        WeightModule W;
        W.mod.zero_module = true;
        return W;
    }
    ring::WeightFunction psi;
    for (const auto& [p, w] : W1.psi.support) psi.insert_add(p, w);
    for (const auto& [p, w] : W2.psi.support) psi.insert_add(p, w);
    int N = std::max(W1.alg->quotient().N(), W2.alg->quotient().N());
    auto common = std::make_shared<ema::TruncatedEMA>(
        ema::build_truncated_ema(L, fd, A, psi, N));

    auto project = [&](const WeightModule& W, int z) {
        // common basis element z expressed in W's algebra
        auto per_lie = common->ambient_of(SVec{{z, Scalar(1)}});
        std::vector<Vec> mapped(per_lie.size());
        for (size_t l = 0; l < per_lie.size(); ++l)
            mapped[l] = common->quotient().project_to(W.alg->quotient(), per_lie[l]);
        return W.alg->express_ambient(mapped);
    };

    int n1 = W1.dim(), n2 = W2.dim();
    int n = n1 * n2;
    WeightModule W;
    W.alg = common;
    W.psi = psi;
    W.lambda.assign(W1.lambda.size(), 0);
    for (size_t i = 0; i < W.lambda.size(); ++i) W.lambda[i] = W1.lambda[i] + W2.lambda[i];

    // level structure: weights add
    std::map<lie::Weight, std::vector<int>> groups;  // weight -> flat pair indices
    std::vector<lie::Weight> wt1(n1), wt2(n2);
    for (size_t l = 0; l < W1.mod.level_weights.size(); ++l)
        for (int j = 0; j < W1.mod.level_dims[l]; ++j)
            wt1[W1.mod.level_offsets[l] + j] = W1.mod.level_weights[l];
    for (size_t l = 0; l < W2.mod.level_weights.size(); ++l)
        for (int j = 0; j < W2.mod.level_dims[l]; ++j)
            wt2[W2.mod.level_offsets[l] + j] = W2.mod.level_weights[l];
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            lie::Weight mu(wt1[i].size());
            for (size_t k = 0; k < mu.size(); ++k) mu[k] = wt1[i][k] + wt2[j][k];
            groups[mu].push_back(i * n2 + j);
        }
    std::vector<std::pair<long, lie::Weight>> keys;
    for (const auto& [mu, lst] : groups) {
        lie::Weight diff(W.lambda.size());
        for (size_t i = 0; i < diff.size(); ++i) diff[i] = W.lambda[i] - mu[i];
        mpq_class h = fd.folded_rs.height_of_weight(diff);
        keys.push_back({h.get_num().get_si(), mu});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<int> perm(n);  // new -> flat pair
    int pos = 0;
    for (const auto& [dep, mu] : keys) {
        W.mod.level_weights.push_back(mu);
        W.mod.level_offsets.push_back(pos);
        W.mod.level_dims.push_back(int(groups[mu].size()));
        for (int flat : groups[mu]) perm[pos++] = flat;
    }
    W.mod.dim = n;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    W.mod.cyclic = inv[W1.mod.cyclic * n2 + W2.mod.cyclic];

    W.mod.action.assign(common->dim(), Matrix(n, n));
    for (int z = 0; z < common->dim(); ++z) {
        SVec z1 = project(W1, z), z2 = project(W2, z);
        Matrix m1(n1, n1), m2(n2, n2);
        for (const auto& [u, c] : z1)
            for (int i = 0; i < n1; ++i)
                for (int j = 0; j < n1; ++j)
                    if (!W1.mod.action[u].at(i, j).is_zero())
                        m1.at(i, j) += c * W1.mod.action[u].at(i, j);
        for (const auto& [u, c] : z2)
            for (int i = 0; i < n2; ++i)
                for (int j = 0; j < n2; ++j)
                    if (!W2.mod.action[u].at(i, j).is_zero())
                        m2.at(i, j) += c * W2.mod.action[u].at(i, j);
        // x (v (x) w) = x v (x) w + v (x) x w
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j) {
                int col = inv[i * n2 + j];
                for (int i2 = 0; i2 < n1; ++i2)
                    if (!m1.at(i2, i).is_zero())
                        W.mod.action[z].at(inv[i2 * n2 + j], col) += m1.at(i2, i);
                for (int j2 = 0; j2 < n2; ++j2)
                    if (!m2.at(j2, j).is_zero())
                        W.mod.action[z].at(inv[i * n2 + j2], col) += m2.at(j2, j);
            }
    }
    return W;
}

int min_annihilator_exponent(const WeightModule& W) {
    if (W.zero() || W.psi.empty()) return 1;
    const auto& alg = *W.alg;
    const auto& quot = alg.quotient();
    int N = quot.N();
    for (int k = 1; k <= N; ++k) {
        auto ideal = quot.power_ideal_basis(k);
        bool kills = true;
        for (size_t r = 0; r < alg.eigenvectors().size() && kills; ++r) {
            for (const auto& v : ideal) {
                // xi component matching the eigenvector degree
                int m = alg.fold().gamma_order();
                int need = ((m - alg.eigenvectors()[r].deg) % m + m) % m;
                Vec comp(quot.dim());
                bool nonzero = false;
                for (int j = 0; j < quot.dim(); ++j) {
                    if (v[j].is_zero()) continue;
                    if (!alg.fold().trivial() && quot.ring().xi_of_exponent(j) != need) continue;
                    comp[j] = v[j];
                    nonzero = true;
                }
                if (!nonzero) continue;
                SVec elt;
                {
                    std::vector<Vec> per_lie(alg.lie_algebra().dim(), Vec(quot.dim()));
                    for (const auto& [li, c] : alg.eigenvectors()[r].vec)
                        for (int j = 0; j < quot.dim(); ++j)
                            if (!comp[j].is_zero()) per_lie[li][j] += c * comp[j];
                    elt = alg.express_ambient(per_lie);
                }
                Matrix m_act(W.dim(), W.dim());
                for (const auto& [u, c] : elt)
                    for (int i = 0; i < W.dim(); ++i)
                        for (int j = 0; j < W.dim(); ++j)
                            if (!W.mod.action[u].at(i, j).is_zero())
                                m_act.at(i, j) += c * W.mod.action[u].at(i, j);
                Matrix zero(W.dim(), W.dim());
                if (!(m_act == zero)) {
                    kills = false;
                    break;
                }
            }
        }
        if (kills) return k;
    }
    throw error("min_annihilator_exponent: no exponent up to N kills the module");
}

IsotypicReport isotypic_check(const WeightModule& W) {
    IsotypicReport rep;
    if (W.zero()) {
        rep.ok = true;
        return rep;
    }
    const auto& fd = W.alg->fold();
    std::vector<Matrix> raisings;
    for (const auto& orb : fd.orbits) {
        SVec e = W.alg->bar('e', orb.front(), GammaRing::monomial(0));
        Matrix m(W.dim(), W.dim());
        for (const auto& [u, c] : e)
            for (int i = 0; i < W.dim(); ++i)
                for (int j = 0; j < W.dim(); ++j)
                    if (!W.mod.action[u].at(i, j).is_zero())
                        m.at(i, j) += c * W.mod.action[u].at(i, j);
        raisings.push_back(std::move(m));
    }
    mpz_class total = 0;
    for (size_t l = 0; l < W.mod.level_weights.size(); ++l) {
        int dim = W.mod.level_dims[l];
        int off = W.mod.level_offsets[l];
        // joint kernel of all raisings restricted to this level
        std::vector<Vec> rows;
        for (const auto& R : raisings) {
            for (int i = 0; i < W.dim(); ++i) {
                Vec row(dim);
                bool nonzero = false;
                for (int j = 0; j < dim; ++j) {
                    row[j] = R.at(i, off + j);
                    if (!row[j].is_zero()) nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        int rank = rows.empty() ? 0 : linalg::rank(Matrix::from_rows(rows, dim));
        int mult = dim - rank;
        if (mult > 0) {
            const auto& mu = W.mod.level_weights[l];
            if (!fd.folded_rs.dominant(mu)) return rep;  // ok stays false
            rep.highest_weight_vectors.push_back({mu, mult});
            total += mult * fd.folded_rs.weyl_dim(mu);
        }
    }
    rep.ok = total == W.dim();
    return rep;
}

bool garland_span_check(const WeightModule& W, int orbit, const GammaRing::Elem& a, long ell) {
    if (W.zero()) return true;
    const auto& fd = W.alg->fold();
    const auto& A = W.alg->quotient().ring();
    int m = fd.gamma_order();
    if (!fd.trivial()) {
        // twisted case: a homogeneous of nonzero degree
        int deg = -1;
        for (const auto& [k, c] : a) {
            int x = A.xi_of_exponent(k);
            if (deg < 0) deg = x;
            if (x != deg) throw error("garland_span_check: inhomogeneous ring element");
        }
        if (deg == 0) throw error("garland_span_check: zero-degree element in the twisted case");
    }
    // delta: 1 in a folded A_{2n}; else 1 for a short (orbit size > 1) root,
    // |Gamma| for a long one
    bool a2n = std::any_of(fd.kappa.begin(), fd.kappa.end(), [](long k) { return k == 2; });
    long delta = 1;
    if (!fd.trivial() && !a2n) delta = int(fd.orbits[orbit].size()) > 1 ? 1 : m;

    int node = fd.orbits[orbit].front();
    long lam = W.lambda[orbit];
    if (ell < lam) throw error("garland_span_check: ell below lambda(h_i)");

    auto act_elt = [&](const SVec& elt, const Vec& v) {
        Vec out(W.dim());
        for (const auto& [u, c] : elt) {
            Vec t = W.mod.action[u].apply(v);
            linalg::axpy(out, c, t);
        }
        return out;
    };

    Vec w(W.dim());
    w[W.mod.cyclic] = Scalar(1);

    SVec fbar1 = W.alg->bar('f', node, GammaRing::monomial(0));
    Vec v = w;
    for (long i = 1; i <= ell + 1; ++i) {
        v = act_elt(fbar1, v);
        linalg::scale(v, Scalar(1, i));  // divided power
    }
    SVec ebar = W.alg->bar('e', node, A.pow(a, delta));
    for (long i = 1; i <= ell; ++i) {
        v = act_elt(ebar, v);
        linalg::scale(v, Scalar(1, i));
    }

    // U_h w: closure of w under bar(h, node, a^{delta j}), j = 0..ell
    linalg::Subspace Uh(W.dim());
    Uh.add(w);
    std::vector<SVec> hops;
    for (long j = 0; j <= ell; ++j) hops.push_back(W.alg->bar('h', node, A.pow(a, delta * j)));
    bool grow = true;
    while (grow) {
        grow = false;
        std::vector<Vec> cur = Uh.rows();
        for (const auto& h : hops)
            for (const auto& u : cur)
                if (Uh.add(act_elt(h, u))) grow = true;
    }

    linalg::Subspace S(W.dim());
    for (long s = 0; s <= ell; ++s) {
        SVec fbar = W.alg->bar('f', node, A.pow(a, delta * (ell - s)));
        for (const auto& u : Uh.rows()) S.add(act_elt(fbar, u));
    }
    return S.contains(v);
}

} // namespace weylem::weylmod
