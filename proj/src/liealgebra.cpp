#include "weylem/liealgebra.hpp"

#include <algorithm>
#include <map>

namespace weylem::lie {

SVec sv_normalize(SVec v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SVec out;
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.push_back({i, c});
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              out.end());
    return out;
}

SVec sv_add(const SVec& a, const SVec& b) {
    SVec v = a;
    v.insert(v.end(), b.begin(), b.end());
    return sv_normalize(std::move(v));
}

SVec sv_scale(const SVec& a, const Scalar& c) {
    if (c.is_zero()) return {};
    SVec v = a;
    for (auto& [i, x] : v) x *= c;
    return v;
}

bool sv_is_zero(const SVec& v) { return v.empty(); }

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
    DiagramAutomorphism s;
    s.perm.resize(rank);
    for (int i = 0; i < rank; ++i) s.perm[i] = i;
    s.order = 1;
    return s;
}

DiagramAutomorphism DiagramAutomorphism::from_permutation(const RootSystem& rs,
                                                          std::vector<int> perm) {
    int n = rs.rank();
    if (int(perm.size()) != n) throw error("DiagramAutomorphism: wrong permutation size");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rs.cartan(perm[i], perm[j]) != rs.cartan(i, j))
                throw error("DiagramAutomorphism: permutation does not preserve the Cartan matrix");
    DiagramAutomorphism s;
    s.perm = std::move(perm);
    std::vector<int> cur = s.perm;
    s.order = 1;
    auto is_id = [n](const std::vector<int>& p) {
        for (int i = 0; i < n; ++i)
            if (p[i] != i) return false;
        return true;
    };
    while (!is_id(cur)) {
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) next[i] = s.perm[cur[i]];
        cur = next;
        ++s.order;
        if (s.order > 6) throw error("DiagramAutomorphism: order exceeds 6");
    }
    if (s.order != 1 && s.order != 2 && s.order != 3)
        throw error("DiagramAutomorphism: order must be 1, 2 or 3");
    return s;
}

namespace {

// Structure-constant engine over the positive-root index set.
struct ChevalleyBuilder {
    const RootSystem& rs;
    int P;
    std::map<std::pair<int, int>, long> Npos;  // (i,j) positive-root indices, i != j

    explicit ChevalleyBuilder(const RootSystem& r) : rs(r), P(r.num_positive()) { fill(); }

    // p = max{k : beta - k*alpha is a root}, alpha and beta roots given as
    // signed positive-root indices (index, sign).
    long string_down(const RootVec& alpha, const RootVec& beta) const {
        long p = 0;
        RootVec cur = beta;
        while (true) {
            for (int i = 0; i < rs.rank(); ++i) cur[i] -= alpha[i];
            if (!is_root_signed(cur)) break;
            ++p;
        }
        return p;
    }

    bool is_root_signed(const RootVec& r) const {
        bool pos = true, neg = true, zero = true;
        for (long c : r) {
            if (c > 0) neg = false;
            if (c < 0) pos = false;
            if (c != 0) zero = false;
        }
        if (zero) return false;
        if (pos) return rs.is_root(r);
        if (neg) {
            RootVec m = r;
            for (auto& c : m) c = -c;
            return rs.is_root(m);
        }
        return false;
    }

    // N for arbitrary signed roots (u and v such that u+v is a root).
    mpq_class N_signed(const RootVec& u, const RootVec& v) const {
        bool upos = std::all_of(u.begin(), u.end(), [](long c) { return c >= 0; });
        bool vpos = std::all_of(v.begin(), v.end(), [](long c) { return c >= 0; });
        bool uneg = std::all_of(u.begin(), u.end(), [](long c) { return c <= 0; });
        bool vneg = std::all_of(v.begin(), v.end(), [](long c) { return c <= 0; });
        if (upos && vpos) {
            int i = rs.root_index(u), j = rs.root_index(v);
            auto it = Npos.find({i, j});
            if (it != Npos.end()) return it->second;
            it = Npos.find({j, i});
            if (it != Npos.end()) return -it->second;
            throw error("N_signed: missing positive pair");
        }
        if (uneg && vneg) {
            RootVec mu = u, mv = v;
            for (auto& c : mu) c = -c;
            for (auto& c : mv) c = -c;
            return -N_signed(mu, mv);
        }
        // Mixed signs: reduce via N_{u,v}/(w,w) = N_{v,w}/(u,u) for u+v+w=0.
        if (uneg) return -N_signed(v, u);
        RootVec b = v;  // v negative; b = -v positive
        for (auto& c : b) c = -c;
        RootVec diff(u.size());
        for (size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - b[i];
        bool diffpos = std::all_of(diff.begin(), diff.end(), [](long c) { return c >= 0; });
        if (diffpos) {
            // u - b is a positive root: N_{u,-b} = -(|u-b|^2/|u|^2) N_{b,u-b}
            mpq_class ratio(rs.form_roots(diff, diff), rs.form_roots(u, u));
            ratio.canonicalize();
            return -ratio * N_signed(b, diff);
        }
        RootVec diff2(u.size());
        for (size_t i = 0; i < u.size(); ++i) diff2[i] = b[i] - u[i];
        // b - u is a positive root: N_{u,-b} = (|b-u|^2/|b|^2) N_{b-u,u}
        mpq_class ratio(rs.form_roots(diff2, diff2), rs.form_roots(b, b));
        ratio.canonicalize();
        return ratio * N_signed(diff2, u);
    }

    void fill() {
        const auto& roots = rs.positive_roots();
        // Process sums by the root order (height, then lex) so every
        // constant needed on the right-hand side is already known.
        for (int g = 0; g < P; ++g) {
            const RootVec& gamma = roots[g];
            if (RootSystem::height(gamma) < 2) continue;
            // Special pairs (a, b), a < b in root order, a + b = gamma.
            std::vector<std::pair<int, int>> special;
            for (int a = 0; a < P; ++a) {
                RootVec rem(gamma.size());
                bool ok = true;
                for (size_t i = 0; i < gamma.size(); ++i) {
                    rem[i] = gamma[i] - roots[a][i];
                    if (rem[i] < 0) ok = false;
                }
                if (!ok) continue;
                int b = rs.root_index(rem);
                if (b < 0 || b <= a) continue;
                special.push_back({a, b});
            }
            if (special.empty()) throw error("Chevalley: non-simple root with no special pair");
            auto [ea, eb] = special.front();  // extraspecial: minimal first component
            long p = string_down(roots[ea], roots[eb]);
            Npos[{ea, eb}] = p + 1;
            for (size_t s = 1; s < special.size(); ++s) {
                auto [a, b] = special[s];
                // Jacobi on (x_{-ea}, x_a, x_b) solves N_{a,b}:
                //   N_{a,b} N_{gamma,-ea} + N_{-ea,a} N_{a-ea,b} + N_{b,-ea} N_{b-ea,a} = 0
                RootVec nea = roots[ea];
                for (auto& c : nea) c = -c;
                mpq_class t1 = 0, t2 = 0;
                RootVec d1(gamma.size()), d2(gamma.size());
                for (size_t i = 0; i < gamma.size(); ++i) {
                    d1[i] = roots[a][i] - roots[ea][i];
                    d2[i] = roots[b][i] - roots[ea][i];
                }
                if (is_root_signed(d1)) t1 = N_signed(nea, roots[a]) * N_signed(d1, roots[b]);
                if (is_root_signed(d2)) t2 = N_signed(roots[b], nea) * N_signed(d2, roots[a]);
                mpq_class denom = N_signed(gamma, nea);
                if (sgn(denom) == 0) throw error("Chevalley: vanishing extraspecial constant");
                mpq_class val = -(t1 + t2) / denom;
                val.canonicalize();
                if (val.get_den() != 1) throw error("Chevalley: non-integral structure constant");
                long expected = string_down(roots[a], roots[b]) + 1;
                if (abs(val.get_num()) != expected)
                    throw error("Chevalley: |N| != p+1, sign recursion failed");
                Npos[{a, b}] = val.get_num().get_si();
            }
        }
    }
};

} // namespace

LieAlgebra LieAlgebra::chevalley(const RootSystem& rs) {
    LieAlgebra L;
    L.rs_ = rs;
    int P = rs.num_positive(), n = rs.rank();
    L.dim_ = 2 * P + n;
    L.table_.assign(size_t(L.dim_) * L.dim_, SVec{});

    ChevalleyBuilder cb(rs);
    const auto& roots = rs.positive_roots();

    auto signed_root = [&](int idx) -> std::pair<RootVec, int> {
        if (idx < P) return {roots[idx], +1};
        RootVec r = roots[idx - P];
        for (auto& c : r) c = -c;
        return {r, -1};
    };
    auto index_of_signed = [&](const RootVec& r) -> int {
        bool pos = std::all_of(r.begin(), r.end(), [](long c) { return c >= 0; });
        if (pos) return rs.root_index(r);
        RootVec m = r;
        for (auto& c : m) c = -c;
        int k = rs.root_index(m);
        return k < 0 ? -1 : k + P;
    };

    auto set = [&](int a, int b, SVec v) {
        L.table_[size_t(a) * L.dim_ + b] = v;
        for (auto& [i, c] : v) c = -c;
        L.table_[size_t(b) * L.dim_ + a] = std::move(v);
    };

    // [h_i, h_j] = 0; [h_i, x_beta] = beta(h_i) x_beta
    for (int i = 0; i < n; ++i)
        for (int idx = 0; idx < 2 * P; ++idx) {
            auto [r, sign] = signed_root(idx);
            long v = 0;
            for (int j = 0; j < n; ++j) v += rs.cartan(i, j) * r[j];
            if (v != 0) set(L.index_cartan(i), idx, SVec{{idx, Scalar(v)}});
        }

    // Root-vector pairs
    for (int a = 0; a < 2 * P; ++a) {
        auto [ra, sa] = signed_root(a);
        for (int b = a + 1; b < 2 * P; ++b) {
            auto [rb, sb] = signed_root(b);
            RootVec sum(rs.rank());
            bool zero = true;
            for (int i = 0; i < n; ++i) {
                sum[i] = ra[i] + rb[i];
                if (sum[i] != 0) zero = false;
            }
            if (zero) {
                // [x_beta, x_{-beta}] = h_beta
                auto co = rs.coroot(a < P ? ra : rb);
                SVec v;
                for (int i = 0; i < n; ++i)
                    if (co[i] != 0) v.push_back({L.index_cartan(i), Scalar(co[i])});
                if (a >= P) v = sv_scale(v, Scalar(-1));
                set(a, b, std::move(v));
                continue;
            }
            int target = index_of_signed(sum);
            if (target < 0) continue;
            mpq_class N = cb.N_signed(ra, rb);
            N.canonicalize();
            if (N.get_den() != 1) throw error("Chevalley: non-integral mixed constant");
            if (sgn(N) != 0) set(a, b, SVec{{target, Scalar(N)}});
        }
    }

    if (!L.verify_antisymmetry()) throw error("Chevalley: antisymmetry failed");
    if (!L.verify_jacobi()) throw error("Chevalley: Jacobi identity failed");
    return L;
}

std::optional<std::pair<int, int>> LieAlgebra::root_of(int idx) const {
    int P = num_positive();
    if (idx >= 2 * P) return std::nullopt;
    if (idx < P) return std::make_pair(idx, +1);
    return std::make_pair(idx - P, -1);
}

Weight LieAlgebra::weight_of(int idx) const {
    auto r = root_of(idx);
    if (!r) return Weight(rank(), 0);
    Weight w = rs_.weight_of_root(rs_.positive_roots()[r->first]);
    if (r->second < 0)
        for (auto& c : w) c = -c;
    return w;
}

SVec LieAlgebra::bracket(const SVec& u, const SVec& v) const {
    SVec out;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) {
            const SVec& t = bracket(a, b);
            for (const auto& [i, c] : t) out.push_back({i, ca * cb * c});
        }
    return sv_normalize(std::move(out));
}

int LieAlgebra::e(int i) const {
    RootVec a(rank(), 0);
    a[i] = 1;
    return rs_.root_index(a);
}

int LieAlgebra::f(int i) const { return num_positive() + e(i); }

bool LieAlgebra::verify_antisymmetry(linalg::Mode mode) const {
    return linalg::parallel_all(int64_t(dim_) * dim_, mode, [&](int64_t k) {
        int a = int(k / dim_), b = int(k % dim_);
        return sv_add(bracket(a, b), bracket(b, a)).empty();
    });
}

bool LieAlgebra::verify_jacobi(linalg::Mode mode) const {
    // Unordered triples a < b < c suffice given antisymmetry.
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < dim_; ++a)
        for (int b = a + 1; b < dim_; ++b)
            for (int c = b + 1; c < dim_; ++c) triples.push_back({a, b, c});
    return linalg::parallel_all(int64_t(triples.size()), mode, [&](int64_t k) {
        auto [a, b, c] = triples[size_t(k)];
        SVec s = bracket(bracket(a, b), SVec{{c, Scalar(1)}});
        s = sv_add(s, bracket(bracket(b, c), SVec{{a, Scalar(1)}}));
        s = sv_add(s, bracket(bracket(c, a), SVec{{b, Scalar(1)}}));
        return s.empty();
    });
}

SVec LieAut::apply_basis(int idx) const {
    return SVec{{image[idx], coeff[idx]}};
}

SVec LieAut::apply(const SVec& v) const {
    SVec out;
    for (const auto& [i, c] : v) out.push_back({image[i], c * coeff[i]});
    return sv_normalize(std::move(out));
}

bool LieAut::verify_bracket_compat(linalg::Mode mode) const {
    int d = L->dim();
    return linalg::parallel_all(int64_t(d) * d, mode, [&](int64_t k) {
        int a = int(k / d), b = int(k % d);
        SVec lhs = L->bracket(apply_basis(a), apply_basis(b));
        SVec rhs = apply(L->bracket(a, b));
        return sv_add(lhs, sv_scale(rhs, Scalar(-1))).empty();
    });
}

bool LieAut::verify_order() const {
    int d = L->dim();
    for (int i = 0; i < d; ++i) {
        SVec v{{i, Scalar(1)}};
        for (int k = 0; k < sigma.order; ++k) v = apply(v);
        if (!(v.size() == 1 && v[0].first == i && v[0].second == Scalar(1))) return false;
    }
    return true;
}

LieAut lift_automorphism(const LieAlgebra& L, const DiagramAutomorphism& sigma) {
    const RootSystem& rs = L.root_system();
    int P = L.num_positive(), n = L.rank();
    const auto& roots = rs.positive_roots();

    auto sigma_root = [&](const RootVec& r) {
        RootVec out(n);
        for (int i = 0; i < n; ++i) out[sigma.perm[i]] = r[i];
        return out;
    };

    LieAut aut;
    aut.L = &L;
    aut.sigma = sigma;
    aut.image.assign(L.dim(), -1);
    aut.coeff.assign(L.dim(), Scalar(1));

    for (int i = 0; i < n; ++i) aut.image[L.index_cartan(i)] = L.index_cartan(sigma.perm[i]);

    // Signs on root vectors, solved from the structure constants along
    // extraspecial decompositions; +1 on all simple root vectors.
    std::vector<Scalar> sign(P);
    for (int k = 0; k < P; ++k) {
        const RootVec& gamma = roots[k];
        if (RootSystem::height(gamma) == 1) {
            sign[k] = Scalar(1);
            continue;
        }
        // first special pair in root order (the extraspecial pair)
        int ea = -1, eb = -1;
        for (int a = 0; a < k && ea < 0; ++a) {
            RootVec rem(n);
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                rem[i] = gamma[i] - roots[a][i];
                if (rem[i] < 0) ok = false;
            }
            if (!ok) continue;
            int b = rs.root_index(rem);
            if (b > a) { ea = a; eb = b; }
        }
        if (ea < 0) throw error("lift_automorphism: missing special pair");
        // tau(x_gamma) = sign_a sign_b N_{sa,sb}/N_{a,b} x_{sigma gamma}
        SVec br = L.bracket(rs.root_index(sigma_root(roots[ea])),
                            rs.root_index(sigma_root(roots[eb])));
        if (br.size() != 1) throw error("lift_automorphism: unexpected bracket");
        Scalar Nsig = br[0].second;
        const SVec& br0 = L.bracket(ea, eb);
        Scalar N0 = br0[0].second;
        sign[k] = sign[ea] * sign[eb] * Nsig / N0;
        if (!(sign[k] == Scalar(1) || sign[k] == Scalar(-1)))
            throw error("lift_automorphism: non-unit sign");
    }

    for (int k = 0; k < P; ++k) {
        int target = rs.root_index(sigma_root(roots[k]));
        aut.image[k] = target;
        aut.coeff[k] = sign[k];
        aut.image[P + k] = P + target;
        aut.coeff[P + k] = sign[k];
    }

    if (!aut.verify_bracket_compat())
        throw error("lift_automorphism: sign-convention obstruction, lift does not preserve brackets");
    if (!aut.verify_order()) throw error("lift_automorphism: lifted map has wrong order");
    return aut;
}

} // namespace weylem::lie
