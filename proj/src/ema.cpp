#include "weylem/ema.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace weylem::ema {

using lie::sv_add;
using lie::sv_normalize;
using lie::sv_scale;

TruncatedEMA::TruncatedEMA(const lie::LieAlgebra& L, const lie::FoldedDatum& fd,
                           ring::RingQuotient quot)
    : L_(&L), fd_(&fd), quot_(std::move(quot)) {
    build_eigenbasis();
    build_basis();
    build_table();
}

static int triangular_part(const lie::LieAlgebra& L, const lie::FoldedDatum& fd, int idx) {
    auto r = L.root_of(idx);
    if (!r) return 0;
    const auto& beta = L.root_system().positive_roots()[r->first];
    bool pos = false, neg = false;
    for (size_t k = 0; k < fd.orbits.size(); ++k) {
        long s = 0;
        for (int i : fd.orbits[k]) s += r->second * beta[i];
        if (s > 0) pos = true;
        if (s < 0) neg = true;
    }
    if (!pos && !neg) return 0;
    if (neg && !pos) return -1;
    return +1;  // everything not in -Q^+_Gamma
}

void TruncatedEMA::build_eigenbasis() {
    const auto& aut = fd_->aut;
    int m = fd_->gamma_order();
    int dim = L_->dim();
    Scalar zeta(1);
    if (m == 2) zeta = Scalar(-1);
    if (m == 3) zeta = Scalar::eta();

    std::vector<bool> seen(dim, false);
    std::vector<std::vector<Scalar>> eig_cols;  // eigenvector as dense lie-basis column
    for (int start = 0; start < dim; ++start) {
        if (seen[start]) continue;
        // orbit of basis indices under the lift
        std::vector<int> orbit{start};
        std::vector<Scalar> path{Scalar(1)};  // tau^k(start) = path[k] * basis[orbit[k]]
        int cur = start;
        Scalar acc(1);
        while (true) {
            acc = acc * (m == 1 ? Scalar(1) : aut.coeff[cur]);
            int nxt = m == 1 ? cur : aut.image[cur];
            if (nxt == start) break;
            orbit.push_back(nxt);
            path.push_back(acc);
            cur = nxt;
        }
        for (int i : orbit) seen[i] = true;
        int o = int(orbit.size());
        Scalar closing = acc;  // tau^o(start) = closing * basis[start]

        if (o == 1) {
            // closing is a root of unity in the scalar field: 1 or -1
            int deg = 0;
            if (closing == Scalar(1))
                deg = 0;
            else if (m == 2 && closing == Scalar(-1))
                deg = 1;
            else
                throw error("TruncatedEMA: unexpected eigenvalue on a fixed basis vector");
            GEigenVector ev;
            ev.vec = SVec{{start, Scalar(1)}};
            ev.deg = deg;
            ev.folded_weight = fd_->restrict_weight(L_->weight_of(start));
            ev.part = triangular_part(*L_, *fd_, start);
            eig_.push_back(std::move(ev));
        } else {
            if (o != m) throw error("TruncatedEMA: basis orbit size does not divide the order");
            for (int s = 0; s < m; ++s) {
                // u_s = sum_k zeta^{-s k} tau^k(v), an eigenvector with
                // eigenvalue zeta^s (nonzero since the path signs cancel)
                SVec v;
                Scalar zinv = zeta.inverse();
                Scalar w(1);
                for (int k = 0; k < o; ++k) {
                    Scalar coef = path[k];
                    Scalar zz(1);
                    for (int t = 0; t < (s * k) % m; ++t) zz *= zinv;
                    v.push_back({orbit[k], coef * zz});
                }
                GEigenVector ev;
                ev.vec = sv_normalize(std::move(v));
                ev.deg = s;
                ev.folded_weight = fd_->restrict_weight(L_->weight_of(start));
                ev.part = triangular_part(*L_, *fd_, start);
                eig_.push_back(std::move(ev));
            }
        }
    }
    for (auto& ev : eig_) {
        // folded height: signed height of the restricted root
        mpq_class h = fd_->folded_rs.height_of_weight(ev.folded_weight);
        h.canonicalize();
        if (h.get_den() != 1) throw error("TruncatedEMA: non-integral folded root height");
        ev.fheight = h.get_num().get_si();
    }

    // sanity: eigenvectors are tau-eigen with eigenvalue zeta^deg
    for (const auto& ev : eig_) {
        SVec img = fd_->trivial() ? ev.vec : fd_->aut.apply(ev.vec);
        Scalar z(1);
        for (int t = 0; t < ev.deg; ++t) z *= zeta;
        if (!sv_add(img, sv_scale(ev.vec, -z)).empty())
            throw error("TruncatedEMA: eigenbasis construction failed");
    }

    // expansion of each Lie basis vector in the eigenbasis (dense solve)
    int n = int(eig_.size());
    if (n != dim) throw error("TruncatedEMA: eigenbasis has wrong size");
    linalg::Matrix M(dim, 2 * dim);
    for (int c = 0; c < n; ++c)
        for (const auto& [i, coef] : eig_[c].vec) M.at(i, c) = coef;
    for (int i = 0; i < dim; ++i) M.at(i, dim + i) = Scalar(1);
    // invert: rows indexed by lie basis; solve M_left * x = e_i for all i
    linalg::Matrix A = M;
    auto pivots = linalg::row_reduce(A, linalg::Mode::Serial);
    if (int(pivots.size()) != dim) throw error("TruncatedEMA: eigenbasis not invertible");
    eig_expand_.assign(dim, std::vector<Scalar>(dim));
    // A is now [I | M^{-1}]: lie basis vector e_i has eigen coords column i of M^{-1}
    for (int r = 0; r < dim; ++r)
        for (int i = 0; i < dim; ++i) eig_expand_[i][r] = A.at(r, dim + i);
}

void TruncatedEMA::build_basis() {
    int m = fd_->gamma_order();
    int d = quot_.dim();
    std::vector<int> order(eig_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (eig_[a].fheight != eig_[b].fheight) return eig_[a].fheight > eig_[b].fheight;
        return a < b;
    });
    index_of_.assign(eig_.size(), std::vector<int>(std::max(d, 1), -1));
    for (int r : order) {
        int need = ((m - eig_[r].deg) % m + m) % m;
        for (int k = 0; k < d; ++k) {
            if (quot_.ring().xi_of_exponent(k) != need && !fd_->trivial()) continue;
            index_of_[r][k] = int(basis_.size());
            basis_.push_back({r, k});
        }
    }
}

SVec TruncatedEMA::express_pair(int eig_idx, const linalg::Vec& ring_vec) const {
    SVec out;
    int m = fd_->gamma_order();
    int need = ((m - eig_[eig_idx].deg) % m + m) % m;
    for (int k = 0; k < quot_.dim(); ++k) {
        if (ring_vec[k].is_zero()) continue;
        if (!fd_->trivial() && quot_.ring().xi_of_exponent(k) != need)
            throw error("TruncatedEMA: element is not Gamma-fixed");
        int idx = index_of_[eig_idx][k];
        if (idx < 0) throw error("TruncatedEMA: missing basis slot");
        out.push_back({idx, ring_vec[k]});
    }
    return sv_normalize(std::move(out));
}

SVec TruncatedEMA::express_ambient(const std::vector<linalg::Vec>& per_lie) const {
    int dim = L_->dim();
    // eigen coords: ring part of eigenvector r = sum_i expand[i][r] * per_lie[i]
    SVec out;
    for (int r = 0; r < dim; ++r) {
        linalg::Vec acc(quot_.dim());
        bool nonzero = false;
        for (int i = 0; i < dim; ++i) {
            if (per_lie[i].empty()) continue;
            const Scalar& c = eig_expand_[i][r];
            if (c.is_zero()) continue;
            linalg::axpy(acc, c, per_lie[i]);
            nonzero = true;
        }
        if (!nonzero || linalg::is_zero(acc)) continue;
        SVec part = express_pair(r, acc);
        out.insert(out.end(), part.begin(), part.end());
    }
    return sv_normalize(std::move(out));
}

std::vector<linalg::Vec> TruncatedEMA::ambient_of(const SVec& v) const {
    std::vector<linalg::Vec> per_lie(L_->dim(), linalg::Vec(quot_.dim()));
    for (const auto& [idx, c] : v) {
        const auto& lab = basis_[idx];
        for (const auto& [lie_i, lc] : eig_[lab.eig].vec) per_lie[lie_i][lab.mono] += c * lc;
    }
    return per_lie;
}

void TruncatedEMA::build_table() {
    int n = dim();
    table_.assign(size_t(n) * n, SVec{});
    // eigen-level structure constants
    int ne = int(eig_.size());
    std::vector<std::vector<std::pair<int, Scalar>>> estc(size_t(ne) * ne);
    for (int a = 0; a < ne; ++a)
        for (int b = 0; b < ne; ++b) {
            if (b <= a) continue;
            SVec br = L_->bracket(eig_[a].vec, eig_[b].vec);
            if (br.empty()) continue;
            // expand in the eigenbasis
            std::vector<Scalar> coords(ne);
            for (const auto& [i, c] : br)
                for (int r = 0; r < ne; ++r)
                    if (!eig_expand_[i][r].is_zero()) coords[r] += c * eig_expand_[i][r];
            for (int r = 0; r < ne; ++r)
                if (!coords[r].is_zero()) estc[size_t(a) * ne + b].push_back({r, coords[r]});
        }

    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            const auto& lx = basis_[x];
            const auto& ly = basis_[y];
            int a = lx.eig, b = ly.eig;
            if (a == b) continue;  // [v, v] (x) ab = 0
            const auto* sc = &estc[size_t(std::min(a, b)) * ne + std::max(a, b)];
            if (sc->empty()) continue;
            Scalar sign(a <= b ? 1 : -1);
            linalg::Vec prod = quot_.mul(quot_.reduce(ring::GammaRing::monomial(lx.mono)),
                                         quot_.reduce(ring::GammaRing::monomial(ly.mono)));
            SVec out;
            for (const auto& [r, c] : *sc) {
                linalg::Vec scaled = prod;
                linalg::scale(scaled, c * sign);
                SVec part = express_pair(r, scaled);
                out.insert(out.end(), part.begin(), part.end());
            }
            out = sv_normalize(std::move(out));
            table_[size_t(x) * n + y] = out;
            for (auto& [i, c] : out) c = -c;
            table_[size_t(y) * n + x] = std::move(out);
        }
    }
}

SVec TruncatedEMA::bracket(const SVec& u, const SVec& v) const {
    SVec out;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) {
            const SVec& t = bracket(a, b);
            for (const auto& [i, c] : t) out.push_back({i, ca * cb * c});
        }
    return sv_normalize(std::move(out));
}

std::vector<int> TruncatedEMA::lowering_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (part_of(i) < 0) out.push_back(i);
    return out;
}

std::vector<int> TruncatedEMA::cartan_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (part_of(i) == 0) out.push_back(i);
    return out;
}

std::vector<int> TruncatedEMA::raising_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (part_of(i) > 0) out.push_back(i);
    return out;
}

SVec TruncatedEMA::bar(char flavor, int node, const ring::GammaRing::Elem& a) const {
    int m = fd_->gamma_order();
    int orbit_id = fd_->trivial() ? -1 : fd_->orbit_of_node[node];
    int orbit_size = fd_->trivial() ? 1 : int(fd_->orbits[orbit_id].size());
    int isotropy = m / orbit_size;
    const auto& A = quot_.ring();
    if (!A.is_invariant_under(isotropy, a))
        throw error("bar: ring element is not invariant under the isotropy group");

    std::vector<linalg::Vec> per_lie(L_->dim(), linalg::Vec(quot_.dim()));
    int cur = node;
    ring::GammaRing::Elem ca = a;
    for (int j = 0; j < orbit_size; ++j) {
        int lie_idx = flavor == 'e'   ? L_->e(cur)
                      : flavor == 'f' ? L_->f(cur)
                                      : L_->h(cur);
        linalg::Vec red = quot_.reduce(ca);
        for (int k = 0; k < quot_.dim(); ++k) per_lie[lie_idx][k] += red[k];
        cur = fd_->trivial() ? cur : fd_->aut.sigma.perm[cur];
        ca = A.act_sigma(ca);
    }
    return express_ambient(per_lie);
}

bool TruncatedEMA::verify_antisymmetry(linalg::Mode mode) const {
    int n = dim();
    return linalg::parallel_all(int64_t(n) * n, mode, [&](int64_t k) {
        int a = int(k / n), b = int(k % n);
        return sv_add(bracket(a, b), bracket(b, a)).empty();
    });
}

bool TruncatedEMA::verify_jacobi(linalg::Mode mode) const {
    int n = dim();
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
    return linalg::parallel_all(int64_t(triples.size()), mode, [&](int64_t k) {
        auto [a, b, c] = triples[size_t(k)];
        SVec s = bracket(bracket(a, b), SVec{{c, Scalar(1)}});
        s = sv_add(s, bracket(bracket(b, c), SVec{{a, Scalar(1)}}));
        s = sv_add(s, bracket(bracket(c, a), SVec{{b, Scalar(1)}}));
        return s.empty();
    });
}

bool TruncatedEMA::verify_gradings(linalg::Mode mode) const {
    int n = dim();
    int m = fd_->gamma_order();
    return linalg::parallel_all(int64_t(n) * n, mode, [&](int64_t k) {
        int a = int(k / n), b = int(k % n);
        const SVec& br = bracket(a, b);
        if (br.empty()) return true;
        int xi = (xi_of(a) + xi_of(b)) % m;
        Weight sum = weight_of(a);
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += weight_of(b)[i];
        for (const auto& [idx, c] : br) {
            if (xi_of(idx) != xi) return false;
            if (weight_of(idx) != sum) return false;
        }
        return true;
    });
}

TruncatedEMA build_truncated_ema(const lie::LieAlgebra& L, const lie::FoldedDatum& fd,
                                 const ring::GammaRing& A, const ring::WeightFunction& psi,
                                 int N) {
    if (!fd.trivial()) {
        if (!psi.is_equivariant(A, fd))
            throw error("build_truncated_ema: psi must be Gamma-equivariant");
        for (const auto& [p, w] : psi.support) A.orbit(p);  // freeness check
    }
    ring::RingQuotient q = ring::product_ideal(A, psi, N);
    if (!fd.trivial() && !q.gamma_invariant())
        throw error("build_truncated_ema: truncation ideal is not Gamma-invariant");
    TruncatedEMA ema(L, fd, std::move(q));

    // dim L_N = dim g * dim A/J(psi_x)^N over an orbit section x
    if (!psi.empty()) {
        int section = int(psi.orbit_section(A).size());
        if (ema.dim() != L.dim() * N * section)
            throw error("build_truncated_ema: dimension mismatch against the section formula");
    }
    return ema;
}

TruncatedEMA build_untwisted_section_ema(const lie::LieAlgebra& L,
                                         const lie::FoldedDatum& trivial_fd,
                                         const ring::GammaRing& A,
                                         const std::vector<Scalar>& section, int N) {
    if (!trivial_fd.trivial())
        throw error("build_untwisted_section_ema: expected a trivial fold");
    return TruncatedEMA(L, trivial_fd, ring::product_ideal_at(A, section, N));
}

SVec UntwistIso::apply(const SVec& v) const {
    SVec out;
    for (const auto& [i, c] : v) {
        SVec img = sv_scale(image[i], c);
        out.insert(out.end(), img.begin(), img.end());
    }
    return sv_normalize(std::move(out));
}

bool UntwistIso::verify_bijective() const {
    if (source->dim() != target->dim()) return false;
    linalg::Matrix M(source->dim(), target->dim());
    for (int i = 0; i < source->dim(); ++i)
        for (const auto& [j, c] : image[i]) M.at(i, j) = c;
    return linalg::rank(M) == source->dim();
}

bool UntwistIso::verify_bracket_compat(linalg::Mode mode) const {
    int n = source->dim();
    return linalg::parallel_all(int64_t(n) * n, mode, [&](int64_t k) {
        int a = int(k / n), b = int(k % n);
        SVec lhs = target->bracket(apply(SVec{{a, Scalar(1)}}), apply(SVec{{b, Scalar(1)}}));
        SVec rhs = apply(source->bracket(a, b));
        return sv_add(lhs, sv_scale(rhs, Scalar(-1))).empty();
    });
}

UntwistIso untwist_isomorphism(const TruncatedEMA& twisted, const TruncatedEMA& untwisted) {
    UntwistIso iso;
    iso.source = &twisted;
    iso.target = &untwisted;
    const auto& qs = twisted.quotient();
    const auto& qt = untwisted.quotient();
    for (int i = 0; i < twisted.dim(); ++i) {
        auto per_lie = twisted.ambient_of(SVec{{i, Scalar(1)}});
        std::vector<linalg::Vec> mapped(per_lie.size());
        for (size_t l = 0; l < per_lie.size(); ++l) mapped[l] = qs.project_to(qt, per_lie[l]);
        iso.image.push_back(untwisted.express_ambient(mapped));
    }
    if (!iso.verify_bijective()) throw error("untwist_isomorphism: map is not bijective");
    return iso;
}

} // namespace weylem::ema
