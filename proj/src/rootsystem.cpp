#include "weylem/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace weylem::lie {

bool RootSystem::valid_type(char type, int rank) {
    switch (type) {
        case 'A': return rank >= 1;
        case 'B': return rank >= 2;
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

// Simply-laced edge list for A, D, E in the standard labeling.
static std::vector<std::pair<int, int>> diagram_edges(char type, int n) {
    std::vector<std::pair<int, int>> e;
    if (type == 'A') {
        for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    } else if (type == 'D') {
        for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
        e.push_back({n - 3, n - 1});
    } else if (type == 'E') {
        // chain 1-3-4-5-6(-7)(-8), node 2 attached to 4 (1-based)
        e = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
        if (n >= 7) e.push_back({5, 6});
        if (n == 8) e.push_back({6, 7});
    }
    return e;
}

RootSystem RootSystem::build(char type, int rank) {
    if (!valid_type(type, rank))
        throw error("RootSystem: invalid type/rank pair " + std::string(1, type) +
                    std::to_string(rank));
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    int n = rank;
    rs.d_.assign(n, 1);
    std::vector<std::vector<long>> sym(n, std::vector<long>(n, 0));  // (alpha_i, alpha_j)

    auto laced = [&](const std::vector<std::pair<int, int>>& edges) {
        for (int i = 0; i < n; ++i) sym[i][i] = 2;
        for (auto [a, b] : edges) sym[a][b] = sym[b][a] = -1;
    };

    switch (type) {
        case 'A':
        case 'D':
        case 'E':
            laced(diagram_edges(type, n));
            break;
        case 'B':
            // alpha_n short: d = (2,...,2,1), norms 4,...,4,2
            for (int i = 0; i < n - 1; ++i) rs.d_[i] = 2;
            rs.d_[n - 1] = 1;
            for (int i = 0; i < n; ++i) sym[i][i] = 2 * rs.d_[i];
            for (int i = 0; i + 1 < n; ++i) sym[i][i + 1] = sym[i + 1][i] = -2;
            break;
        case 'C':
            // alpha_n long
            rs.d_[n - 1] = 2;
            for (int i = 0; i < n; ++i) sym[i][i] = 2 * rs.d_[i];
            for (int i = 0; i + 2 < n; ++i) sym[i][i + 1] = sym[i + 1][i] = -1;
            sym[n - 2][n - 1] = sym[n - 1][n - 2] = -2;
            break;
        case 'F':
            // 1-2=>3-4, alpha_1, alpha_2 long
            rs.d_ = {2, 2, 1, 1};
            for (int i = 0; i < 4; ++i) sym[i][i] = 2 * rs.d_[i];
            sym[0][1] = sym[1][0] = -2;
            sym[1][2] = sym[2][1] = -2;
            sym[2][3] = sym[3][2] = -1;
            break;
        case 'G':
            // alpha_1 short, alpha_2 long
            rs.d_ = {1, 3};
            sym[0][0] = 2;
            sym[1][1] = 6;
            sym[0][1] = sym[1][0] = -3;
            break;
    }

    rs.cartan_.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.cartan_[i][j] = sym[i][j] / rs.d_[i];  // alpha_j(h_i)

    rs.label_ = std::string(1, type) + std::to_string(rank);
    rs.generate_positive_roots();
    return rs;
}

RootSystem RootSystem::from_cartan(const std::vector<std::vector<long>>& cartan) {
    RootSystem rs;
    rs.label_ = identify_cartan(cartan);  // throws if not simple
    rs.type_ = rs.label_[0];
    rs.rank_ = int(cartan.size());
    rs.cartan_ = cartan;
    int n = rs.rank_;
    // Symmetrizing d: d_i C[i][j] = d_j C[j][i]; connected, so a BFS with
    // rational ratios followed by clearing denominators determines d.
    std::vector<mpq_class> ratio(n, 0);
    ratio[0] = 1;
    std::vector<bool> done(n, false);
    done[0] = true;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < n; ++i) {
            if (!done[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (done[j] || cartan[i][j] == 0) continue;
                mpq_class step(cartan[i][j], cartan[j][i]);
                step.canonicalize();
                ratio[j] = ratio[i] * step;
                done[j] = true;
                progress = true;
            }
        }
    }
    if (!std::all_of(done.begin(), done.end(), [](bool b) { return b; }))
        throw error("from_cartan: Cartan matrix not connected");
    mpz_class lcm_den = 1;
    for (auto& r : ratio) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), r.get_den().get_mpz_t());
    mpz_class gcd_num = 0;
    std::vector<mpz_class> nums(n);
    for (int i = 0; i < n; ++i) {
        nums[i] = ratio[i].get_num() * (lcm_den / ratio[i].get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), nums[i].get_mpz_t());
    }
    rs.d_.resize(n);
    for (int i = 0; i < n; ++i) rs.d_[i] = mpz_class(nums[i] / gcd_num).get_si();
    rs.generate_positive_roots();
    return rs;
}

void RootSystem::generate_positive_roots() {
    int n = rank_;
    std::map<RootVec, bool> seen;
    std::vector<std::vector<RootVec>> by_height(1);
    by_height.push_back({});
    for (int i = 0; i < n; ++i) {
        RootVec a(n, 0);
        a[i] = 1;
        by_height[1].push_back(a);
        seen[a] = true;
    }
    for (int h = 1; !by_height[h].empty(); ++h) {
        by_height.push_back({});
        for (const RootVec& beta : by_height[h]) {
            for (int i = 0; i < n; ++i) {
                RootVec down = beta;
                int p = 0;
                while (true) {
                    down[i] -= 1;
                    bool ok = down[i] >= 0 && seen.count(down);
                    if (down[i] == 0 &&
                        std::all_of(down.begin(), down.end(), [](long c) { return c == 0; }))
                        ok = false;  // zero is not a root
                    if (!ok) break;
                    ++p;
                }
                long pairing = root_pairing(beta, i);
                if (p - pairing > 0) {
                    RootVec up = beta;
                    up[i] += 1;
                    if (!seen.count(up)) {
                        seen[up] = true;
                        by_height[h + 1].push_back(up);
                    }
                }
            }
        }
        std::sort(by_height[h + 1].begin(), by_height[h + 1].end());
    }
    positive_.clear();
    for (const auto& level : by_height)
        for (const auto& r : level) positive_.push_back(r);
}

int RootSystem::root_index(const RootVec& r) const {
    for (size_t k = 0; k < positive_.size(); ++k)
        if (positive_[k] == r) return int(k);
    return -1;
}

long RootSystem::height(const RootVec& r) {
    return std::accumulate(r.begin(), r.end(), 0L);
}

long RootSystem::root_pairing(const RootVec& beta, int i) const {
    long s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta[j];
    return s;
}

Weight RootSystem::weight_of_root(const RootVec& beta) const {
    Weight w(rank_);
    for (int i = 0; i < rank_; ++i) w[i] = root_pairing(beta, i);
    return w;
}

long RootSystem::form_roots(const RootVec& a, const RootVec& b) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * d_[i] * cartan_[i][j];
    return s;
}

std::vector<long> RootSystem::coroot(const RootVec& beta) const {
    long norm = form_roots(beta, beta);
    std::vector<long> co(rank_);
    for (int i = 0; i < rank_; ++i) {
        long num = 2 * beta[i] * d_[i];
        if (num % norm != 0) throw error("coroot: non-integral coefficient");
        co[i] = num / norm;
    }
    return co;
}

long RootSystem::pair_weight_coroot(const Weight& mu, const RootVec& beta) const {
    auto co = coroot(beta);
    long s = 0;
    for (int i = 0; i < rank_; ++i) s += co[i] * mu[i];
    return s;
}

std::vector<mpq_class> RootSystem::root_coords_of_weight(const Weight& mu) const {
    // Solve C * c = mu exactly.
    int n = rank_;
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
        m[i][n] = mu[i];
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) throw error("singular Cartan matrix");
        std::swap(m[p], m[c]);
        mpq_class inv = 1 / m[c][c];
        for (int j = c; j <= n; ++j) m[c][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || sgn(m[i][c]) == 0) continue;
            mpq_class f = m[i][c];
            for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<mpq_class> out(n);
    for (int i = 0; i < n; ++i) out[i] = m[i][n];
    return out;
}

mpq_class RootSystem::height_of_weight(const Weight& mu) const {
    auto c = root_coords_of_weight(mu);
    mpq_class s = 0;
    for (const auto& x : c) s += x;
    return s;
}

Weight RootSystem::simple_reflection(int i, const Weight& mu) const {
    Weight out = mu;
    long mi = mu[i];
    for (int k = 0; k < rank_; ++k) out[k] -= mi * cartan_[k][i];
    return out;
}

bool RootSystem::dominant(const Weight& mu) const {
    return std::all_of(mu.begin(), mu.end(), [](long c) { return c >= 0; });
}

Weight RootSystem::dominant_representative(const Weight& mu) const {
    Weight w = mu;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank_; ++i) {
            if (w[i] < 0) {
                w = simple_reflection(i, w);
                moved = true;
            }
        }
    }
    return w;
}

Weight RootSystem::longest_element_action(const Weight& mu) const {
    // w0 mu is antidominant: the negative of the dominant representative
    // of -mu
    Weight neg(rank_);
    for (int i = 0; i < rank_; ++i) neg[i] = -mu[i];
    Weight dom = dominant_representative(neg);
    for (int i = 0; i < rank_; ++i) dom[i] = -dom[i];
    return dom;
}

mpz_class RootSystem::weyl_dim(const Weight& mu) const {
    if (!dominant(mu)) throw error("weyl_dim: weight not dominant");
    // (nu, beta) = sum_j beta_j d_j nu(h_j) up to the overall 1/1 factor
    auto form_with_root = [&](const Weight& nu, const RootVec& beta) {
        long s = 0;
        for (int j = 0; j < rank_; ++j) s += beta[j] * d_[j] * nu[j];
        return s;
    };
    Weight rho(rank_, 1);
    Weight mu_rho(rank_);
    for (int i = 0; i < rank_; ++i) mu_rho[i] = mu[i] + 1;
    mpq_class prod = 1;
    for (const auto& beta : positive_) {
        mpq_class factor(form_with_root(mu_rho, beta), form_with_root(rho, beta));
        factor.canonicalize();
        prod *= factor;
    }
    prod.canonicalize();
    if (prod.get_den() != 1) throw error("weyl_dim: non-integral result");
    return prod.get_num();
}

std::string RootSystem::identify_cartan(const std::vector<std::vector<long>>& m) {
    int n = int(m.size());
    std::vector<char> candidates = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    auto matches = [&](const RootSystem& rs, const std::vector<int>& perm) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[perm[i]][perm[j]] != rs.cartan(i, j)) return false;
        return true;
    };
    for (int pass = 0; pass < 2; ++pass) {
        for (char t : candidates) {
            if (!valid_type(t, n)) continue;
            RootSystem rs = build(t, n);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            if (pass == 0) {
                if (matches(rs, perm)) return rs.label();
            } else {
                do {
                    if (matches(rs, perm)) return rs.label();
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
    throw error("identify_cartan: not a Cartan matrix of simple type");
}

} // namespace weylem::lie
