#pragma once

// Independent brute-force closure for local Weyl modules of sl2 over
// k[t, t^-1] at a single point.  Works on the full commutative monomial
// window in the lowering operators F_j = f (x) t^j with hand-derived sl2
// commutation formulas; it shares nothing with the production closure
// engine beyond the scalar type and echelon subspaces.
//
// For a monomial F^a w (the F_j commute):
//   (f (x) r) F^a w = sum_j r_j F^{a+e_j} w
//   (h (x) r) F^a w = hev(r) F^a w - 2 sum_j a_j (f (x) r t^j) F^{a-e_j} w
//   (e (x) r) F^a w = sum_j a_j hev(r t^j) F^{a-e_j} w
//                     - sum_{j,k} a_j (a_k - [j=k]) (f (x) r t^{j+k}) F^{a-e_j-e_k} w
// with hev(x) = m x(pt) on the cyclic vector.

#include "weylem/linalg.hpp"

#include <map>
#include <vector>

namespace oracle {

using weylem::Scalar;
using weylem::linalg::Subspace;
using weylem::linalg::Vec;

struct Sl2PointOracle {
    long m;
    Scalar pt;
    int N;   // truncation exponent: the ring is A/(t-pt)^N
    long D;  // monomial degree window

    using RVec = std::vector<Scalar>;  // coefficients of 1, t, ..., t^{N-1}

    std::vector<Scalar> modulus;  // (t-pt)^N, monic
    std::vector<RVec> tpow;       // t^k reduced, k = 0..3N

    std::vector<std::vector<int>> monos;
    std::map<std::vector<int>, int> mono_index;
    std::vector<std::vector<int>> by_degree;  // degree -> monomial ids
    std::vector<int> block_pos;               // monomial id -> position in its block

    using Sparse = std::vector<std::pair<int, Scalar>>;  // (monomial id, coeff)
    mutable std::map<long, Sparse> act_memo;

    Sl2PointOracle(long m_, Scalar pt_, int N_, long D_) : m(m_), pt(pt_), N(N_), D(D_) {
        modulus.assign(1, Scalar(1));
        for (int k = 0; k < N; ++k) {
            std::vector<Scalar> next(modulus.size() + 1, Scalar{});
            for (size_t i = 0; i < modulus.size(); ++i) {
                next[i + 1] += modulus[i];
                next[i] -= pt * modulus[i];
            }
            modulus = next;
        }
        for (int k = 0; k <= 3 * N; ++k) {
            if (k < N) {
                RVec v(size_t(N), Scalar{});
                v[size_t(k)] = Scalar(1);
                tpow.push_back(std::move(v));
            } else {
                RVec prev = tpow.back();
                RVec v(size_t(N), Scalar{});
                for (int i = 0; i + 1 < N; ++i) v[size_t(i) + 1] = prev[size_t(i)];
                const Scalar& top = prev[size_t(N) - 1];
                if (!top.is_zero())
                    for (int i = 0; i < N; ++i) v[size_t(i)] -= top * modulus[size_t(i)];
                tpow.push_back(std::move(v));
            }
        }
        std::vector<int> cur(size_t(N), 0);
        enumerate(cur, 0, D);
        by_degree.assign(size_t(D) + 1, {});
        block_pos.assign(monos.size(), -1);
        for (size_t i = 0; i < monos.size(); ++i) {
            long deg = 0;
            for (int x : monos[i]) deg += x;
            block_pos[i] = int(by_degree[size_t(deg)].size());
            by_degree[size_t(deg)].push_back(int(i));
        }
    }

    void enumerate(std::vector<int>& cur, int pos, long budget) {
        if (pos == N) {
            mono_index[cur] = int(monos.size());
            monos.push_back(cur);
            return;
        }
        for (int k = 0; k <= budget; ++k) {
            cur[size_t(pos)] = k;
            enumerate(cur, pos + 1, budget - k);
        }
        cur[size_t(pos)] = 0;
    }

    Scalar hev(const RVec& r) const {
        Scalar val, p(1);
        for (int i = 0; i < N; ++i) {
            val += r[size_t(i)] * p;
            p *= pt;
        }
        return val * Scalar(m);
    }

    RVec shift(const RVec& r, int k) const {  // r * t^k reduced
        RVec out(size_t(N), Scalar{});
        for (int i = 0; i < N; ++i)
            if (!r[size_t(i)].is_zero())
                for (int q = 0; q < N; ++q)
                    out[size_t(q)] += r[size_t(i)] * tpow[size_t(i + k)][size_t(q)];
        return out;
    }

    int dim_ambient() const { return int(monos.size()); }

    void add_f(const RVec& r, int mono, const Scalar& c, Sparse& out) const {
        const auto& a = monos[size_t(mono)];
        for (int j = 0; j < N; ++j) {
            if (r[size_t(j)].is_zero()) continue;
            std::vector<int> up = a;
            up[size_t(j)] += 1;
            auto it = mono_index.find(up);
            if (it != mono_index.end()) out.push_back({it->second, c * r[size_t(j)]});
            // beyond the window: declared zero
        }
    }

    Sparse act(char flavor, int s, int mono) const {
        long key = (long(flavor) * (3 * N + 1) + s) * long(monos.size()) + mono;
        auto mit = act_memo.find(key);
        if (mit != act_memo.end()) return mit->second;
        Sparse out;
        const auto& a = monos[size_t(mono)];
        const RVec& r = tpow[size_t(s)];
        if (flavor == 'f') {
            add_f(r, mono, Scalar(1), out);
        } else if (flavor == 'h') {
            Scalar hv = hev(r);
            if (!hv.is_zero()) out.push_back({mono, hv});
            for (int j = 0; j < N; ++j) {
                if (a[size_t(j)] == 0) continue;
                std::vector<int> down = a;
                down[size_t(j)] -= 1;
                add_f(shift(r, j), mono_index.at(down), Scalar(-2 * a[size_t(j)]), out);
            }
        } else {
            for (int j = 0; j < N; ++j) {
                if (a[size_t(j)] == 0) continue;
                std::vector<int> down = a;
                down[size_t(j)] -= 1;
                Scalar hv = hev(shift(r, j));
                if (!hv.is_zero())
                    out.push_back({mono_index.at(down), Scalar(a[size_t(j)]) * hv});
                for (int k = 0; k < N; ++k) {
                    long factor = long(a[size_t(j)]) * (a[size_t(k)] - (j == k ? 1 : 0));
                    if (factor == 0 || down[size_t(k)] == 0) continue;
                    std::vector<int> down2 = down;
                    down2[size_t(k)] -= 1;
                    add_f(shift(r, j + k), mono_index.at(down2), Scalar(-factor), out);
                }
            }
        }
        act_memo[key] = out;
        return out;
    }

    // degree-homogeneous vector in block coordinates
    struct BVec {
        long deg = -1;
        Vec coords;
        bool zero() const { return deg < 0 || weylem::linalg::is_zero(coords); }
    };

    BVec act_block(char flavor, int s, const BVec& v) const {
        long tdeg = v.deg + (flavor == 'f' ? 1 : flavor == 'h' ? 0 : -1);
        if (tdeg < 0 || tdeg > D) return {};
        BVec out{tdeg, Vec(by_degree[size_t(tdeg)].size())};
        for (size_t p = 0; p < v.coords.size(); ++p) {
            if (v.coords[p].is_zero()) continue;
            for (const auto& [g, c] : act(flavor, s, by_degree[size_t(v.deg)][p]))
                out.coords[size_t(block_pos[size_t(g)])] += v.coords[p] * c;
        }
        return out;
    }

    /// Dimension of the monomial window modulo the closure of the
    /// integrability relation (f (x) 1)^{m+1} w under all operators,
    /// computed degree block by degree block.
    int weyl_dim() const {
        std::vector<int> se(size_t(N), 0);
        se[0] = int(m) + 1;
        auto it = mono_index.find(se);
        if (it == mono_index.end()) return -1;  // window too small
        long sdeg = m + 1;
        BVec seed{sdeg, Vec(by_degree[size_t(sdeg)].size())};
        seed.coords[size_t(block_pos[it->second])] = Scalar(1);

        std::vector<Subspace> K;
        for (long d = 0; d <= D; ++d) K.emplace_back(int(by_degree[size_t(d)].size()));
        std::vector<BVec> queue{seed};
        K[size_t(sdeg)].add(seed.coords);
        while (!queue.empty()) {
            BVec v = queue.back();
            queue.pop_back();
            for (char fl : {'e', 'h', 'f'}) {
                for (int s = 0; s < N; ++s) {
                    BVec img = act_block(fl, s, v);
                    if (img.zero()) continue;
                    if (K[size_t(img.deg)].add(img.coords)) queue.push_back(std::move(img));
                }
            }
        }
        int dim = 0;
        for (long d = 0; d <= D; ++d)
            dim += int(by_degree[size_t(d)].size()) - K[size_t(d)].dim();
        return dim;
    }
};

} // namespace oracle
