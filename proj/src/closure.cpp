#include "weylem/closure.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <tuple>

namespace weylem::weylmod {

namespace {

using linalg::Vec;

struct QVec {
    int level = -1;  // -1 encodes zero
    Vec coords;
    bool zero() const { return level < 0 || linalg::is_zero(coords); }
};

struct Level {
    Weight mu;
    long depth = 0;
    // symbol j = gen[j] * (basis vector parent_pos[j] of the level at
    // mu - wt(gen[j])); level 0 has the single symbol "w" with gen = -1
    std::vector<int> gen, parent_pos;
    linalg::Subspace kernel{0};
    std::vector<int> free_cols;  // quotient basis = classes of unit symbols here
    std::vector<Vec> pending;    // relation vectors awaiting the closure scan
    size_t scanned = 0;
    bool built = false;

    int qdim() const { return int(free_cols.size()); }
};

inline bool debug_enabled() {
    static bool on = std::getenv("WEYLEM_DEBUG") != nullptr;
    return on;
}

struct Engine {
    const ClosureInput& in;
    const ema::TruncatedEMA& alg;
    std::vector<int> lowering, cartan, raising;
    std::map<Weight, int> level_of_weight;
    std::vector<Level> levels;
    std::vector<std::vector<int>> by_depth;
    int l0 = -1;
    long version = 0;
    std::map<std::tuple<int, int, int>, std::pair<long, QVec>> act_memo;
    std::map<std::pair<int, long>, int> slot_cache;

    struct SeedState {
        SVec elem;
        Weight step;  // folded weight of the (homogeneous) element
        long power = 0;
        bool done = false;
    };
    std::vector<SeedState> seeds;

    explicit Engine(const ClosureInput& i) : in(i), alg(*i.alg) {
        lowering = alg.lowering_indices();
        cartan = alg.cartan_indices();
        raising = alg.raising_indices();
    }

    long depth_of_weight(const Weight& mu) const {
        Weight diff(in.lambda.size());
        for (size_t i = 0; i < diff.size(); ++i) diff[i] = in.lambda[i] - mu[i];
        mpq_class h = alg.fold().folded_rs.height_of_weight(diff);
        h.canonicalize();
        if (h.get_den() != 1) return -1;
        return h.get_num().get_si();
    }

    Weight shift(const Weight& mu, int ema_idx) const {
        Weight out = mu;
        const Weight& w = alg.weight_of(ema_idx);
        for (size_t i = 0; i < out.size(); ++i) out[i] += w[i];
        return out;
    }

    int level_index(const Weight& mu) const {
        auto it = level_of_weight.find(mu);
        return it == level_of_weight.end() ? -1 : it->second;
    }

    int parent_level(int lvl, int g) const {
        Weight pm = levels[lvl].mu;
        const Weight& w = alg.weight_of(g);
        for (size_t i = 0; i < pm.size(); ++i) pm[i] -= w[i];
        int p = level_index(pm);
        if (p < 0) throw error("closure: missing parent level");
        return p;
    }

    void invalidate() {
        ++version;
        slot_cache.clear();
    }

    int symbol_slot(int lvl, int g, int pos) {
        auto key = std::make_pair(lvl, long(g) * 1000000L + pos);
        auto it = slot_cache.find(key);
        if (it != slot_cache.end()) return it->second;
        const Level& L = levels[lvl];
        int found = -1;
        for (size_t j = 0; j < L.gen.size(); ++j)
            if (L.gen[j] == g && L.parent_pos[j] == pos) {
                found = int(j);
                break;
            }
        slot_cache[key] = found;
        return found;
    }

    void refresh_free_cols(Level& L) {
        L.free_cols.clear();
        const auto& piv = L.kernel.pivots();
        size_t pi = 0;
        for (int c = 0; c < L.kernel.ambient(); ++c) {
            if (pi < piv.size() && piv[pi] == c) {
                ++pi;
                continue;
            }
            L.free_cols.push_back(c);
        }
    }

    Vec to_quotient(const Level& L, Vec sym) const {
        sym = L.kernel.reduce(std::move(sym));
        Vec out(L.free_cols.size());
        for (size_t j = 0; j < L.free_cols.size(); ++j) out[j] = sym[L.free_cols[j]];
        return out;
    }

    Vec lift(const Level& L, const Vec& q) const {
        Vec sym(L.kernel.ambient());
        for (size_t j = 0; j < q.size(); ++j)
            if (!q[j].is_zero()) sym[L.free_cols[j]] = q[j];
        return sym;
    }

    void accumulate(QVec& acc, const QVec& part, const Scalar& c) {
        if (part.zero() || c.is_zero()) return;
        if (acc.level < 0) {
            acc.level = part.level;
            acc.coords.assign(part.coords.size(), Scalar());
        }
        if (acc.level != part.level || acc.coords.size() != part.coords.size())
            throw error("closure: inconsistent accumulation");
        linalg::axpy(acc.coords, c, part.coords);
    }

    // ---- actions ----------------------------------------------------------

    QVec act_basis(int x, int lvl, int pos) {
        auto key = std::make_tuple(x, lvl, pos);
        auto it = act_memo.find(key);
        if (it != act_memo.end() && it->second.first == version) return it->second.second;
        QVec out = act_basis_impl(x, lvl, pos);
        act_memo[key] = {version, out};
        return out;
    }

    QVec act_basis_impl(int x, int lvl, int pos) {
        const Level& L = levels[lvl];
        int part = alg.part_of(x);
        if (lvl == l0) {
            if (L.qdim() == 0) return {};
            if (part > 0) return {};
            if (part == 0) {
                if (in.hev[x].is_zero()) return {};
                return {lvl, Vec{in.hev[x]}};
            }
        }
        if (part < 0) {
            int tgt = level_index(shift(L.mu, x));
            if (tgt < 0 || !levels[tgt].built) return {};
            int si = symbol_slot(tgt, x, pos);
            if (si < 0) return {};  // parent slot absent only when qdim was 0
            Vec sym(levels[tgt].kernel.ambient());
            sym[si] = Scalar(1);
            return {tgt, to_quotient(levels[tgt], std::move(sym))};
        }
        // cartan or raising on a general level: act on a representative
        Vec rep(L.kernel.ambient());
        rep[L.free_cols[pos]] = Scalar(1);
        return act_symbolic(x, lvl, rep);
    }

    QVec act_on_qvec(int x, const QVec& v) {
        if (v.zero()) return {};
        QVec out;
        for (size_t j = 0; j < v.coords.size(); ++j) {
            if (v.coords[j].is_zero()) continue;
            accumulate(out, act_basis(x, v.level, int(j)), v.coords[j]);
        }
        return out;
    }

    QVec act_elem(const SVec& elem, const QVec& v) {
        QVec out;
        for (const auto& [x, c] : elem) accumulate(out, act_on_qvec(x, v), c);
        return out;
    }

    // cartan/raising action on a symbol-space vector (target levels are
    // built since their depth is <= this level's)
    QVec act_symbolic(int x, int lvl, const Vec& sym) {
        const Level& L = levels[lvl];
        QVec out;
        for (size_t j = 0; j < sym.size(); ++j) {
            if (sym[j].is_zero()) continue;
            if (lvl == l0) {
                accumulate(out, act_basis(x, l0, 0), sym[j]);
                continue;
            }
            int g = L.gen[j];
            int p = L.parent_pos[j];
            int plvl = parent_level(lvl, g);
            // x (g p) = [x, g] p + g (x p)
            const SVec& br = alg.bracket(x, g);
            if (!br.empty()) {
                Vec unit(levels[plvl].qdim());
                unit[p] = Scalar(1);
                accumulate(out, act_elem(br, QVec{plvl, std::move(unit)}), sym[j]);
            }
            QVec xp = act_basis(x, plvl, p);
            accumulate(out, act_on_qvec(g, xp), sym[j]);
        }
        return out;
    }

    // g * (symbol vector at level plvl) expressed in symbol coords of tgt
    Vec lower_symbolic(int g, int plvl, const Vec& sym, int tgt) {
        const Level& P = levels[plvl];
        Vec out(levels[tgt].gen.size());
        for (size_t j = 0; j < sym.size(); ++j) {
            if (sym[j].is_zero()) continue;
            if (plvl == l0) {
                int slot = symbol_slot(tgt, g, 0);
                if (slot < 0) throw error("closure: missing w-image slot");
                out[slot] += sym[j];
                continue;
            }
            int g2 = P.gen[j];
            int p = P.parent_pos[j];
            int pp = parent_level(plvl, g2);
            // g (g2 p) = [g, g2] p + g2 (g p)
            for (const auto& [z, c] : alg.bracket(g, g2)) {
                if (alg.part_of(z) >= 0)
                    throw error("closure: bracket of lowering elements left the lowering part");
                int slot = symbol_slot(tgt, z, p);
                if (slot < 0) throw error("closure: missing bracket slot");
                out[slot] += c * sym[j];
            }
            QVec gp = act_basis(g, pp, p);
            if (!gp.zero()) {
                for (size_t k = 0; k < gp.coords.size(); ++k) {
                    if (gp.coords[k].is_zero()) continue;
                    int slot = symbol_slot(tgt, g2, int(k));
                    if (slot < 0) throw error("closure: missing lowered slot");
                    out[slot] += gp.coords[k] * sym[j];
                }
            }
        }
        return out;
    }

    bool add_relation(int lvl, Vec sym) {
        Level& L = levels[lvl];
        Vec copy = sym;
        if (!L.kernel.add(std::move(sym))) return false;
        refresh_free_cols(L);
        L.pending.push_back(std::move(copy));
        invalidate();
        if (debug_enabled()) {
            std::printf("  [rel] level (");
            for (long c : L.mu) std::printf(" %ld", c);
            std::printf(" ) depth %ld: kernel %d / %d symbols, qdim %d\n", L.depth,
                        L.kernel.dim(), L.kernel.ambient(), L.qdim());
        }
        return true;
    }

    void build_level(int lvl) {
        Level& L = levels[lvl];
        L.gen.clear();
        L.parent_pos.clear();
        L.pending.clear();
        L.scanned = 0;
        for (int g : lowering) {
            Weight pm = L.mu;
            const Weight& w = alg.weight_of(g);
            for (size_t i = 0; i < pm.size(); ++i) pm[i] -= w[i];
            int p = level_index(pm);
            if (p < 0 || !levels[p].built) continue;
            for (int pos = 0; pos < levels[p].qdim(); ++pos) {
                L.gen.push_back(g);
                L.parent_pos.push_back(pos);
            }
        }
        L.kernel = linalg::Subspace(int(L.gen.size()));
        L.built = true;
        refresh_free_cols(L);
        invalidate();

        std::vector<Vec> rels;

        // bracket syzygies (g, g2 u) - (g2, g u) - [g, g2] u over every
        // unordered lowering pair and every basis vector two levels up
        for (size_t a = 0; a < lowering.size(); ++a) {
            for (size_t b = a + 1; b < lowering.size(); ++b) {
                int g = lowering[a], g2 = lowering[b];
                Weight pm = L.mu;
                const Weight& wg = alg.weight_of(g);
                const Weight& wg2 = alg.weight_of(g2);
                for (size_t i = 0; i < pm.size(); ++i) pm[i] -= wg[i] + wg2[i];
                int pp = level_index(pm);
                if (pp < 0 || !levels[pp].built || levels[pp].qdim() == 0) continue;
                for (int u = 0; u < levels[pp].qdim(); ++u) {
                    Vec sym(L.gen.size());
                    QVec g2u = act_basis(g2, pp, u);
                    if (!g2u.zero())
                        for (size_t j = 0; j < g2u.coords.size(); ++j) {
                            if (g2u.coords[j].is_zero()) continue;
                            int slot = symbol_slot(lvl, g, int(j));
                            if (slot < 0) throw error("closure: syzygy slot (g)");
                            sym[slot] += g2u.coords[j];
                        }
                    QVec gu = act_basis(g, pp, u);
                    if (!gu.zero())
                        for (size_t j = 0; j < gu.coords.size(); ++j) {
                            if (gu.coords[j].is_zero()) continue;
                            int slot = symbol_slot(lvl, g2, int(j));
                            if (slot < 0) throw error("closure: syzygy slot (g2)");
                            sym[slot] -= gu.coords[j];
                        }
                    for (const auto& [z, c] : alg.bracket(g, g2)) {
                        if (alg.part_of(z) >= 0)
                            throw error("closure: lowering bracket left the lowering part");
                        int slot = symbol_slot(lvl, z, u);
                        if (slot < 0) throw error("closure: syzygy slot (bracket)");
                        sym[slot] -= c;
                    }
                    if (!linalg::is_zero(sym)) rels.push_back(std::move(sym));
                }
            }
        }

        // downward images of the relation subspaces above
        for (int g : lowering) {
            Weight pm = L.mu;
            const Weight& w = alg.weight_of(g);
            for (size_t i = 0; i < pm.size(); ++i) pm[i] -= w[i];
            int p = level_index(pm);
            if (p < 0 || !levels[p].built) continue;
            for (const Vec& r : levels[p].kernel.rows())
                rels.push_back(lower_symbolic(g, p, r, lvl));
        }

        for (Vec& r : rels) add_relation(lvl, std::move(r));
    }
};

} // namespace

int ClosureModule::level_of_global(int g) const {
    for (size_t l = 0; l < level_offsets.size(); ++l)
        if (g >= level_offsets[l] && g < level_offsets[l] + level_dims[l]) return int(l);
    return -1;
}

std::map<Weight, int> ClosureModule::character() const {
    std::map<Weight, int> out;
    for (size_t l = 0; l < level_weights.size(); ++l)
        if (level_dims[l] > 0) out[level_weights[l]] += level_dims[l];
    return out;
}

ClosureModule cyclic_closure(const ClosureInput& in) {
    Engine eng(in);
    const auto& alg = *in.alg;

    // reachable weights up to the depth cap
    std::map<Weight, long> depth_of;
    depth_of[in.lambda] = 0;
    std::deque<Weight> bfs{in.lambda};
    while (!bfs.empty()) {
        Weight mu = bfs.front();
        bfs.pop_front();
        for (int g : eng.lowering) {
            Weight nu = eng.shift(mu, g);
            if (depth_of.count(nu)) continue;
            long nd = eng.depth_of_weight(nu);
            if (nd < 0 || nd > in.depth_cap) continue;
            depth_of[nu] = nd;
            bfs.push_back(nu);
        }
    }

    long max_depth = 0;
    for (const auto& [mu, dd] : depth_of) max_depth = std::max(max_depth, dd);
    eng.by_depth.assign(size_t(max_depth + 1), {});
    for (const auto& [mu, dd] : depth_of) {
        int idx = int(eng.levels.size());
        Level L;
        L.mu = mu;
        L.depth = dd;
        eng.levels.push_back(std::move(L));
        eng.level_of_weight[mu] = idx;
        eng.by_depth[size_t(dd)].push_back(idx);
    }
    for (auto& lst : eng.by_depth)
        std::sort(lst.begin(), lst.end(),
                  [&](int a, int b) { return eng.levels[a].mu < eng.levels[b].mu; });

    eng.l0 = eng.level_of_weight.at(in.lambda);
    {
        Level& L = eng.levels[eng.l0];
        L.gen = {-1};
        L.parent_pos = {0};
        L.kernel = linalg::Subspace(1);
        L.built = true;
        eng.refresh_free_cols(L);
    }

    for (const auto& [elem, power] : in.seeds) {
        if (elem.empty()) continue;
        Engine::SeedState s;
        s.elem = elem;
        s.step = alg.weight_of(elem.front().first);
        for (const auto& [x, c] : elem)
            if (alg.weight_of(x) != s.step) throw error("closure: inhomogeneous seed element");
        s.power = power;
        eng.seeds.push_back(std::move(s));
    }

    long max_gen_height = 1;
    for (int g : eng.lowering) max_gen_height = std::max(max_gen_height, -alg.fheight_of(g));

    long d = 1;
    bool dead = false;
    while (d <= max_depth && !dead) {
        for (int lvl : eng.by_depth[size_t(d)]) eng.build_level(lvl);
        if (debug_enabled()) {
            std::printf("[sweep] depth %ld built:", d);
            for (int lvl : eng.by_depth[size_t(d)])
                std::printf(" %d/%d", eng.levels[lvl].qdim(), eng.levels[lvl].kernel.ambient());
            std::printf("\n");
        }

        // re-evaluate seed powers from scratch (quotient coordinates can move
        // between sweeps) and impose the finished ones
        for (auto& s : eng.seeds) {
            if (s.done) continue;
            QVec v{eng.l0, Vec{Scalar(1)}};
            long applied = 0;
            bool parked = false;
            while (applied < s.power && !v.zero()) {
                Weight tgt = eng.levels[v.level].mu;
                for (size_t i = 0; i < tgt.size(); ++i) tgt[i] += s.step[i];
                int tl = eng.level_index(tgt);
                if (tl < 0) throw error("closure: seed escapes the depth cap; raise the cap");
                if (!eng.levels[tl].built) {
                    parked = true;  // wait for a deeper sweep
                    break;
                }
                v = eng.act_elem(s.elem, v);
                ++applied;
            }
            if (!parked) {
                if (!v.zero())
                    eng.add_relation(v.level, eng.lift(eng.levels[v.level], v.coords));
                s.done = true;
            }
        }

        // closure scan: cartan and raising images of every pending relation
        long restart_depth = -1;
        bool rescan = true;
        while (rescan && restart_depth < 0) {
            rescan = false;
            for (size_t li = 0; li < eng.levels.size() && restart_depth < 0; ++li) {
                Level& L = eng.levels[li];
                if (!L.built || L.depth > d) continue;
                while (L.scanned < L.pending.size()) {
                    Vec r = L.pending[L.scanned++];
                    auto process = [&](int x) {
                        QVec img = eng.act_symbolic(x, int(li), r);
                        if (img.zero()) return;
                        Vec sym = eng.lift(eng.levels[img.level], img.coords);
                        if (eng.add_relation(img.level, std::move(sym))) {
                            rescan = true;
                            // any addition above the frontier invalidates the
                            // levels built below it
                            if (eng.levels[img.level].depth < d)
                                restart_depth =
                                    restart_depth < 0
                                        ? eng.levels[img.level].depth
                                        : std::min(restart_depth, eng.levels[img.level].depth);
                        }
                    };
                    for (int x : eng.cartan) {
                        process(x);
                        if (restart_depth >= 0) break;
                    }
                    if (restart_depth >= 0) break;
                    for (int x : eng.raising) {
                        process(x);
                        if (restart_depth >= 0) break;
                    }
                    if (restart_depth >= 0) break;
                }
            }
        }

        if (eng.levels[eng.l0].qdim() == 0) {
            dead = true;
            break;
        }

        if (restart_depth >= 0) {
            if (debug_enabled()) std::printf("[restart] from depth %ld\n", restart_depth);
            for (Level& L : eng.levels) {
                if (L.depth > restart_depth && L.built) {
                    L.built = false;
                    L.kernel = linalg::Subspace(0);
                    L.free_cols.clear();
                    L.pending.clear();
                    L.scanned = 0;
                    L.gen.clear();
                    L.parent_pos.clear();
                }
            }
            for (auto& s : eng.seeds) s.done = false;
            eng.invalidate();
            d = restart_depth + 1;
            continue;
        }

        // nothing can live below a full window of empty depths
        if (d >= max_gen_height) {
            bool window_empty = true;
            for (long dd = d - max_gen_height + 1; dd <= d && window_empty; ++dd)
                for (int lvl : eng.by_depth[size_t(dd)])
                    if (eng.levels[lvl].built && eng.levels[lvl].qdim() > 0) window_empty = false;
            if (window_empty) break;
        }
        ++d;
    }

    ClosureModule out;
    if (dead || eng.levels[eng.l0].qdim() == 0) {
        out.zero_module = true;
        return out;
    }

    std::vector<int> order;
    for (size_t li = 0; li < eng.levels.size(); ++li)
        if (eng.levels[li].built && eng.levels[li].qdim() > 0) order.push_back(int(li));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (eng.levels[a].depth != eng.levels[b].depth)
            return eng.levels[a].depth < eng.levels[b].depth;
        return eng.levels[a].mu < eng.levels[b].mu;
    });

    std::vector<int> global_offset(eng.levels.size(), -1);
    int total = 0;
    for (int li : order) {
        out.level_weights.push_back(eng.levels[li].mu);
        out.level_dims.push_back(eng.levels[li].qdim());
        out.level_offsets.push_back(total);
        global_offset[li] = total;
        total += eng.levels[li].qdim();
        if (eng.levels[li].depth == max_depth) out.depth_capped = true;
    }
    out.dim = total;
    out.cyclic = global_offset[eng.l0];

    out.action.assign(alg.dim(), linalg::Matrix(total, total));
    for (int x = 0; x < alg.dim(); ++x) {
        for (int li : order) {
            const Level& L = eng.levels[li];
            for (int pos = 0; pos < L.qdim(); ++pos) {
                QVec img = eng.act_basis(x, li, pos);
                if (img.zero() || global_offset[img.level] < 0) continue;
                int col = global_offset[li] + pos;
                for (size_t j = 0; j < img.coords.size(); ++j)
                    if (!img.coords[j].is_zero())
                        out.action[x].at(global_offset[img.level] + int(j), col) = img.coords[j];
            }
        }
    }
    return out;
}

} // namespace weylem::weylmod
