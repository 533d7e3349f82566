#include "weylem/weylalg.hpp"

#include <algorithm>
#include <functional>

namespace weylem::weylalg {

SymAlgebraDescriptor build_descriptor(const lie::Weight& lambda, const lie::FoldedDatum& fd,
                                      const GammaRing& A) {
    SymAlgebraDescriptor d;
    if (!fd.folded_rs.dominant(lambda)) throw error("build_descriptor: lambda not dominant");
    if (!fd.is_restriction(lambda)) {
        d.zero_algebra = true;
        return d;
    }
    for (size_t k = 0; k < fd.orbits.size(); ++k) {
        SymAlgebraDescriptor::Factor f;
        f.orbit = int(k);
        f.node = fd.orbits[k].front();
        f.r = lambda[k] / fd.kappa[k];
        f.isotropy = fd.isotropy_order[k];
        std::string u = f.isotropy == 1 ? "t" : "t^" + std::to_string(f.isotropy);
        if (f.r == 0) {
            f.presentation = "k";
        } else {
            std::string gens;
            for (long i = 1; i <= f.r; ++i) gens += "e" + std::to_string(i) + ", ";
            gens += "e" + std::to_string(f.r) + "^-1";
            f.presentation = "k[" + gens + "]  (elementary symmetric in " + std::to_string(f.r) +
                             " copies of " + (A.kind() == GammaRing::Kind::Laurent
                                                  ? u + ", " + u + "^-1"
                                                  : u) +
                             ")";
            if (A.kind() != GammaRing::Kind::Laurent) {
                gens.clear();
                for (long i = 1; i <= f.r; ++i)
                    gens += "e" + std::to_string(i) + (i < f.r ? ", " : "");
                f.presentation = "k[" + gens + "]  (elementary symmetric in " +
                                 std::to_string(f.r) + " copies of " + u + ")";
            }
        }
        d.factors.push_back(std::move(f));
    }
    return d;
}

void MaxSpecPoint::canonicalize(const SymAlgebraDescriptor& d, const lie::FoldedDatum&,
                                const GammaRing& A) {
    if (points.size() != d.factors.size())
        throw error("MaxSpecPoint: factor count mismatch");
    for (size_t k = 0; k < points.size(); ++k) {
        const auto& f = d.factors[k];
        if (long(points[k].size()) != f.r) throw error("MaxSpecPoint: wrong tuple length");
        for (auto& p : points[k]) {
            if (f.isotropy > 1) {
                // canonical representative of the Gamma_j-orbit {sigma^{o s} p}
                int o = A.gamma_order() / f.isotropy;
                Scalar best = p, cur = p;
                for (int s = 1; s < f.isotropy; ++s) {
                    cur = A.point_act(o, cur);
                    if (Scalar::compare(cur, best) < 0) best = cur;
                }
                p = best;
            }
            if (A.kind() == GammaRing::Kind::Laurent && p.is_zero())
                throw error("MaxSpecPoint: 0 is not a Laurent point");
        }
        std::sort(points[k].begin(), points[k].end(),
                  [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
    }
}

bool MaxSpecPoint::operator==(const MaxSpecPoint& o) const { return points == o.points; }

ring::WeightFunction maxspec_to_psi(const MaxSpecPoint& mm, const SymAlgebraDescriptor& d,
                                    const lie::FoldedDatum& fd, const GammaRing& A) {
    if (d.zero_algebra) throw error("maxspec_to_psi: zero algebra has no points");
    int rank = fd.L->rank();
    int m = A.gamma_order();
    ring::WeightFunction psi;
    for (size_t k = 0; k < d.factors.size(); ++k) {
        const auto& f = d.factors[k];
        for (const Scalar& p : mm.points[k]) {
            // psi(sigma^s p) += omega at node sigma^s(j)
            Scalar q = p;
            int node = f.node;
            for (int s = 0; s < m; ++s) {
                lie::Weight w(rank, 0);
                w[node] = 1;
                psi.insert_add(q, w);
                q = A.point_sigma(q);
                node = fd.aut.sigma.perm[node];
            }
        }
    }
    if (!fd.trivial() && !psi.is_equivariant(A, fd))
        throw error("maxspec_to_psi: result is not equivariant");
    return psi;
}

MaxSpecPoint psi_to_maxspec(const ring::WeightFunction& psi, const SymAlgebraDescriptor& d,
                            const lie::FoldedDatum& fd, const GammaRing& A) {
    if (d.zero_algebra) throw error("psi_to_maxspec: zero algebra has no points");
    if (!fd.trivial() && !psi.is_equivariant(A, fd))
        throw error("psi_to_maxspec: psi is not equivariant");
    MaxSpecPoint mm;
    mm.points.resize(d.factors.size());
    for (size_t k = 0; k < d.factors.size(); ++k) {
        const auto& f = d.factors[k];
        int o = A.gamma_order() / f.isotropy;  // orbit size of the node
        std::vector<Scalar> seen;
        for (const auto& [x, w] : psi.support) {
            long mult = w[f.node];
            if (mult == 0) continue;
            // Gamma_j-orbit representative of x
            Scalar best = x, cur = x;
            for (int s = 1; s < f.isotropy; ++s) {
                cur = A.point_act(o, cur);
                if (Scalar::compare(cur, best) < 0) best = cur;
            }
            if (std::find(seen.begin(), seen.end(), best) != seen.end()) continue;
            seen.push_back(best);
            for (long i = 0; i < mult; ++i) mm.points[k].push_back(best);
        }
        std::sort(mm.points[k].begin(), mm.points[k].end(),
                  [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
        if (long(mm.points[k].size()) != f.r)
            throw error("psi_to_maxspec: wt_Gamma(psi) does not match lambda");
    }
    return mm;
}

Scalar tau_eval(const MaxSpecPoint& mm, const SymAlgebraDescriptor& d,
                const lie::FoldedDatum& fd, const GammaRing& A, int factor,
                const GammaRing::Elem& a) {
    const auto& f = d.factors[size_t(factor)];
    if (!A.is_invariant_under(f.isotropy, a))
        throw error("tau_eval: element is not Gamma_j-invariant");
    Scalar val;
    for (const Scalar& p : mm.points[size_t(factor)]) val += GammaRing::eval(a, p);
    // evaluation compatibility: hev_{psi_mm} = ev_mm o tau
    ring::WeightFunction psi = maxspec_to_psi(mm, d, fd, A);
    Scalar h = weylmod::hev_on_bar(fd, A, psi, f.node, a);
    if (!(h == val)) throw error("tau_eval: mismatch against hev");
    return val;
}

void MultiPoly::add_term(const std::vector<long>& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end())
        terms[e] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool MultiPoly::is_symmetric() const {
    for (const auto& [e, c] : terms) {
        std::vector<long> s = e;
        std::sort(s.begin(), s.end(), std::greater<long>());
        // compare against the sorted representative's coefficient
        auto it = terms.find(s);
        if (it == terms.end() || !(it->second == c)) return false;
    }
    return true;
}

MultiPoly MultiPoly::mul(const MultiPoly& o) const {
    MultiPoly out = MultiPoly::zero(nvars);
    for (const auto& [e1, c1] : terms)
        for (const auto& [e2, c2] : o.terms) {
            std::vector<long> e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

MultiPoly elementary_symmetric(int nvars, int l) {
    MultiPoly out = MultiPoly::zero(nvars);
    std::vector<int> idx(l);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == l) {
            std::vector<long> e(nvars, 0);
            for (int i : idx) e[i] = 1;
            out.add_term(e, Scalar(1));
            return;
        }
        for (int i = start; i < nvars; ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    if (l == 0) {
        out.add_term(std::vector<long>(nvars, 0), Scalar(1));
        return out;
    }
    rec(0, 0);
    return out;
}

ElementaryPoly sym_laurent_rewrite(const MultiPoly& f) {
    if (!f.is_symmetric()) throw error("sym_laurent_rewrite: polynomial is not symmetric");
    int m = f.nvars;
    long shift = 0;
    for (const auto& [e, c] : f.terms)
        for (long x : e) shift = std::max(shift, -x);
    // multiply by e_m^shift to clear negative exponents
    MultiPoly g = MultiPoly::zero(m);
    for (const auto& [e, c] : f.terms) {
        std::vector<long> e2 = e;
        for (auto& x : e2) x += shift;
        g.add_term(e2, c);
    }
    std::vector<MultiPoly> elem;
    for (int l = 0; l <= m; ++l) elem.push_back(elementary_symmetric(m, l));

    ElementaryPoly out;
    out.nvars = m;
    while (!g.terms.empty()) {
        // lex-greatest monomial of a symmetric polynomial is sorted descending
        auto it = std::max_element(g.terms.begin(), g.terms.end(),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<long> a = it->first;
        Scalar c = it->second;
        for (size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] < a[i + 1])
                throw error("sym_laurent_rewrite: leading monomial not sorted (asymmetry)");
        std::vector<long> expo(m, 0);
        for (int i = 0; i + 1 < m; ++i) expo[i] = a[i] - a[i + 1];
        if (m >= 1) expo[m - 1] = a[m - 1];
        // subtract c * prod e_i^{expo_i}
        MultiPoly prod = MultiPoly::zero(m);
        prod.add_term(std::vector<long>(m, 0), c);
        for (int i = 0; i < m; ++i)
            for (long k = 0; k < expo[i]; ++k) prod = prod.mul(elem[i + 1]);
        for (const auto& [e, cc] : prod.terms) g.add_term(e, -cc);
        // record with the e_m shift undone
        std::vector<long> key = expo;
        key[m - 1] -= shift;
        auto jt = out.terms.find(key);
        if (jt == out.terms.end())
            out.terms[key] = c;
        else {
            jt->second += c;
            if (jt->second.is_zero()) out.terms.erase(jt);
        }
    }
    return out;
}

MultiPoly expand_elementary(const ElementaryPoly& p) {
    int m = p.nvars;
    std::vector<MultiPoly> elem;
    for (int l = 0; l <= m; ++l) elem.push_back(elementary_symmetric(m, l));
    MultiPoly out = MultiPoly::zero(m);
    for (const auto& [expo, c] : p.terms) {
        MultiPoly prod = MultiPoly::zero(m);
        prod.add_term(std::vector<long>(m, 0), c);
        for (int i = 0; i < m; ++i) {
            long k = expo[i];
            if (i == m - 1 && k < 0) {
                // e_m^{-1} = each variable to the -1
                MultiPoly inv = MultiPoly::zero(m);
                inv.add_term(std::vector<long>(m, -1), Scalar(1));
                for (long t = 0; t < -k; ++t) prod = prod.mul(inv);
            } else {
                for (long t = 0; t < k; ++t) prod = prod.mul(elem[i + 1]);
            }
        }
        for (const auto& [e, cc] : prod.terms) out.add_term(e, cc);
    }
    return out;
}

CoinvariantPresentation coinvariants_laurent(long n, long m) {
    CoinvariantPresentation out;
    out.n = n;
    out.m = m;
    if (n % m != 0) {
        out.zero_algebra = true;
        return out;
    }
    for (long k = m; k <= n; k += m) out.generator_degrees.push_back(k);
    return out;
}

namespace {

std::vector<std::vector<long>> partitions_of(long d, long max_parts) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rem, long maxpart) {
        if (rem == 0) {
            if (long(cur.size()) <= max_parts) out.push_back(cur);
            return;
        }
        if (long(cur.size()) >= max_parts) return;
        for (long p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    if (d == 0) out = {{}};
    return out;
}

MultiPoly monomial_symmetric(int nvars, const std::vector<long>& part) {
    // sum of all distinct permutations of the padded exponent vector
    std::vector<long> e(nvars, 0);
    for (size_t i = 0; i < part.size(); ++i) e[i] = part[i];
    std::sort(e.begin(), e.end());
    MultiPoly out = MultiPoly::zero(nvars);
    do {
        out.add_term(e, Scalar(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

} // namespace

std::vector<long> coinvariant_graded_dims_poly(long n, long m, long maxdeg) {
    std::vector<long> dims(size_t(maxdeg + 1), 0);
    for (long d = 0; d <= maxdeg; ++d) {
        auto parts = partitions_of(d, n);
        if (d % m != 0) {
            dims[size_t(d)] = 0;  // the whole degree sits in a nonzero isotypic
            continue;
        }
        // ideal_d = sum over 0 < d1 <= d, d1 not divisible by m, of S_{d1} S_{d-d1}
        std::map<std::vector<long>, int> col_of;
        for (const auto& p : parts) {
            std::vector<long> key = p;
            key.resize(size_t(n), 0);
            std::sort(key.begin(), key.end(), std::greater<long>());
            col_of[key] = int(col_of.size());
        }
        std::vector<linalg::Vec> rows;
        for (long d1 = 1; d1 <= d; ++d1) {
            if (d1 % m == 0) continue;
            long d2 = d - d1;
            if (d2 % m == 0 && d2 != 0) {
                // products with an invariant factor are covered by d2
                // decompositions too; keep them anyway for the span
            }
            auto p1 = partitions_of(d1, n);
            auto p2 = partitions_of(d2, n);
            for (const auto& a : p1) {
                MultiPoly ma = monomial_symmetric(int(n), a);
                for (const auto& b : p2) {
                    MultiPoly mb = monomial_symmetric(int(n), b);
                    MultiPoly prod = ma.mul(mb);
                    linalg::Vec row(col_of.size());
                    // collect coefficients on sorted-descending representatives
                    for (const auto& [e, c] : prod.terms) {
                        std::vector<long> key = e;
                        std::sort(key.begin(), key.end(), std::greater<long>());
                        if (key == e) row[col_of.at(key)] = c;
                    }
                    if (!linalg::is_zero(row)) rows.push_back(std::move(row));
                }
            }
        }
        int rank = rows.empty() ? 0 : linalg::rank(linalg::Matrix::from_rows(rows, int(col_of.size())));
        dims[size_t(d)] = long(col_of.size()) - rank;
    }
    return dims;
}

std::vector<long> sym_power_fixed_graded_dims(long r, long m, long maxdeg) {
    std::vector<long> dims(size_t(maxdeg + 1), 0);
    for (long d = 0; d <= maxdeg; ++d) {
        if (d % m != 0) continue;
        dims[size_t(d)] = long(partitions_of(d / m, r).size());
    }
    return dims;
}

} // namespace weylem::weylalg
