#include "weylem/gammaring.hpp"

#include <algorithm>

namespace weylem::ring {

GammaRing::GammaRing(Kind kind, int gamma_order) : kind_(kind), m_(gamma_order) {
    switch (m_) {
        case 1: zeta_ = Scalar(1); break;
        case 2: zeta_ = Scalar(-1); break;
        case 3:
            if (field::minpoly() != field::MinPoly::X2PlusXPlus1)
                throw error("GammaRing: order-3 action needs the Q(eta) scalar configuration");
            zeta_ = Scalar::eta();
            break;
        default: throw error("GammaRing: gamma order must be 1, 2 or 3");
    }
}

GammaRing::Elem GammaRing::monomial(long k, Scalar c) {
    Elem e;
    if (!c.is_zero()) e[k] = c;
    return e;
}

GammaRing::Elem GammaRing::add(const Elem& a, const Elem& b) {
    Elem out = a;
    for (const auto& [k, c] : b) {
        auto it = out.find(k);
        if (it == out.end())
            out[k] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

GammaRing::Elem GammaRing::mul(const Elem& a, const Elem& b) {
    Elem out;
    for (const auto& [k1, c1] : a)
        for (const auto& [k2, c2] : b) {
            Scalar c = c1 * c2;
            if (c.is_zero()) continue;
            auto it = out.find(k1 + k2);
            if (it == out.end())
                out[k1 + k2] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

GammaRing::Elem GammaRing::pow(const Elem& a, long e) const {
    Elem out = monomial(0);
    for (long i = 0; i < e; ++i) out = mul(out, a);
    return out;
}

bool GammaRing::valid_element(const Elem& a) const {
    if (kind_ == Kind::Laurent) return true;
    return a.empty() || a.begin()->first >= 0;
}

GammaRing::Elem GammaRing::act_sigma(const Elem& a) const {
    Elem out;
    for (const auto& [k, c] : a) {
        Scalar z(1);
        long e = ((k % m_) + m_) % m_;
        for (long i = 0; i < e; ++i) z *= zeta_;
        out[k] = c * z;
    }
    return out;
}

GammaRing::Elem GammaRing::act(int power, const Elem& a) const {
    Elem out = a;
    int p = ((power % m_) + m_) % m_;
    for (int i = 0; i < p; ++i) out = act_sigma(out);
    return out;
}

bool GammaRing::is_invariant_under(int isotropy_order, const Elem& a) const {
    if (isotropy_order <= 1) return true;
    int generator_power = m_ / isotropy_order;
    Elem image = act(generator_power, a);
    return add(image, mul(monomial(0, Scalar(-1)), a)).empty();
}

Scalar GammaRing::point_sigma(const Scalar& a) const { return zeta_.inverse() * a; }

Scalar GammaRing::point_act(int power, const Scalar& a) const {
    Scalar out = a;
    int p = ((power % m_) + m_) % m_;
    for (int i = 0; i < p; ++i) out = point_sigma(out);
    return out;
}

std::vector<Scalar> GammaRing::orbit(const Scalar& a) const {
    if (kind_ == Kind::Laurent && a.is_zero())
        throw error("GammaRing::orbit: 0 is not a rational point of the Laurent ring");
    std::vector<Scalar> out{a};
    Scalar cur = a;
    for (int i = 1; i < m_; ++i) {
        cur = point_sigma(cur);
        if (cur == a)
            throw error("GammaRing::orbit: fixed point, the action is not free here");
        out.push_back(cur);
    }
    if (m_ > 1) {
        // freeness also requires pairwise distinct intermediate points
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j)
                if (out[i] == out[j])
                    throw error("GammaRing::orbit: fixed point, the action is not free here");
    }
    return out;
}

Scalar GammaRing::orbit_representative(const Scalar& a) const {
    auto orb = orbit(a);
    return *std::min_element(orb.begin(), orb.end(),
                             [](const Scalar& x, const Scalar& y) { return Scalar::compare(x, y) < 0; });
}

GammaRing::Elem GammaRing::xi_component(const Elem& a, int xi) const {
    Elem out;
    for (const auto& [k, c] : a)
        if (xi_of_exponent(k) == xi) out[k] = c;
    return out;
}

std::vector<GammaRing::Elem> GammaRing::fixed_ring_generators() const {
    std::vector<Elem> out;
    out.push_back(monomial(m_));
    if (kind_ == Kind::Laurent) out.push_back(monomial(-m_));
    return out;
}

Scalar GammaRing::eval(const Elem& a, const Scalar& point) {
    Scalar out;
    for (const auto& [k, c] : a) {
        Scalar p(1);
        if (k >= 0)
            for (long i = 0; i < k; ++i) p *= point;
        else {
            Scalar inv = point.inverse();
            for (long i = 0; i < -k; ++i) p *= inv;
        }
        out += c * p;
    }
    return out;
}

WeightFunction WeightFunction::make(std::vector<std::pair<Scalar, lie::Weight>> entries) {
    WeightFunction psi;
    for (auto& [p, w] : entries) psi.insert_add(p, w);
    return psi;
}

void WeightFunction::insert_add(const Scalar& p, const lie::Weight& w) {
    if (std::all_of(w.begin(), w.end(), [](long c) { return c == 0; })) return;
    for (auto& [q, v] : support) {
        if (q == p) {
            for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
            if (std::all_of(v.begin(), v.end(), [](long c) { return c == 0; })) {
                support.erase(std::remove_if(support.begin(), support.end(),
                                             [&](const auto& e) { return e.first == p; }),
                              support.end());
            }
            return;
        }
    }
    auto pos = std::lower_bound(support.begin(), support.end(), p,
                                [](const auto& e, const Scalar& x) {
                                    return Scalar::compare(e.first, x) < 0;
                                });
    support.insert(pos, {p, w});
}

lie::Weight WeightFunction::value(const Scalar& p) const {
    for (const auto& [q, w] : support)
        if (q == p) return w;
    if (support.empty()) return {};
    return lie::Weight(support.front().second.size(), 0);
}

bool WeightFunction::is_equivariant(const GammaRing& A, const lie::FoldedDatum& fd) const {
    for (const auto& [p, w] : support) {
        Scalar q = A.point_sigma(p);
        lie::Weight expect = fd.sigma_on_weight(w);
        if (value(q) != expect) return false;
    }
    return true;
}

WeightFunction WeightFunction::equivariant_completion(const GammaRing& A,
                                                      const lie::FoldedDatum& fd) const {
    WeightFunction out;
    for (const auto& [p, w] : support) {
        Scalar q = p;
        lie::Weight v = w;
        for (int k = 0; k < A.gamma_order(); ++k) {
            lie::Weight existing = out.value(q);
            bool blank = std::all_of(existing.begin(), existing.end(), [](long c) { return c == 0; });
            if (!blank && existing != v)
                throw error("equivariant_completion: conflicting values on an orbit");
            if (blank) out.insert_add(q, v);
            q = A.point_sigma(q);
            v = fd.sigma_on_weight(v);
        }
    }
    if (!out.is_equivariant(A, fd)) throw error("equivariant_completion: completion failed");
    return out;
}

std::vector<Scalar> WeightFunction::orbit_section(const GammaRing& A) const {
    std::vector<Scalar> reps;
    for (const auto& [p, w] : support) {
        Scalar r = A.orbit_representative(p);
        if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
    }
    std::sort(reps.begin(), reps.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });
    return reps;
}

WeightFunction WeightFunction::restrict_to(const std::vector<Scalar>& points) const {
    WeightFunction out;
    for (const auto& [p, w] : support)
        if (std::find(points.begin(), points.end(), p) != points.end()) out.insert_add(p, w);
    return out;
}

lie::Weight WeightFunction::wt(int rank) const {
    lie::Weight out(rank, 0);
    for (const auto& [p, w] : support)
        for (int i = 0; i < rank; ++i) out[i] += w[i];
    return out;
}

lie::Weight WeightFunction::wt_gamma(const GammaRing& A, const lie::FoldedDatum& fd) const {
    auto section = orbit_section(A);
    WeightFunction psix = restrict_to(section);
    return fd.restrict_weight(psix.wt(fd.L->rank()));
}

static std::vector<Scalar> poly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Scalar> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

RingQuotient::RingQuotient(const GammaRing& A, std::vector<Scalar> points, int N)
    : ring_(&A), points_(std::move(points)), N_(N) {
    if (N_ < 1) throw error("RingQuotient: N must be >= 1");
    for (size_t i = 0; i < points_.size(); ++i) {
        if (A.kind() == GammaRing::Kind::Laurent && points_[i].is_zero())
            throw error("RingQuotient: 0 is not a point of the Laurent ring");
        for (size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j]) throw error("RingQuotient: repeated support point");
    }
    std::sort(points_.begin(), points_.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; });

    modulus_ = {Scalar(1)};
    for (const auto& p : points_)
        for (int k = 0; k < N_; ++k) modulus_ = poly_mul(modulus_, {-p, Scalar(1)});
    d_ = int(modulus_.size()) - 1;

    // invariance: the support is a union of full orbits
    invariant_ = true;
    for (const auto& p : points_) {
        Scalar q = A.point_sigma(p);
        if (std::find(points_.begin(), points_.end(), q) == points_.end()) invariant_ = false;
    }

    // t^k mod g for k = 0..2d
    tpow_.clear();
    for (int k = 0; k <= 2 * d_ + 1; ++k) {
        if (k < d_) {
            linalg::Vec v(d_);
            v[k] = Scalar(1);
            tpow_.push_back(std::move(v));
        } else if (d_ == 0) {
            tpow_.push_back(linalg::Vec{});
        } else {
            // t * previous, reduced
            linalg::Vec prev = tpow_.back();
            linalg::Vec v(d_);
            for (int i = 0; i + 1 < d_; ++i) v[i + 1] = prev[i];
            const Scalar& top = prev[d_ - 1];
            if (!top.is_zero())
                for (int i = 0; i < d_; ++i) v[i] -= top * modulus_[i];
            tpow_.push_back(std::move(v));
        }
    }

    if (A.kind() == GammaRing::Kind::Laurent && d_ > 0) {
        // g(0) != 0 since no point is 0; t^-1 = -(g_1 + g_2 t + ... + g_d t^{d-1}) / g_0
        Scalar inv0 = modulus_[0].inverse();
        tinv_.assign(d_, Scalar());
        for (int i = 0; i < d_; ++i) tinv_[i] = -(modulus_[i + 1] * inv0);
    }
}

linalg::Vec RingQuotient::monomial_reduced(long k) const {
    if (d_ == 0) return {};
    if (k >= 0) {
        if (k < long(tpow_.size())) return tpow_[k];
        linalg::Vec v = tpow_.back();
        for (long i = long(tpow_.size()) - 1; i < k; ++i) v = mul(v, tpow_[1]);
        return v;
    }
    if (tinv_.empty()) throw error("RingQuotient: negative exponent in a k[t] quotient");
    linalg::Vec v = one();
    for (long i = 0; i < -k; ++i) v = mul(v, tinv_);
    return v;
}

linalg::Vec RingQuotient::reduce(const GammaRing::Elem& a) const {
    linalg::Vec out(d_);
    for (const auto& [k, c] : a) {
        linalg::Vec m = monomial_reduced(k);
        linalg::axpy(out, c, m);
    }
    return out;
}

linalg::Vec RingQuotient::one() const {
    linalg::Vec v(d_);
    if (d_ > 0) v[0] = Scalar(1);
    return v;
}

linalg::Vec RingQuotient::mul(const linalg::Vec& a, const linalg::Vec& b) const {
    linalg::Vec out(d_);
    for (int i = 0; i < d_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < d_; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            linalg::axpy(out, c, tpow_[i + j]);
        }
    }
    return out;
}

linalg::Vec RingQuotient::act_sigma(const linalg::Vec& a) const {
    if (!invariant_) throw error("RingQuotient: sigma-action needs a Gamma-invariant ideal");
    linalg::Vec out(d_);
    Scalar z(1);
    for (int k = 0; k < d_; ++k) {
        out[k] = a[k] * z;
        z *= ring_->zeta();
    }
    return out;
}

Scalar RingQuotient::eval(const linalg::Vec& a, const Scalar& point) const {
    Scalar out, p(1);
    for (int k = 0; k < d_; ++k) {
        out += a[k] * p;
        p *= point;
    }
    return out;
}

std::vector<linalg::Vec> RingQuotient::power_ideal_basis(int k) const {
    // J^k spanned by g1^k * t^j with g1 the N=1 modulus
    GammaRing::Elem g1 = GammaRing::monomial(0);
    for (const auto& p : points_)
        g1 = GammaRing::mul(g1, GammaRing::add(GammaRing::monomial(1), GammaRing::monomial(0, -p)));
    GammaRing::Elem gk = GammaRing::monomial(0);
    for (int i = 0; i < k; ++i) gk = GammaRing::mul(gk, g1);
    linalg::Subspace sp(d_);
    std::vector<linalg::Vec> out;
    for (int j = 0; j < d_; ++j) {
        linalg::Vec v = reduce(GammaRing::mul(gk, GammaRing::monomial(j)));
        if (sp.add(v)) out.push_back(std::move(v));
    }
    return out;
}

linalg::Vec RingQuotient::project_to(const RingQuotient& target, const linalg::Vec& a) const {
    GammaRing::Elem e;
    for (int k = 0; k < d_; ++k)
        if (!a[k].is_zero()) e[k] = a[k];
    return target.reduce(e);
}

RingQuotient product_ideal(const GammaRing& A, const WeightFunction& psi, int N) {
    std::vector<Scalar> pts;
    for (const auto& [p, w] : psi.support) pts.push_back(p);
    return RingQuotient(A, std::move(pts), N);
}

RingQuotient product_ideal_at(const GammaRing& A, const std::vector<Scalar>& points, int N) {
    return RingQuotient(A, points, N);
}

} // namespace weylem::ring
