#include "weylem/scalar.hpp"

namespace weylem {

namespace field {

namespace {
MinPoly g_minpoly = MinPoly::X;
}

void set_minpoly(MinPoly p) { g_minpoly = p; }
MinPoly minpoly() { return g_minpoly; }
int extension_degree() { return g_minpoly == MinPoly::X ? 1 : 2; }

std::string minpoly_name() {
    switch (g_minpoly) {
        case MinPoly::X: return "x";
        case MinPoly::X2Minus2: return "x^2-2";
        case MinPoly::X2PlusXPlus1: return "x^2+x+1";
    }
    return "?";
}

// x^2 = s*x + r in the configured quotient.
static void reduction(mpq_class& s, mpq_class& r) {
    switch (g_minpoly) {
        case MinPoly::X: s = 0; r = 0; break;
        case MinPoly::X2Minus2: s = 0; r = 2; break;
        case MinPoly::X2PlusXPlus1: s = -1; r = -1; break;
    }
}

} // namespace field

Scalar::Scalar(mpq_class q0, mpq_class q1) : c0_(std::move(q0)), c1_(std::move(q1)) {
    if (sgn(c1_) != 0 && field::extension_degree() == 1)
        throw error("Scalar: extension coefficient in a plain-Q configuration");
}

Scalar Scalar::generator() {
    if (field::extension_degree() == 1)
        throw error("Scalar::generator: base field is Q; no extension generator");
    return Scalar(mpq_class(0), mpq_class(1));
}

Scalar Scalar::sqrt2() {
    if (field::minpoly() != field::MinPoly::X2Minus2)
        throw error("Scalar::sqrt2: field is not Q(sqrt2)");
    return generator();
}

Scalar Scalar::eta() {
    if (field::minpoly() != field::MinPoly::X2PlusXPlus1)
        throw error("Scalar::eta: field is not Q(eta)");
    return generator();
}

Scalar Scalar::operator-() const {
    Scalar z;
    z.c0_ = -c0_;
    z.c1_ = -c1_;
    return z;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // (a + b x)(c + d x) = ac + bd x^2 + (ad + bc) x,  x^2 = s x + r
    if (sgn(c1_) == 0 && sgn(o.c1_) == 0) {
        c0_ *= o.c0_;
        return *this;
    }
    mpq_class s, r;
    field::reduction(s, r);
    mpq_class bd = c1_ * o.c1_;
    mpq_class nc0 = c0_ * o.c0_ + bd * r;
    mpq_class nc1 = c0_ * o.c1_ + c1_ * o.c0_ + bd * s;
    c0_ = nc0;
    c1_ = nc1;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("Scalar: division by zero");
    if (sgn(c1_) == 0) {
        Scalar z;
        z.c0_ = 1 / c0_;
        return z;
    }
    // Solve (a + b x)(c + d x) = 1:  [a  rb][c]   [1]
    //                                [b a+sb][d] = [0]
    mpq_class s, r;
    field::reduction(s, r);
    mpq_class det = c0_ * (c0_ + s * c1_) - r * c1_ * c1_;
    if (sgn(det) == 0) throw error("Scalar: non-invertible element (reducible minimal polynomial?)");
    Scalar z;
    z.c0_ = (c0_ + s * c1_) / det;
    z.c1_ = -c1_ / det;
    return z;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::conjugate() const {
    if (sgn(c1_) == 0) return *this;
    // Conjugation maps x to the other root of p: for x^2 = s x + r the
    // roots sum to s, so x |-> s - x.
    mpq_class s, r;
    field::reduction(s, r);
    Scalar z;
    z.c0_ = c0_ + s * c1_;
    z.c1_ = -c1_;
    return z;
}

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
    if (sgn(c1_) == 0) return rational_str(c0_);
    return "[" + rational_str(c0_) + ", " + rational_str(c1_) + "]";
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    int c = cmp(a.c0_, b.c0_);
    if (c != 0) return c;
    return cmp(a.c1_, b.c1_);
}

} // namespace weylem
