#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace weylem {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

namespace field {

/// Minimal polynomial of the base-field extension for the current run.
/// The shipped configurations are Q itself (p = x), Q(sqrt2) (p = x^2 - 2)
/// and Q(eta) with eta a primitive cube root of unity (p = x^2 + x + 1).
enum class MinPoly { X, X2Minus2, X2PlusXPlus1 };

void set_minpoly(MinPoly p);
MinPoly minpoly();
int extension_degree();
std::string minpoly_name();

} // namespace field

/// Element of Q[x]/(p(x)) for the globally configured p, stored as
/// c0 + c1*x with exact rational coefficients.  For p = x the element is
/// just c0 and any nonzero c1 is rejected.
class Scalar {
public:
    Scalar() : c0_(0), c1_(0) {}
    Scalar(long n) : c0_(n), c1_(0) {}
    Scalar(long num, long den) : c0_(num, den), c1_(0) { c0_.canonicalize(); }
    explicit Scalar(const mpq_class& q) : c0_(q), c1_(0) {}
    Scalar(mpq_class q0, mpq_class q1);

    static Scalar generator();  // the class of x (sqrt2 or eta)
    static Scalar sqrt2();
    static Scalar eta();        // primitive cube root of unity

    const mpq_class& c0() const { return c0_; }
    const mpq_class& c1() const { return c1_; }

    bool is_zero() const { return sgn(c0_) == 0 && sgn(c1_) == 0; }
    bool is_rational() const { return sgn(c1_) == 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    /// Image under the nontrivial field automorphism (conjugation):
    /// sqrt2 -> -sqrt2, eta -> eta^2.  Identity on Q.
    Scalar conjugate() const;

    /// Rationals render as "p/q" (or "p"); extension elements as "[c0, c1]".
    std::string str() const;

    /// Total order used for canonical multiset encodings; it is an
    /// arbitrary but deterministic order, not compatible with arithmetic.
    static int compare(const Scalar& a, const Scalar& b);

private:
    mpq_class c0_, c1_;
};

inline bool operator<(const Scalar& a, const Scalar& b) { return Scalar::compare(a, b) < 0; }

std::string rational_str(const mpq_class& q);

} // namespace weylem
