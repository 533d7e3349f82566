#include "weylem/scalar.hpp"

#include <doctest.h>

using namespace weylem;

TEST_CASE("rational arithmetic is exact") {
    field::set_minpoly(field::MinPoly::X);
    Scalar a(1, 3), b(2, 5);
    CHECK(a * b + a == Scalar(7, 15));
    CHECK((a / b) == Scalar(5, 6));
    CHECK((a - a).is_zero());
    CHECK(Scalar(4, 6) == Scalar(2, 3));
    CHECK(a.inverse() == Scalar(3));
    CHECK_THROWS_AS(Scalar().inverse(), error);
    CHECK(a.str() == "1/3");
    CHECK(Scalar(-7).str() == "-7");
}

TEST_CASE("plain-Q configuration rejects extension coefficients") {
    field::set_minpoly(field::MinPoly::X);
    CHECK_THROWS_AS(Scalar(mpq_class(0), mpq_class(1)), error);
    CHECK_THROWS_AS(Scalar::generator(), error);
}

TEST_CASE("Q(sqrt2) arithmetic") {
    field::set_minpoly(field::MinPoly::X2Minus2);
    Scalar r = Scalar::sqrt2();
    CHECK(r * r == Scalar(2));
    Scalar x = Scalar(1) + r;  // 1 + sqrt2
    CHECK(x * x == Scalar(3) + r * Scalar(2));
    CHECK(x * x.conjugate() == Scalar(-1));  // norm of 1+sqrt2
    CHECK(x.inverse() * x == Scalar(1));
    CHECK(x.str() == "[1, 1]");
    CHECK((x - r).str() == "1");
    CHECK_THROWS_AS(Scalar::eta(), error);
}

TEST_CASE("Q(eta) arithmetic with a primitive cube root of unity") {
    field::set_minpoly(field::MinPoly::X2PlusXPlus1);
    Scalar eta = Scalar::eta();
    CHECK(eta * eta * eta == Scalar(1));
    CHECK(eta * eta + eta + Scalar(1) == Scalar(0));
    CHECK(eta.conjugate() == eta * eta);
    CHECK(eta.inverse() == eta * eta);
    CHECK_THROWS_AS(Scalar::sqrt2(), error);
}

TEST_CASE("deterministic scalar order") {
    field::set_minpoly(field::MinPoly::X2Minus2);
    Scalar a(1), b(2), r = Scalar::sqrt2();
    CHECK(Scalar::compare(a, b) < 0);
    CHECK(Scalar::compare(b, a) > 0);
    CHECK(Scalar::compare(a, a) == 0);
    CHECK(Scalar::compare(Scalar(1), Scalar(1) + r) < 0);
}
