#include "weylem/linalg.hpp"

#include <doctest.h>
#include <random>

using namespace weylem;
using namespace weylem::linalg;

namespace {
Matrix random_matrix(int n, int m, unsigned seed) {
    std::mt19937_64 rng(seed);
    Matrix a(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            long num = long(rng() % 21) - 10;
            long den = long(rng() % 5) + 1;
            a.at(i, j) = Scalar(num, den);
        }
    return a;
}
} // namespace

TEST_CASE("row reduction: serial and OpenMP kernels agree") {
    field::set_minpoly(field::MinPoly::X);
    for (unsigned seed : {1u, 2u, 3u}) {
        Matrix a = random_matrix(40, 55, seed);
        Matrix b = a;
        auto ps = row_reduce(a, Mode::Serial);
        auto pp = row_reduce(b, Mode::Parallel);
        CHECK(ps == pp);
        CHECK(a == b);
    }
}

TEST_CASE("rank of structured matrices") {
    field::set_minpoly(field::MinPoly::X);
    Matrix a(3, 3);
    // rank-2: third row is the sum of the first two
    long vals[2][3] = {{1, 2, 3}, {4, 5, 6}};
    for (int j = 0; j < 3; ++j) {
        a.at(0, j) = Scalar(vals[0][j]);
        a.at(1, j) = Scalar(vals[1][j]);
        a.at(2, j) = Scalar(vals[0][j] + vals[1][j]);
    }
    CHECK(rank(a) == 2);
    CHECK(rank(Matrix::identity(7)) == 7);
}

TEST_CASE("subspace reduce/add/coordinates") {
    field::set_minpoly(field::MinPoly::X);
    Subspace s(4);
    CHECK(s.add(Vec{Scalar(1), Scalar(2), Scalar(0), Scalar(0)}));
    CHECK(s.add(Vec{Scalar(0), Scalar(1), Scalar(1), Scalar(0)}));
    CHECK(!s.add(Vec{Scalar(1), Scalar(3), Scalar(1), Scalar(0)}));  // dependent
    CHECK(s.dim() == 2);
    Vec v{Scalar(2), Scalar(5), Scalar(1), Scalar(0)};
    CHECK(s.contains(v));
    Vec c = s.coordinates(v);
    Vec rebuilt(4);
    for (size_t k = 0; k < c.size(); ++k) axpy(rebuilt, c[k], s.rows()[k]);
    CHECK(rebuilt == v);
    CHECK(!s.contains(Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(1)}));
    CHECK_THROWS_AS(s.coordinates(Vec{Scalar(0), Scalar(0), Scalar(0), Scalar(1)}), error);
}

TEST_CASE("matrix multiply serial vs parallel") {
    field::set_minpoly(field::MinPoly::X);
    Matrix a = random_matrix(23, 17, 9);
    Matrix b = random_matrix(17, 31, 10);
    CHECK(a.mul(b, Mode::Serial) == a.mul(b, Mode::Parallel));
}

TEST_CASE("parallel_all early exit matches serial") {
    auto pred = [](int64_t i) { return i != 37; };
    CHECK(!parallel_all(100, Mode::Serial, pred));
    CHECK(!parallel_all(100, Mode::Parallel, pred));
    CHECK(parallel_all(37, Mode::Parallel, pred));
}
