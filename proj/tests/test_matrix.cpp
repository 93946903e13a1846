#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matrix.hpp"

using namespace homjj;

namespace {

const FieldTag Q = FieldTag::rationals();

Matrix mat(const std::vector<std::vector<long>>& rows, FieldTag tag = Q) {
    std::vector<Vec> data;
    for (const auto& r : rows) {
        Vec v;
        for (long x : r) v.push_back(Scalar::of_int(x, tag));
        data.push_back(v);
    }
    return Matrix::from_rows(data, tag);
}

}  // namespace

TEST_CASE("identity multiplication") {
    Matrix m = mat({{1, 2}, {3, 4}});
    CHECK(Matrix::identity(2, Q) * m == m);
    CHECK(m * Matrix::identity(2, Q) == m);
}

TEST_CASE("hand computed product") {
    Matrix a = mat({{1, 1}, {0, 1}});
    Matrix b = mat({{1, 0}, {1, 1}});
    CHECK(a * b == mat({{2, 1}, {1, 1}}));
}

TEST_CASE("shape mismatch is an error") {
    Matrix a(2, 3, Q);
    Matrix b(2, 2, Q);
    CHECK_THROWS_AS(a * b, Error);
    CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("domain mismatch is an error") {
    Matrix a(2, 2, Q);
    Matrix b(2, 2, FieldTag::prime_field(5));
    CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("inverse of identity and diagonal") {
    CHECK(Matrix::identity(3, Q).inverse() == Matrix::identity(3, Q));
    Matrix d = mat({{2, 0}, {0, 1}});
    Matrix inv = d.inverse();
    CHECK(inv.at(0, 0).str() == "1/2");
    CHECK(inv.at(1, 1).str() == "1");
    CHECK(inv.at(0, 1).is_zero());
}

TEST_CASE("singular matrix reports rank") {
    Matrix s = mat({{1, 1}, {1, 1}});
    try {
        s.inverse();
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.rank() == 1);
        CHECK(std::string(e.what()).find("rank 1") != std::string::npos);
    }
    CHECK_FALSE(s.is_invertible());
}

TEST_CASE("random invertible matrices: M * inv(M) = I exactly") {
    std::mt19937_64 rng(11);
    const long pool[] = {-2, -1, 0, 1, 2, 3};
    for (FieldTag tag : {Q, FieldTag::prime_field(5), FieldTag::prime_field(7)}) {
        int found = 0;
        while (found < 25) {
            std::size_t n = 1 + rng() % 6;
            Matrix m(n, n, tag);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    m.at(i, j) = Scalar::of_int(pool[rng() % 6], tag);
                }
            }
            if (!m.is_invertible()) continue;
            ++found;
            CHECK(m * m.inverse() == Matrix::identity(n, tag));
            CHECK(m.inverse() * m == Matrix::identity(n, tag));
        }
    }
}

TEST_CASE("rational inverse with fractional entries") {
    Matrix m(2, 2, Q);
    m.at(0, 0) = Scalar::parse("1/2", Q);
    m.at(0, 1) = Scalar::parse("1/3", Q);
    m.at(1, 0) = Scalar::parse("-2/5", Q);
    m.at(1, 1) = Scalar::parse("7/4", Q);
    CHECK(m * m.inverse() == Matrix::identity(2, Q));
}

TEST_CASE("rank, pivots, null space, solve") {
    Matrix m = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(m.rank() == 2);
    auto pivots = m.pivot_columns();
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 1);

    auto kernel = m.null_space();
    REQUIRE(kernel.size() == 1);
    CHECK(vec_is_zero(m * kernel[0]));
    CHECK_FALSE(vec_is_zero(kernel[0]));

    Vec b = m * Vec{Scalar::of_int(1, Q), Scalar::of_int(-2, Q), Scalar::of_int(5, Q)};
    Vec x = m.solve(b);
    CHECK(m * x == b);

    Vec bad{Scalar::of_int(1, Q), Scalar::of_int(1, Q), Scalar::of_int(0, Q)};
    Matrix incons = mat({{1, 0}, {1, 0}, {0, 0}});
    Vec rhs{Scalar::of_int(1, Q), Scalar::of_int(2, Q), Scalar::of_int(0, Q)};
    CHECK_THROWS_AS(incons.solve(rhs), Error);
    (void)bad;
}

TEST_CASE("transpose and power") {
    Matrix m = mat({{0, 1}, {0, 0}});
    CHECK(m.transpose() == mat({{0, 0}, {1, 0}}));
    CHECK(m.pow(0) == Matrix::identity(2, Q));
    CHECK(m.pow(2).is_zero());
}

TEST_CASE("prime field inverse") {
    FieldTag f5 = FieldTag::prime_field(5);
    Matrix m = mat({{2, 1}, {3, 4}}, f5);
    CHECK(m * m.inverse() == Matrix::identity(2, f5));
}
