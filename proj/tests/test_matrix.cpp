#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "divfree/matrix.hpp"

using namespace divfree;

namespace {

RationalMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-5, 5);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("rref and rank basics") {
    RationalMatrix m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(1, 2) = 6;
    CHECK(m.rank() == 1);

    RationalMatrix id = RationalMatrix::identity(4);
    CHECK(id.rank() == 4);
    CHECK(id.determinant() == 1);
}

TEST_CASE("nullspace vectors lie in the kernel") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        RationalMatrix m = random_matrix(3, 5, rng);
        auto basis = m.nullspace();
        CHECK(basis.size() == 5 - m.rank());
        for (const auto& v : basis) {
            for (std::size_t r = 0; r < 3; ++r) {
                Rational acc(0);
                for (std::size_t c = 0; c < 5; ++c) acc += m(r, c) * v[c];
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("elimination is reproducible bit for bit") {
    std::mt19937_64 rng(777);
    RationalMatrix m = random_matrix(4, 6, rng);
    RationalMatrix a(m), b(m);
    a.rref();
    b.rref();
    CHECK(a == b);
    CHECK(m.nullspace() == m.nullspace());
}

TEST_CASE("inverse and determinant") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        RationalMatrix m = random_matrix(3, 3, rng);
        if (m.determinant() == 0) continue;
        RationalMatrix inv = m.inverse();
        CHECK(m * inv == RationalMatrix::identity(3));
        CHECK(inv * m == RationalMatrix::identity(3));
    }
    RationalMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = 2;
    singular(1, 0) = 2;
    singular(1, 1) = 4;
    CHECK(singular.determinant() == 0);
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}
