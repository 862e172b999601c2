#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fatpoints/field_linalg.hpp"

using namespace fatpoints;

namespace {

PrimeMatrix random_matrix(PrimeField F, std::size_t rows, std::size_t cols,
                          std::mt19937_64& rng) {
    PrimeMatrix m(F, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, std::uint32_t(rng() % F.p()));
    return m;
}

PrimeMatrix transpose(const PrimeMatrix& m) {
    PrimeMatrix t(m.field(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t.set(c, r, m.at(r, c));
    return t;
}

bool annihilates(const PrimeMatrix& m, const std::vector<std::uint32_t>& v) {
    const PrimeField& F = m.field();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            acc = (acc + std::uint64_t(m.at(r, c)) * v[c]) % F.p();
        if (acc != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("field arithmetic basics") {
    PrimeField F(101);
    CHECK(F.add(100, 2) == 1);
    CHECK(F.sub(1, 2) == 100);
    CHECK(F.mul(50, 4) == 200 % 101);
    for (std::uint32_t a = 1; a < 101; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.from_int(-1) == 100);
    CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
    PrimeField big(kDefaultPrime);
    CHECK(big.mul(big.from_int(-1), big.from_int(-1)) == 1);
}

TEST_CASE("rank examples") {
    PrimeField F(101);
    PrimeMatrix zero(F, 3, 3);
    CHECK(rank(zero) == 0);

    PrimeMatrix id(F, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i, 1);
    CHECK(rank(id) == 4);

    PrimeMatrix prop(F, 2, 3);
    std::uint32_t vals[2][3] = {{1, 2, 3}, {2, 4, 6}};
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) prop.set(r, c, vals[r][c]);
    CHECK(rank(prop) == 1);
}

TEST_CASE("kernel basis examples") {
    PrimeField F(7);
    PrimeMatrix id(F, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
    CHECK(kernel_basis(id).empty());

    PrimeMatrix zero(F, 2, 3);
    auto kb = kernel_basis(zero);
    REQUIRE(kb.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(kb[i][j] == (i == j ? 1u : 0u));

    PrimeMatrix row(F, 1, 3);
    row.set(0, 0, 1);
    row.set(0, 1, 1);
    auto kr = kernel_basis(row);
    REQUIRE(kr.size() == 2);
    for (const auto& v : kr) CHECK(annihilates(row, v));
}

TEST_CASE("stack") {
    PrimeField F(101);
    PrimeMatrix a(F, 1, 2), b(F, 2, 2);
    a.set(0, 0, 5);
    b.set(1, 1, 7);
    auto s = stack({a, b});
    CHECK(s.rows() == 3);
    CHECK(s.cols() == 2);
    CHECK(s.at(0, 0) == 5);
    CHECK(s.at(2, 1) == 7);

    auto empty = stack({}, 5);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 5);
    CHECK_THROWS_AS(stack({}), std::invalid_argument);

    PrimeMatrix c(F, 1, 3);
    CHECK_THROWS_AS(stack({a, c}), std::invalid_argument);
}

TEST_CASE("rank properties on random matrices") {
    PrimeField F(kDefaultPrime);
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix(F, 20, 30, rng);
        CHECK(rank(m) == rank(transpose(m)));
        CHECK(rank(stack({m, m})) == rank(m));

        auto kb = kernel_basis(m);
        CHECK(kb.size() == m.cols() - rank(m));
        PrimeMatrix kmat(F, kb.size(), m.cols());
        for (std::size_t i = 0; i < kb.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) kmat.set(i, j, kb[i][j]);
        CHECK(rank(kmat) == kb.size());
        for (const auto& v : kb) CHECK(annihilates(m, v));
    }
}

TEST_CASE("stack rank dominates the parts") {
    PrimeField F(kDefaultPrime);
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_matrix(F, 4, 9, rng);
        auto b = random_matrix(F, 5, 9, rng);
        auto s = stack({a, b});
        CHECK(rank(s) >= rank(a));
        CHECK(rank(s) >= rank(b));
    }
}

TEST_CASE("row span accumulator") {
    PrimeField F(13);
    RowSpan span(F, 3);
    CHECK(span.absorb({1, 2, 3}));
    CHECK_FALSE(span.absorb({2, 4, 6}));
    CHECK(span.contains({12, 11, 10})); // -1 times the first row
    CHECK(span.absorb({0, 1, 0}));
    CHECK(span.rank() == 2);
    CHECK_FALSE(span.contains({0, 0, 1}));
}
