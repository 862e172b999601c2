#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fatpoints/scheme_model.hpp"

using namespace fatpoints;

namespace {

// scheme at chosen support points (independent of random_scheme)
SupportedScheme fixed_scheme(std::vector<int> mults,
                             std::vector<std::pair<std::uint32_t, std::uint32_t>> pts,
                             std::uint64_t prime = kDefaultPrime) {
    SupportedScheme s;
    s.spec.mults = std::move(mults);
    s.support = std::move(pts);
    s.prime = prime;
    return s;
}

} // namespace

TEST_CASE("spec lengths and counts view") {
    auto spec = FatPointSpec::from_counts(2, 3, 1);
    CHECK(spec.length() == 2 + 9 + 6);
    i64 a, b, c;
    CHECK(spec.counts(a, b, c));
    CHECK(a == 2);
    CHECK(b == 3);
    CHECK(c == 1);

    FatPointSpec quad;
    quad.mults = {4};
    CHECK(quad.length() == 10);
    CHECK_FALSE(quad.counts(a, b, c));
}

TEST_CASE("random schemes are reproducible and distinct") {
    auto spec = FatPointSpec::from_counts(0, 0, 2);
    auto s1 = random_scheme(spec, 42);
    auto s2 = random_scheme(spec, 42);
    CHECK(s1.support == s2.support);
    auto s3 = random_scheme(spec, 43);
    CHECK(s1.support != s3.support);
    CHECK(s1.support[0] != s1.support[1]);
    CHECK_THROWS_AS(random_scheme(FatPointSpec{}, 1), std::invalid_argument);
}

TEST_CASE("conditions matrix shape and simple-point row") {
    // single simple point at the origin in degree 1: only z survives
    auto s = fixed_scheme({1}, {{0, 0}});
    auto m = conditions_matrix(s, 1);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 3);
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(0, 1) == 0);
    CHECK(m.at(0, 2) == 1);

    // shape: sum of m(m+1)/2 rows, n_forms(k) columns
    auto spec = FatPointSpec::from_counts(1, 1, 1);
    auto rs = random_scheme(spec, 7);
    for (i64 k = 0; k <= 5; ++k) {
        auto mk = conditions_matrix(rs, k);
        CHECK(mk.rows() == 10);
        CHECK(mk.cols() == std::size_t(n_forms(k)));
    }
}

TEST_CASE("single double point imposes independent conditions in degree 1") {
    auto s = random_scheme(FatPointSpec::from_counts(0, 1, 0), 11);
    auto m = conditions_matrix(s, 1);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 3);
    CHECK(rank(m) == 3);
    CHECK(hilbert_function(s, 1) == 0);
    CHECK(expected_hilbert(3, 1) == 0);
}

TEST_CASE("two triple points in degree 3: the cubed line survives") {
    auto s = random_scheme(FatPointSpec::from_counts(0, 0, 2), 5);
    auto m = conditions_matrix(s, 3);
    CHECK(m.rows() == 12);
    CHECK(m.cols() == 10);
    CHECK(rank(m) == 9);
    CHECK(hilbert_function(s, 3) == 1);

    // independent check: the cube of the line through the two points lies
    // in the kernel of the conditions matrix
    const PrimeField F(s.prime);
    const auto [x1, y1] = s.support[0];
    const auto [x2, y2] = s.support[1];
    // line (y2-y1) x - (x2-x1) y + (x2 y1 - x1 y2) z
    const std::uint32_t A = F.sub(y2, y1);
    const std::uint32_t B = F.sub(0, F.sub(x2, x1));
    const std::uint32_t C = F.sub(F.mul(x2, y1), F.mul(x1, y2));
    std::vector<std::uint32_t> cube(10, 0);
    auto idx = [](int a, int b) {
        const int da = 3 - a;
        return std::size_t(da * (da + 1) / 2 + (da - b));
    };
    const int fact[4] = {1, 1, 2, 6};
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            const int l = 3 - i - j;
            std::uint32_t v = F.from_int(6 / (fact[i] * fact[j] * fact[l]));
            for (int q = 0; q < i; ++q) v = F.mul(v, A);
            for (int q = 0; q < j; ++q) v = F.mul(v, B);
            for (int q = 0; q < l; ++q) v = F.mul(v, C);
            cube[idx(i, j)] = v;
        }
    bool nonzero = false;
    for (auto cv : cube) nonzero = nonzero || cv != 0;
    CHECK(nonzero);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c2 = 0; c2 < m.cols(); ++c2)
            acc = (acc + std::uint64_t(m.at(r, c2)) * cube[c2]) % F.p();
        CHECK(acc == 0);
    }
}

TEST_CASE("hilbert function examples") {
    // two double points: the doubled line exceeds the expected count in degree 2
    auto s22 = random_scheme(FatPointSpec::from_counts(0, 2, 0), 3);
    CHECK(hilbert_function(s22, 2) == 1);
    CHECK(expected_hilbert(6, 2) == 0);

    auto s3 = random_scheme(FatPointSpec::from_counts(0, 0, 1), 9);
    CHECK(hilbert_function(s3, 3) == 4);
    CHECK(expected_hilbert(6, 3) == 4);

    CHECK(hilbert_function(s3, 0) == 0);
    CHECK(hilbert_function(s22, 0) == 0);
}

TEST_CASE("semicontinuity and corank monotonicity on random schemes") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        const i64 a = i64(rng() % 4), b = i64(rng() % 3), c = i64(rng() % 3);
        if (a + 3 * b + 6 * c == 0) continue;
        auto spec = FatPointSpec::from_counts(a, b, c);
        auto s = random_scheme(spec, rng());
        const i64 l = spec.length();
        i64 prev = 0;
        for (i64 k = 0; k <= v_of(l) + 2; ++k) {
            const i64 h = hilbert_function(s, k);
            CHECK(h >= expected_hilbert(l, k));
            CHECK(h >= prev);
            prev = h;
        }
    }
}

TEST_CASE("kernel forms vanish to order m under direct shift expansion") {
    // independent route: expand f(x0+u, y0+w, 1) as a truncated polynomial
    // in (u, w) by repeated multiplication and read off the low-order part
    const PrimeField F(kDefaultPrime);
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 6; ++trial) {
        const i64 a = i64(rng() % 3), b = i64(rng() % 3), c = i64(rng() % 2);
        if (a + 3 * b + 6 * c == 0) continue;
        auto spec = FatPointSpec::from_counts(a, b, c);
        auto s = random_scheme(spec, rng());
        const i64 k = v_of(spec.length()) + 1;
        auto kb = kernel_basis(conditions_matrix(s, k));

        const int trunc = 3; // largest multiplicity
        auto mul_lin = [&](const std::vector<std::uint32_t>& poly, std::uint32_t c0) {
            // multiply the truncated poly in u (coeff index = power) by (u + c0)
            std::vector<std::uint32_t> out(trunc, 0);
            for (int i = 0; i < trunc; ++i) {
                out[i] = F.add(out[i], F.mul(poly[i], c0));
                if (i + 1 < trunc) out[i + 1] = F.add(out[i + 1], poly[i]);
            }
            return out;
        };
        for (const auto& f : kb) {
            for (std::size_t pi = 0; pi < s.support.size(); ++pi) {
                const int m = s.spec.mults[pi];
                const auto [x0, y0] = s.support[pi];
                // low[i][j]: coefficient of u^i w^j, i + j < trunc
                std::vector<std::vector<std::uint32_t>> low(
                    trunc, std::vector<std::uint32_t>(trunc, 0));
                std::size_t idx = 0;
                for (i64 pa = k; pa >= 0; --pa)
                    for (i64 pb = k - pa; pb >= 0; --pb, ++idx) {
                        if (f[idx] == 0) continue;
                        std::vector<std::uint32_t> pu(trunc, 0), pw(trunc, 0);
                        pu[0] = 1;
                        pw[0] = 1;
                        for (i64 e = 0; e < pa; ++e) pu = mul_lin(pu, x0);
                        for (i64 e = 0; e < pb; ++e) pw = mul_lin(pw, y0);
                        for (int i = 0; i < trunc; ++i)
                            for (int j = 0; j < trunc; ++j)
                                low[i][j] = F.add(low[i][j],
                                                  F.mul(f[idx], F.mul(pu[i], pw[j])));
                    }
                for (int i = 0; i < m; ++i)
                    for (int j = 0; i + j < m; ++j) CHECK(low[i][j] == 0);
            }
        }
    }
}

TEST_CASE("degeneration length accounting") {
    // a double point carries the length of three simple points, a triple
    // point that of a double plus three simples
    CHECK(FatPointSpec::from_counts(0, 1, 0).length() ==
          3 * FatPointSpec::from_counts(1, 0, 0).length());
    CHECK(FatPointSpec::from_counts(0, 0, 1).length() ==
          FatPointSpec::from_counts(0, 1, 0).length() +
              3 * FatPointSpec::from_counts(1, 0, 0).length());
}

TEST_CASE("serialization round trip") {
    auto s = random_scheme(FatPointSpec::from_counts(2, 1, 1), 77);
    const std::string text = serialize_scheme(s);
    auto back = parse_scheme(text);
    CHECK(back.spec.mults == s.spec.mults);
    CHECK(back.support == s.support);

    CHECK_THROWS_AS(parse_scheme("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scheme("1:5:5\n1:5:5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scheme(""), std::invalid_argument);
    auto neg = parse_scheme("2:-1:7\n");
    CHECK(neg.support[0].first == kDefaultPrime - 1);
}
