#include "fatpoints/scheme_model.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fatpoints {

namespace {

// Uniform draw in [0, p) by rejection, so results do not depend on the
// standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t p) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % p;
}

// Pascal table of C(n, j) mod p for n <= max_n.
std::vector<std::vector<std::uint32_t>> binomials_mod(i64 max_n, const PrimeField& F) {
    std::vector<std::vector<std::uint32_t>> c(max_n + 1);
    for (i64 n = 0; n <= max_n; ++n) {
        c[n].assign(n + 1, 1);
        for (i64 j = 1; j < n; ++j) c[n][j] = F.add(c[n - 1][j - 1], c[n - 1][j]);
    }
    return c;
}

} // namespace

FatPointSpec FatPointSpec::from_counts(i64 a, i64 b, i64 c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("FatPointSpec: counts must be >= 0");
    FatPointSpec s;
    s.mults.reserve(std::size_t(a + b + c));
    for (i64 i = 0; i < c; ++i) s.mults.push_back(3);
    for (i64 i = 0; i < b; ++i) s.mults.push_back(2);
    for (i64 i = 0; i < a; ++i) s.mults.push_back(1);
    return s;
}

i64 FatPointSpec::length() const {
    i64 l = 0;
    for (int m : mults) {
        if (m < 1) throw std::invalid_argument("FatPointSpec: multiplicities must be >= 1");
        l += i64(m) * (m + 1) / 2;
    }
    return l;
}

int FatPointSpec::max_mult() const {
    int mx = 0;
    for (int m : mults) mx = std::max(mx, m);
    return mx;
}

bool FatPointSpec::counts(i64& a, i64& b, i64& c) const {
    a = b = c = 0;
    for (int m : mults) {
        switch (m) {
            case 1: ++a; break;
            case 2: ++b; break;
            case 3: ++c; break;
            default: return false;
        }
    }
    return true;
}

SupportedScheme random_scheme(const FatPointSpec& spec, std::uint64_t seed, std::uint64_t prime) {
    if (spec.empty()) throw std::invalid_argument("random_scheme: empty spec");
    PrimeField F(prime); // validates the prime
    SupportedScheme s;
    s.spec = spec;
    s.seed = seed;
    s.prime = prime;
    std::mt19937_64 rng(seed);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    while (s.support.size() < spec.mults.size()) {
        const std::uint32_t x = std::uint32_t(uniform_below(rng, F.p()));
        const std::uint32_t y = std::uint32_t(uniform_below(rng, F.p()));
        if (seen.insert({x, y}).second) s.support.push_back({x, y});
    }
    return s;
}

PrimeMatrix conditions_matrix(const SupportedScheme& scheme, i64 k) {
    if (k < 0) throw std::invalid_argument("conditions_matrix: k must be >= 0");
    const PrimeField F(scheme.prime);
    const i64 cols = n_forms(k);
    const i64 rows = scheme.spec.length();
    PrimeMatrix M(F, std::size_t(rows), std::size_t(cols));

    const auto binom = binomials_mod(std::max<i64>(k, 1), F);

    // column layout: a = k..0, then b = k-a..0
    std::vector<std::pair<int, int>> monos;
    monos.reserve(std::size_t(cols));
    for (i64 a = k; a >= 0; --a)
        for (i64 b = k - a; b >= 0; --b) monos.push_back({int(a), int(b)});

    std::size_t row = 0;
    for (std::size_t i = 0; i < scheme.support.size(); ++i) {
        const int m = scheme.spec.mults[i];
        const auto [x, y] = scheme.support[i];
        std::vector<std::uint32_t> xp(std::size_t(k + 1)), yp(std::size_t(k + 1));
        xp[0] = yp[0] = 1;
        for (i64 e = 1; e <= k; ++e) {
            xp[std::size_t(e)] = F.mul(xp[std::size_t(e - 1)], x);
            yp[std::size_t(e)] = F.mul(yp[std::size_t(e - 1)], y);
        }
        for (int order = 0; order < m; ++order) {
            for (int alpha = order; alpha >= 0; --alpha, ++row) {
                const int beta = order - alpha;
                for (std::size_t col = 0; col < monos.size(); ++col) {
                    const auto [a, b] = monos[col];
                    if (a < alpha || b < beta) continue;
                    std::uint32_t v = F.mul(binom[std::size_t(a)][std::size_t(alpha)],
                                            binom[std::size_t(b)][std::size_t(beta)]);
                    v = F.mul(v, xp[std::size_t(a - alpha)]);
                    v = F.mul(v, yp[std::size_t(b - beta)]);
                    M.set(row, col, v);
                }
            }
        }
    }
    return M;
}

i64 hilbert_function(const SupportedScheme& scheme, i64 k) {
    return n_forms(k) - i64(rank(conditions_matrix(scheme, k)));
}

std::string serialize_scheme(const SupportedScheme& scheme) {
    std::ostringstream out;
    for (std::size_t i = 0; i < scheme.support.size(); ++i)
        out << scheme.spec.mults[i] << ':' << scheme.support[i].first << ':'
            << scheme.support[i].second << '\n';
    return out.str();
}

SupportedScheme parse_scheme(const std::string& text, std::uint64_t prime) {
    PrimeField F(prime);
    SupportedScheme s;
    s.prime = prime;
    std::istringstream in(text);
    std::string line;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long m, x, y;
        char c1, c2;
        if (!(ls >> m >> c1 >> x >> c2 >> y) || c1 != ':' || c2 != ':')
            throw std::invalid_argument("parse_scheme: malformed line '" + line + "'");
        if (m < 1) throw std::invalid_argument("parse_scheme: multiplicity must be >= 1");
        const std::uint32_t xr = F.from_int(x), yr = F.from_int(y);
        if (!seen.insert({xr, yr}).second)
            throw std::invalid_argument("parse_scheme: repeated support point");
        s.spec.mults.push_back(int(m));
        s.support.push_back({xr, yr});
    }
    if (s.spec.empty()) throw std::invalid_argument("parse_scheme: no points");
    return s;
}

} // namespace fatpoints
