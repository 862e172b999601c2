#include "fatpoints/betti_engine.hpp"

#include <algorithm>
#include <cassert>

namespace fatpoints {

namespace {

using Vec = std::vector<std::uint32_t>;

std::size_t mono_index(i64 a, i64 b, i64 k) {
    const i64 da = k - a;
    return std::size_t(da * (da + 1) / 2 + (da - b));
}

// Coefficient vector of mono(x^ma y^mb z^(j-d-ma-mb)) * f, for f of degree d.
Vec shift_poly(const Vec& f, i64 d, i64 ma, i64 mb, i64 j) {
    Vec out(std::size_t(n_forms(j)), 0);
    std::size_t idx = 0;
    for (i64 a = d; a >= 0; --a)
        for (i64 b = d - a; b >= 0; --b, ++idx)
            if (f[idx] != 0) out[mono_index(a + ma, b + mb, j)] = f[idx];
    return out;
}

// x*, y*, z* images of a degree-(k-1) coefficient vector inside degree k.
std::vector<Vec> linear_multiples(const Vec& f, i64 k) {
    return {shift_poly(f, k - 1, 1, 0, k), shift_poly(f, k - 1, 0, 1, k),
            shift_poly(f, k - 1, 0, 0, k)};
}

// Per-scheme cache of conditions-matrix kernels.
class IdealCache {
  public:
    explicit IdealCache(const SupportedScheme& s) : scheme_(s) {}

    const std::vector<Vec>& kernel(i64 k) {
        auto it = kernels_.find(k);
        if (it != kernels_.end()) return it->second;
        auto kb = kernel_basis(conditions_matrix(scheme_, k));
        return kernels_.emplace(k, std::move(kb)).first->second;
    }

    i64 h0(i64 k) {
        if (k < 0) return 0;
        return i64(kernel(k).size());
    }

    const SupportedScheme& scheme() const { return scheme_; }

  private:
    const SupportedScheme& scheme_;
    std::map<i64, std::vector<Vec>> kernels_;
};

i64 mu_rank_cached(IdealCache& cache, i64 k) {
    const auto& B = cache.kernel(k - 1);
    if (B.empty()) return 0;
    RowSpan span(PrimeField(cache.scheme().prime), std::size_t(n_forms(k)));
    for (const Vec& f : B)
        for (Vec& g : linear_multiples(f, k)) span.absorb(std::move(g));
    return i64(span.rank());
}

std::vector<GradedPiece> generators_cached(IdealCache& cache) {
    const i64 length = cache.scheme().spec.length();
    if (length < 1) throw std::invalid_argument("generators_per_degree: empty scheme");
    const i64 v = v_of(length);
    // non-maximal Hilbert functions can have generators below v
    i64 start = v;
    while (start > 0 && cache.h0(start - 1) > 0) --start;
    std::vector<GradedPiece> pieces;
    for (i64 k = start;; ++k) {
        if (k > v + 4)
            throw DegenerateTrialError("generator degrees did not stabilize by v+4");
        GradedPiece p;
        p.k = k;
        p.h0 = cache.h0(k);
        p.mu_rank = k == 0 ? 0 : mu_rank_cached(cache, k);
        p.gens = p.h0 - p.mu_rank;
        if (p.gens < 0 || p.mu_rank > std::min<i64>(3 * cache.h0(k - 1), p.h0))
            throw std::logic_error("mu_rank out of range");
        pieces.push_back(p);
        if (k > v && p.gens == 0 && p.h0 == expected_hilbert(length, k)) break;
    }
    return pieces;
}

struct Generator {
    i64 degree;
    Vec coeffs;
};

// Explicit minimal generators: kernel vectors independent of the image of
// the multiplication map, in deterministic kernel-basis order.
std::vector<Generator> pick_generators(IdealCache& cache, const std::vector<GradedPiece>& pieces) {
    const PrimeField F(cache.scheme().prime);
    std::vector<Generator> gens;
    for (const auto& p : pieces) {
        if (p.gens == 0) continue;
        RowSpan span(F, std::size_t(n_forms(p.k)));
        if (p.k > 0)
            for (const Vec& f : cache.kernel(p.k - 1))
                for (Vec& g : linear_multiples(f, p.k)) span.absorb(std::move(g));
        i64 found = 0;
        for (const Vec& vkt : cache.kernel(p.k)) {
            if (span.absorb(vkt)) {
                gens.push_back({p.k, vkt});
                ++found;
            }
        }
        if (found != p.gens) throw std::logic_error("generator selection mismatch");
    }
    return gens;
}

std::map<i64, i64> syzygies_cached(IdealCache& cache, const std::vector<GradedPiece>& pieces) {
    const i64 length = cache.scheme().spec.length();
    const i64 v = v_of(length);
    const PrimeField F(cache.scheme().prime);
    const auto gens = pick_generators(cache, pieces);
    const i64 total_gens = i64(gens.size());
    if (total_gens == 0) throw std::logic_error("no generators");

    i64 dmin = gens.front().degree;
    for (const auto& g : gens) dmin = std::min(dmin, g.degree);

    std::map<i64, i64> syz;
    i64 total_syz = 0;
    std::vector<Vec> prev_kernel; // Syz_{j-1} basis as concatenated tuples

    for (i64 j = dmin;; ++j) {
        if (j > v + 5)
            throw DegenerateTrialError("syzygy degrees did not stabilize by v+5");

        // block layout of the degree-j tuple space
        std::vector<std::size_t> offset(gens.size() + 1, 0);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const i64 bd = j - gens[i].degree;
            offset[i + 1] = offset[i] + (bd >= 0 ? std::size_t(n_forms(bd)) : 0);
        }
        const std::size_t dim_j = offset.back();

        // matrix of (g_i) -> sum g_i f_i
        PrimeMatrix M(F, std::size_t(n_forms(j)), dim_j);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const i64 bd = j - gens[i].degree;
            if (bd < 0) continue;
            std::size_t col = offset[i];
            for (i64 a = bd; a >= 0; --a)
                for (i64 b = bd - a; b >= 0; --b, ++col) {
                    Vec prod = shift_poly(gens[i].coeffs, gens[i].degree, a, b, j);
                    for (std::size_t r = 0; r < prod.size(); ++r)
                        if (prod[r] != 0) M.set(r, col, prod[r]);
                }
        }
        std::vector<Vec> ker = kernel_basis(M);

        // span of linear-form multiples of Syz_{j-1} inside Syz_j
        RowSpan old_span(F, dim_j);
        for (const Vec& u : prev_kernel) {
            for (int which = 0; which < 3; ++which) {
                Vec lifted(dim_j, 0);
                std::size_t pos = 0;
                for (std::size_t i = 0; i < gens.size(); ++i) {
                    const i64 bd_prev = j - 1 - gens[i].degree;
                    if (bd_prev < 0) continue;
                    Vec block(u.begin() + pos, u.begin() + pos + std::size_t(n_forms(bd_prev)));
                    pos += std::size_t(n_forms(bd_prev));
                    const i64 ma = which == 0 ? 1 : 0;
                    const i64 mb = which == 1 ? 1 : 0;
                    Vec big = shift_poly(block, bd_prev, ma, mb, bd_prev + 1);
                    std::copy(big.begin(), big.end(), lifted.begin() + offset[i]);
                }
                old_span.absorb(std::move(lifted));
            }
        }
        const i64 fresh = i64(ker.size()) - i64(old_span.rank());
        if (fresh < 0) throw std::logic_error("syzygy count negative");
        if (fresh > 0) syz[j] = fresh;
        total_syz += fresh;
        prev_kernel = std::move(ker);
        if (total_syz == total_gens - 1) break;
    }
    return syz;
}

} // namespace

i64 mu_rank(const SupportedScheme& scheme, i64 k) {
    if (k < 1) throw std::invalid_argument("mu_rank: k must be >= 1");
    IdealCache cache(scheme);
    return mu_rank_cached(cache, k);
}

std::vector<GradedPiece> generators_per_degree(const SupportedScheme& scheme) {
    IdealCache cache(scheme);
    return generators_cached(cache);
}

std::map<i64, i64> syzygies_per_degree(const SupportedScheme& scheme,
                                       const std::vector<GradedPiece>& pieces) {
    IdealCache cache(scheme);
    return syzygies_cached(cache, pieces);
}

TrialReport run_trial(const SupportedScheme& scheme, const ExpectedResolution& expected,
                      bool with_syzygies) {
    TrialReport t;
    t.seed = scheme.seed;
    t.scheme_lines = serialize_scheme(scheme);
    const i64 length = scheme.spec.length();
    const i64 v = v_of(length);
    IdealCache cache(scheme);
    try {
        i64 below = v - 1;
        t.hilbert[v - 1 >= 0 ? v - 1 : 0] = cache.h0(std::max<i64>(v - 1, 0));
        // extend downward while nonzero so exception reports show the full tail
        while (below > 0 && cache.h0(below) > 0) {
            t.hilbert[below] = cache.h0(below);
            --below;
            t.hilbert[below] = cache.h0(below);
        }
        const auto pieces = generators_cached(cache);
        t.pieces = pieces;
        for (const auto& p : pieces) t.hilbert[p.k] = p.h0;
        const i64 top = pieces.back().k + 1;
        t.hilbert[top] = cache.h0(top);

        t.hf_maximal = (v == 0 || cache.h0(v - 1) == 0) && cache.h0(v) == n_forms(v) - length;

        std::map<i64, i64> got;
        for (const auto& p : pieces)
            if (p.gens > 0) got[p.k] = p.gens;
        std::map<i64, i64> want;
        if (expected.gens_v > 0) want[expected.v] = expected.gens_v;
        if (expected.gens_v1 > 0) want[expected.v + 1] = expected.gens_v1;
        t.matches_expected = t.hf_maximal && got == want;

        for (const auto& [k, h] : t.hilbert) {
            if (h != n_forms(k) - length) continue; // only regular degrees
            auto next = t.hilbert.find(k + 1);
            if (next == t.hilbert.end()) continue;
            if (3 * h - next->second != k * (k + 2) - 2 * length) t.identity_ok = false;
        }

        if (with_syzygies) t.syzygies = syzygies_cached(cache, pieces);
    } catch (const DegenerateTrialError& e) {
        t.degenerate = true;
        t.note = e.what();
        t.matches_expected = false;
    }
    return t;
}

BettiReport verify_expected(i64 a, i64 b, i64 c, const std::vector<std::uint64_t>& seeds,
                            std::uint64_t prime, bool with_syzygies) {
    BettiReport rep;
    rep.a = a;
    rep.b = b;
    rep.c = c;
    rep.length = a + 3 * b + 6 * c;
    rep.prime = prime;
    rep.expected = expected_resolution(a, b, c);
    if (seeds.empty()) throw std::invalid_argument("verify_expected: no seeds");

    i64 ok = 0, hf_ok = 0, live = 0;
    for (std::uint64_t seed : seeds) {
        const auto scheme = random_scheme(FatPointSpec::from_counts(a, b, c), seed, prime);
        TrialReport t = run_trial(scheme, rep.expected, with_syzygies);
        if (!t.degenerate) {
            ++live;
            if (t.matches_expected) ++ok;
            if (t.hf_maximal) ++hf_ok;
        }
        rep.trials.push_back(std::move(t));
    }
    rep.aggregate_matches = live > 0 && 2 * ok > live;
    rep.aggregate_hf_maximal = live > 0 && 2 * hf_ok > live;
    return rep;
}

} // namespace fatpoints
