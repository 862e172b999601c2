#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fatpoints/field_linalg.hpp"
#include "fatpoints/numerics.hpp"

// Fat point schemes with random support in the affine chart z = 1, and the
// interpolation (conditions) matrix whose corank is the Hilbert function.

namespace fatpoints {

struct FatPointSpec {
    std::vector<int> mults; // one entry >= 1 per point

    static FatPointSpec from_counts(i64 a, i64 b, i64 c);

    // Scheme length: sum of m(m+1)/2.
    i64 length() const;
    int max_mult() const;
    bool empty() const { return mults.empty(); }

    // Counts view (a,b,c); false when some multiplicity exceeds 3.
    bool counts(i64& a, i64& b, i64& c) const;
};

struct SupportedScheme {
    FatPointSpec spec;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> support; // (x, y), z = 1
    std::uint64_t seed = 0;
    std::uint64_t prime = kDefaultPrime;
};

// Distinct uniform points in the chart; deterministic in (seed, prime).
SupportedScheme random_scheme(const FatPointSpec& spec, std::uint64_t seed,
                              std::uint64_t prime = kDefaultPrime);

// Matrix imposing vanishing to order m_i at each support point on degree-k
// forms.  Rows: per point, pairs (alpha, beta) with alpha+beta < m_i.
// Columns: monomials x^a y^b z^(k-a-b), a descending then b descending.
// Entry: C(a,alpha) C(b,beta) x^(a-alpha) y^(b-beta) mod p.
PrimeMatrix conditions_matrix(const SupportedScheme& scheme, i64 k);

// n_forms(k) - rank(conditions_matrix).
i64 hilbert_function(const SupportedScheme& scheme, i64 k);

// Line-oriented "m:x:y" form, one point per line, decimal residues.
std::string serialize_scheme(const SupportedScheme& scheme);
SupportedScheme parse_scheme(const std::string& text, std::uint64_t prime = kDefaultPrime);

} // namespace fatpoints
