#pragma once

#include <cstdint>

// Closed-form combinatorial quantities shared by the whole pipeline:
// dimension counts for plane forms, the 6q+r / 12u+rho degree decompositions,
// the v/w critical degrees, expected Hilbert/Betti values and the alpha
// double-point budgets.

namespace fatpoints {

using i64 = long long;

// dim of degree-k forms in 3 variables, (k+2)(k+1)/2.
i64 n_forms(i64 k);

struct DegreeDecomp6 {
    i64 k = 0;
    i64 q = 0;
    i64 r = 0; // always one of 0,2,3,5
};

struct DegreeDecomp12 {
    i64 k = 0;
    i64 u = 0;
    i64 rho = 0; // always one of 0,3,8,11
};

// k(k+2) = 6q + r with r in {0,2,3,5}.
DegreeDecomp6 decompose6(i64 k);

// k(k+2) = 12u + rho, u and rho given by closed forms in k mod 6.
DegreeDecomp12 decompose12(i64 k);

// Minimal v >= 0 with length <= (v+2)(v+1)/2.  Rejects length < 1.
i64 v_of(i64 length);

// Minimal k >= 1 with k(k+2) >= 2*length.  Satisfies v <= w <= v+1.
i64 w_of(i64 length);

// max{0, n_forms(k) - length}.
i64 expected_hilbert(i64 length, i64 k);

struct ExpectedResolution {
    i64 v = 0;
    i64 gens_v = 0;   // n_forms(v) - length
    i64 gens_v1 = 0;  // max{0, 2*length - v(v+2)}
    bool hf_exception = false;
    bool res_exception = false;
};

// Expected generator counts for a general union of a simple, b double and
// c triple points, with the known small-case exception flags.
ExpectedResolution expected_resolution(i64 a, i64 b, i64 c);

// alpha(n,k) = n(2k-6n+2), the number of double points consumed by n
// stacked conic reductions.  Domain: k >= 6, 1 <= n, 6n <= k+4.
i64 alpha(i64 n, i64 k);

// Largest admissible n (1 <= n, 6n <= k) with alpha(n,k) <= d; 0 if d < 2k-4.
i64 n_bar(i64 d, i64 k);

} // namespace fatpoints
