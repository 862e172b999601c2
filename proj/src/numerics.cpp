#include "fatpoints/numerics.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace fatpoints {

namespace {

i64 checked_mul(i64 a, i64 b) {
    if (a != 0 && (std::numeric_limits<i64>::max() / (a < 0 ? -a : a)) < (b < 0 ? -b : b))
        throw std::overflow_error("integer overflow in numerics");
    return a * b;
}

} // namespace

i64 n_forms(i64 k) {
    if (k < 0) throw std::invalid_argument("n_forms: k must be >= 0");
    return checked_mul(k + 2, k + 1) / 2;
}

DegreeDecomp6 decompose6(i64 k) {
    if (k < 0) throw std::invalid_argument("decompose6: k must be >= 0");
    const i64 total = checked_mul(k, k + 2);
    DegreeDecomp6 d{k, total / 6, total % 6};
    if (d.r == 1 || d.r == 4)
        throw std::logic_error("decompose6: impossible remainder " + std::to_string(d.r));
    return d;
}

DegreeDecomp12 decompose12(i64 k) {
    if (k < 0) throw std::invalid_argument("decompose12: k must be >= 0");
    const i64 l = k / 6;
    DegreeDecomp12 d;
    d.k = k;
    switch (k % 6) {
        case 0: d.u = 3 * l * l + l;         d.rho = 0;  break;
        case 1: d.u = 3 * l * l + 2 * l;     d.rho = 3;  break;
        case 2: d.u = 3 * l * l + 3 * l;     d.rho = 8;  break;
        case 3: d.u = 3 * l * l + 4 * l + 1; d.rho = 3;  break;
        case 4: d.u = 3 * l * l + 5 * l + 2; d.rho = 0;  break;
        default: d.u = 3 * l * l + 6 * l + 2; d.rho = 11; break;
    }
    if (12 * d.u + d.rho != checked_mul(k, k + 2))
        throw std::logic_error("decompose12: closed form disagrees with k(k+2)");
    return d;
}

i64 v_of(i64 length) {
    if (length < 1) throw std::invalid_argument("v_of: length must be >= 1");
    i64 v = 0;
    while (n_forms(v) < length) ++v;
    return v;
}

i64 w_of(i64 length) {
    if (length < 1) throw std::invalid_argument("w_of: length must be >= 1");
    i64 w = 1;
    while (checked_mul(w, w + 2) < 2 * length) ++w;
    return w;
}

i64 expected_hilbert(i64 length, i64 k) {
    if (length < 0) throw std::invalid_argument("expected_hilbert: length must be >= 0");
    const i64 d = n_forms(k) - length;
    return d > 0 ? d : 0;
}

ExpectedResolution expected_resolution(i64 a, i64 b, i64 c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("expected_resolution: counts must be >= 0");
    const i64 length = a + 3 * b + 6 * c;
    if (length < 1) throw std::invalid_argument("expected_resolution: empty scheme");

    ExpectedResolution r;
    r.v = v_of(length);
    r.gens_v = n_forms(r.v) - length;
    const i64 excess = 2 * length - r.v * (r.v + 2);
    r.gens_v1 = excess > 0 ? excess : 0;

    const bool double_hf = (a == 0 && c == 0 && (b == 2 || b == 5));
    const bool triple_hf = (a == 0 && b == 0 && (c == 2 || c == 5));
    r.hf_exception = double_hf || triple_hf;
    const bool double_res = double_hf || (a == 1 && c == 0 && (b == 1 || b == 2));
    const bool triple_res = (a == 0 && b == 0 && (c == 2 || c == 3 || c == 5));
    r.res_exception = double_res || triple_res;
    return r;
}

i64 alpha(i64 n, i64 k) {
    if (k < 6) throw std::invalid_argument("alpha: k must be >= 6");
    if (n < 1 || 6 * n > k + 4) throw std::invalid_argument("alpha: n out of range");
    return n * (2 * k - 6 * n + 2);
}

i64 n_bar(i64 d, i64 k) {
    if (d < 0) throw std::invalid_argument("n_bar: d must be >= 0");
    if (k < 6) throw std::invalid_argument("n_bar: k must be >= 6");
    if (d < 2 * k - 4) return 0;
    i64 best = 0;
    for (i64 n = 1; 6 * n <= k; ++n)
        if (alpha(n, k) <= d) best = n;
    return best;
}

} // namespace fatpoints
