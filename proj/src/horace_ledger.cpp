#include "fatpoints/horace_ledger.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fatpoints {
namespace ledger {

namespace {

struct StepFailure : std::runtime_error {
    std::string rule;
    StepFailure(std::string r, const std::string& msg)
        : std::runtime_error(r + ": " + msg), rule(std::move(r)) {}
};

i64 rho_of(i64 k) { return decompose12(k).rho; }
i64 u_of(i64 k) { return decompose12(k).u; }
i64 r6_of(i64 k) { return decompose6(k).r; }
i64 q6_of(i64 k) { return decompose6(k).q; }

bool allowed_p(i64 p) {
    return p == 0 || p == 1 || p == 2 || p == 3 || p == 5 || p == 8 || p == 11;
}

void push_step(Certificate& cert, const std::string& rule, const Configuration& before,
               const Configuration& after, std::map<std::string, i64> params = {},
               std::optional<std::string> axiom = std::nullopt) {
    Step st;
    st.rule = rule;
    st.k_before = before.k;
    st.k_after = after.k;
    st.params = std::move(params);
    st.length_before = before.total_length();
    st.length_after = after.total_length();
    st.state_after = after.describe();
    st.axiom = std::move(axiom);
    cert.steps.push_back(std::move(st));
}

} // namespace

bool ColumnScheme::admissible() const {
    if (entries.size() == 1) return entries[0] >= 1;
    const std::vector<std::vector<int>> shapes = {
        {2, 1}, {3, 1}, {3, 2}, {2, 2}, {3, 2, 1}};
    for (const auto& s : shapes)
        if (entries == s) return true;
    return false;
}

std::vector<ColumnScheme> Configuration::conic_columns() const {
    std::vector<ColumnScheme> cols;
    if (chunk > 0) cols.push_back({{int(chunk)}});
    for (i64 i = 0; i < c12; ++i) cols.push_back({{2, 1}});
    for (i64 i = 0; i < c13; ++i) cols.push_back({{3, 1}});
    for (i64 i = 0; i < c23; ++i) cols.push_back({{3, 2}});
    return cols;
}

i64 Configuration::total_length() const {
    return 2 * simples + 6 * doubles + 12 * triples + 2 * chunk + 6 * c12 + 8 * c13 +
           10 * c23 + (r5_on_conic ? 5 : 0) + (bundle_point ? 1 : 0) + rem.length();
}

i64 Configuration::conic_trace() const {
    return chunk + 2 * c12 + 3 * c13 + 3 * c23 + (r5_on_conic ? 2 : 0);
}

std::string Configuration::describe() const {
    std::ostringstream out;
    out << "k=" << k << " s=" << simples << " d=" << doubles << " t=" << triples
        << " conic[e=" << chunk << " (1;2)x" << c12 << " (1;3)x" << c13 << " (2;3)x" << c23;
    if (r5_on_conic) out << " R5col";
    out << "]";
    if (bundle_point) out << " bundle";
    out << " rem=R" << rem.p << (rem.barred ? "bar" : "") << " len=" << total_length();
    return out.str();
}

bool in_delta_k(i64 s, i64 d, i64 p, i64 k) {
    if (k < 0 || s < 0 || d < 0 || p < 0) return false;
    if (!(p == 0 || p == 1 || p == 2 || p == 3 || p == 5)) return false;
    if (p > r6_of(k)) return false;
    return 2 * s + 6 * d + p == k * (k + 2);
}

bool in_lambda_k(i64 s, i64 d, i64 t, i64 p, i64 k) {
    if (k < 0 || s < 0 || d < 0 || t < 0 || p < 0) return false;
    if (!allowed_p(p)) return false;
    if (p > rho_of(k)) return false;
    return 2 * s + 6 * d + 12 * t + p == k * (k + 2);
}

DeltaTuple choose_delta_subtuple(i64 a, i64 b, i64 k) {
    if (k < 1) throw std::invalid_argument("choose_delta_subtuple: k must be >= 1");
    if ((k - 1) * (k + 1) >= 2 * a + 6 * b)
        throw std::invalid_argument("choose_delta_subtuple: budget precondition fails");
    const i64 q = q6_of(k - 1), r = r6_of(k - 1);
    const i64 l = r / 2, eps = r % 2;
    DeltaTuple out;
    if (q < b) {
        out = {0, q, r}; // remainder rides inside the (q+1)-st double pullback
    } else {
        out = {3 * (q - b) + l, b, eps};
        if (out.s + (out.p > 0 ? 1 : 0) > a)
            throw std::logic_error("choose_delta_subtuple: simple budget violated");
    }
    if (!in_delta_k(out.s, out.d, out.p, k - 1))
        throw std::logic_error("choose_delta_subtuple: constructed tuple not in Delta");
    return out;
}

LambdaTuple choose_lambda_supertuple(i64 a, i64 b, i64 c, i64 k) {
    if (a < 0 || b < 0 || c < 0 || k < 0)
        throw std::invalid_argument("choose_lambda_supertuple: negative input");
    const i64 total = k * (k + 2);
    const i64 need = 2 * a + 6 * b + 12 * c;
    if (need > total)
        throw std::invalid_argument("choose_lambda_supertuple: scheme exceeds k(k+2)");
    const i64 slack = total - need;
    for (i64 p : {11, 8, 5, 3, 2, 1, 0}) {
        if (p > rho_of(k) || p > slack || (slack - p) % 2 != 0) continue;
        LambdaTuple out{a + (slack - p) / 2, b, c, p};
        if (in_lambda_k(out.s, out.d, out.t, out.p, k)) return out;
    }
    throw std::runtime_error("choose_lambda_supertuple: no admissible tuple");
}

ReduceResult reduce_simples(i64 s, i64 d, i64 t, i64 p, i64 k) {
    if (!in_lambda_k(s, d, t, p, k))
        throw std::invalid_argument("reduce_simples: tuple not in Lambda_k");
    const i64 rho = rho_of(k);
    ReduceResult r;
    if (3 * d <= s) {
        // merge every double with three simples, then six simples at a time
        const i64 s1 = s - 3 * d;
        r.merged_all_doubles = true;
        r.sigma = s1 % 6;
        r.tau = t + d + s1 / 6;
        r.d = 0;
        r.t = r.tau;
        if (2 * r.sigma + p != rho)
            throw std::logic_error("reduce_simples: remainder arithmetic failed");
        if (2 * s + 6 * d != 12 * (r.tau - t) + 2 * r.sigma)
            throw std::logic_error("reduce_simples: length not conserved");
    } else {
        const i64 th = s / 3;
        r.sigma = s % 3;
        r.delta = d - th;
        r.tau = t + th;
        if (r.delta < 1) throw std::logic_error("reduce_simples: no double left");
        r.j = r.delta % 2;
        if (6 * r.j + 2 * r.sigma + p != rho)
            throw std::logic_error("reduce_simples: remainder arithmetic failed");
        if (r.sigma == 0 && r.j == 1 && p == 5) {
            r.barred = true; // a double plus R_5 does not collapse further
            r.d = r.delta - 1;
        } else {
            r.d = r.delta - r.j;
        }
        r.t = r.tau;
    }
    return r;
}

// ---- conic steps ----

namespace {

void validate_choice(const Configuration& c, const StepChoice& ch) {
    if (ch.g < 0 || ch.n < 0 || ch.p < 0 || ch.r < 0 || ch.s < 0 || ch.simples_on_conic < 0)
        throw StepFailure("standard_step", "negative slice count");
    if (ch.n + ch.p > 1) throw StepFailure("standard_step", "n+p must be 0 or 1");
    if (ch.s > 1) throw StepFailure("standard_step", "s must be 0 or 1");
    if (ch.g + ch.n + ch.p > c.triples) throw StepFailure("standard_step", "not enough triples");
    if (ch.r + ch.s > c.doubles) throw StepFailure("standard_step", "not enough doubles");
    if (ch.simples_on_conic > c.simples) throw StepFailure("standard_step", "not enough simples");
    if (ch.remainder_slice != 0) {
        if (c.rem.barred) throw StepFailure("standard_step", "barred remainder cannot slide");
        if (ch.remainder_slice == 3 && !(c.rem.p == 8 || c.rem.p == 11))
            throw StepFailure("standard_step", "slice 3 needs R_8 or R_11");
        if (ch.remainder_slice == 2 && c.rem.p != 5)
            throw StepFailure("standard_step", "slice 2 needs R_5");
        if (ch.remainder_slice != 2 && ch.remainder_slice != 3)
            throw StepFailure("standard_step", "bad remainder slice");
    }
}

} // namespace

Configuration standard_step(const Configuration& conf, Step* recorded, const StepChoice* forced) {
    const i64 k = conf.k;
    if (k < 2) throw StepFailure("standard_step", "degree too small");
    if (conf.total_length() != k * (k + 2))
        throw StepFailure("standard_step", "length is not k(k+2)");
    if (conf.bundle_point && conf.r5_on_conic)
        throw StepFailure("standard_step", "unsupported state");
    const i64 forced_trace = conf.conic_trace();
    if (forced_trace > 2 * k) throw StepFailure("standard_step", "conic trace exceeds 2k");

    StepChoice ch;
    if (forced) {
        ch = *forced;
    } else {
        i64 needed = 2 * k - forced_trace;
        if (!conf.rem.barred) {
            // remainder deployment points of the base-case scripts
            if (conf.rem.p == 11 && k == 5) ch.remainder_slice = 3;
            else if (conf.rem.p == 8 && k == 12) ch.remainder_slice = 3;
            else if (conf.rem.p == 5 && k == 3) ch.remainder_slice = 2;
        }
        needed -= ch.remainder_slice;
        if (needed < 0) throw StepFailure("standard_step", "no room for the remainder slice");
        ch.g = std::min(conf.triples, needed / 3);
        needed -= 3 * ch.g;
        if (needed > 0 && conf.triples > ch.g) {
            if (needed == 2) { ch.n = 1; needed = 0; }
            else { ch.p = 1; needed -= 1; }
        }
        ch.r = std::min(conf.doubles, needed / 2);
        needed -= 2 * ch.r;
        if (needed > 0 && conf.doubles > ch.r) { ch.s = 1; needed -= 1; }
        ch.simples_on_conic = std::min(conf.simples, needed);
        needed -= ch.simples_on_conic;
        if (needed != 0) throw StepFailure("standard_step", "cannot fill the conic trace");
    }
    validate_choice(conf, ch);
    const i64 added = 3 * ch.g + 2 * ch.n + ch.p + 2 * ch.r + ch.s + ch.simples_on_conic +
                      ch.remainder_slice;
    if (forced_trace + added != 2 * k)
        throw StepFailure("standard_step", "trace does not saturate 2k");

    Configuration res;
    res.k = k - 2;
    res.simples = conf.simples - ch.simples_on_conic;
    res.doubles = conf.doubles - ch.r - ch.s;
    res.triples = conf.triples - ch.g - ch.n - ch.p;
    res.chunk = conf.c12 + conf.c13 + 2 * conf.c23 + ch.r + 2 * ch.s;
    res.c12 = ch.g;
    res.c13 = ch.n;
    res.c23 = ch.p;
    res.bundle_point = conf.bundle_point || conf.r5_on_conic;
    res.rem = conf.rem;
    if (ch.remainder_slice == 3 && conf.rem.p == 8) {
        res.rem = Remainder{};
        res.chunk += 1;
    } else if (ch.remainder_slice == 3 && conf.rem.p == 11) {
        res.rem = Remainder{};
        res.r5_on_conic = true;
    } else if (ch.remainder_slice == 2) {
        res.rem = Remainder{};
        res.bundle_point = true;
    }
    if (res.total_length() != (k - 2) * k)
        throw std::logic_error("standard_step: residue length mismatch");

    if (recorded) {
        Step st;
        st.rule = "standard_step";
        st.k_before = k;
        st.k_after = k - 2;
        st.params = {{"g", ch.g},          {"n", ch.n}, {"p", ch.p}, {"r", ch.r}, {"s", ch.s},
                     {"simples", ch.simples_on_conic}, {"rem_slice", ch.remainder_slice},
                     {"trace", 2 * k}};
        st.length_before = conf.total_length();
        st.length_after = res.total_length();
        st.state_after = res.describe();
        *recorded = st;
    }
    return res;
}

// ---- axiom table ----

bool axiom_A_applicable(i64 k) { return k == 1 || k >= 4; }
bool axiom_B_applicable(i64 k) { return k >= 10; }

bool axiom_settled_applicable(i64 b, i64 c, i64 d, i64 e, i64 f, i64 p, i64 k, bool barred) {
    if (b < 0 || c < 0 || d < 0 || e < 0 || f < 0) return false;
    if (k < 12) return false;
    if (barred && (p != 11 || k % 2 == 0)) return false;
    if (!barred && !(p == 0 || p == 3 || p == 8 || p == 11)) return false;
    if (k % 2 == 0 ? !(p == 0 || p == 8) : !(p == 3 || p == 11)) return false; // (2)_k
    if (2 * b + c + 3 * d + 3 * e > 2 * k) return false;                       // (0)_k budget
    if (d + e > 1) return false;                                               // (0)_k shape
    return 2 * (3 * b + c + 4 * d + 5 * e + 6 * f) + p == k * (k + 2);         // (1)_k length
}

const std::vector<AxiomInfo>& axiom_table() {
    static const std::vector<AxiomInfo> table = {
        {"A", "k == 1 or k >= 4",
         "q(k) double pullbacks with R_{r(k)} impose independent conditions"},
        {"B", "k >= 10",
         "u(k) triple pullbacks with R_{rho(k)} impose independent conditions"},
        {"SETTLED", "k >= 12, conditions (0),(1),(2)",
         "column scheme b(1;2)+c(1)+d(1;3)+e(2;3) over the conic with f triples and R_p"},
        {"SETTLED_BARRED", "k >= 12, k odd, conditions (0),(1),(2), p = 11",
         "same column scheme with the barred remainder (double pullback plus R_5)"},
        {"ONE_SETTLED", "k == 1, length 3",
         "a point on the conic (or a simple pullback) together with a bundle point"},
    };
    return table;
}

// ---- replay machinery ----

namespace {

// Termination attempts; emits the rewrite steps and the terminal axiom.
bool try_terminal(Certificate& cert, const Configuration& c) {
    const bool clean_conic = c.chunk == 0 && c.c12 == 0 && c.c13 == 0 && c.c23 == 0 &&
                             !c.r5_on_conic;

    // B(k): all triples with the full remainder
    if (!c.rem.barred && clean_conic && !c.bundle_point && c.simples == 0 && c.doubles == 0 &&
        c.k >= 0 && c.triples == u_of(c.k) && c.rem.p == rho_of(c.k) &&
        axiom_B_applicable(c.k)) {
        push_step(cert, "axiom", c, c, {{"k", c.k}}, "B(" + std::to_string(c.k) + ")");
        cert.terminal = *cert.steps.back().axiom;
        cert.ok = true;
        return true;
    }

    // settled column configuration over the conic
    if (c.simples == 0 && c.doubles == 0 && !c.r5_on_conic && !c.bundle_point &&
        axiom_settled_applicable(c.c12, c.chunk, c.c13, c.c23, c.triples, c.rem.p, c.k,
                                 c.rem.barred)) {
        const std::string id =
            (c.rem.barred ? "SETTLED_BARRED(" : "SETTLED(") + std::to_string(c.k) + ")";
        push_step(cert, "axiom", c, c,
                  {{"b", c.c12}, {"c", c.chunk}, {"d", c.c13}, {"e", c.c23},
                   {"f", c.triples}, {"p", c.rem.p}, {"k", c.k}},
                  id);
        cert.terminal = id;
        cert.ok = true;
        return true;
    }

    // A(k): doubles plus a small remainder; up to five conic points may be
    // regarded as general and merged.
    if (!c.rem.barred && c.triples == 0 && c.c12 == 0 && c.c13 == 0 && c.c23 == 0 &&
        !c.r5_on_conic && !c.bundle_point && c.rem.p <= 5 && c.chunk <= 5 &&
        axiom_A_applicable(c.k)) {
        const i64 e_total = c.chunk + c.simples;
        const i64 lam = e_total % 3, m = e_total / 3;
        if (2 * lam + c.rem.p == r6_of(c.k) && c.doubles + m == q6_of(c.k)) {
            Configuration cur = c;
            if (cur.chunk > 0) {
                Configuration next = cur;
                next.simples += next.chunk;
                next.chunk = 0;
                push_step(cert, "conic_points_general", cur, next, {{"points", cur.chunk}});
                cur = next;
            }
            if (m > 0) {
                Configuration next = cur;
                next.doubles += m;
                next.simples -= 3 * m;
                push_step(cert, "merge_simples_to_doubles", cur, next, {{"merged", m}});
                cur = next;
            }
            if (lam > 0) {
                Configuration next = cur;
                next.rem.p = int(2 * lam + cur.rem.p);
                next.simples = 0;
                push_step(cert, "absorb_simples_into_remainder", cur, next,
                          {{"simples", lam}, {"from_p", cur.rem.p}, {"to_p", next.rem.p}});
                cur = next;
            }
            push_step(cert, "axiom", cur, cur, {{"k", cur.k}},
                      "A(" + std::to_string(cur.k) + ")");
            cert.terminal = *cert.steps.back().axiom;
            cert.ok = true;
            return true;
        }
    }

    // one-settled terminal: a length-2 unit plus a bundle point (or R_1)
    if (c.k == 1 && c.doubles == 0 && c.triples == 0 && c.c12 == 0 && c.c13 == 0 &&
        c.c23 == 0 && !c.r5_on_conic && c.total_length() == 3 && !c.rem.barred) {
        const bool unit2 = (c.chunk + c.simples == 1);
        if (unit2 && ((c.bundle_point && c.rem.p == 0) || (!c.bundle_point && c.rem.p == 1))) {
            push_step(cert, "axiom", c, c, {}, "ONE_SETTLED");
            cert.terminal = "ONE_SETTLED";
            cert.ok = true;
            return true;
        }
    }
    return false;
}

void cascade(Certificate& cert, Configuration c) {
    for (;;) {
        if (try_terminal(cert, c)) return;
        if (c.k <= 1) throw StepFailure("cascade", "reached degree 1 without a terminal");

        if (c.rem.barred && c.k == 5) {
            Configuration next = c;
            next.doubles += 1;
            next.rem = Remainder{5, false};
            push_step(cert, "unpack_barred_remainder", c, next, {});
            c = next;
        }
        if (c.k == 3 && c.chunk >= 3 && c.chunk <= 5) {
            Configuration next = c;
            next.simples += next.chunk;
            next.chunk = 0;
            push_step(cert, "conic_points_general", c, next, {{"points", c.chunk}});
            c = next;
            const i64 m = c.simples / 3;
            if (m > 0) {
                next = c;
                next.doubles += m;
                next.simples -= 3 * m;
                push_step(cert, "merge_simples_to_doubles", c, next, {{"merged", m}});
                c = next;
            }
        }
        Step st;
        c = standard_step(c, &st);
        cert.steps.push_back(st);
    }
}

} // namespace

Configuration double_chain(const Configuration& conf, i64 n, Certificate* cert) {
    if (n < 1) throw StepFailure("double_chain", "n must be >= 1");
    Configuration c = conf;
    for (i64 i = 0; i < n; ++i) {
        const i64 k = c.k;
        if (k < 6) throw StepFailure("double_chain", "degree below 6");
        if (c.chunk != 0 || c.c12 != 0 || c.c13 != 0 || c.c23 != 0 || c.r5_on_conic)
            throw StepFailure("double_chain", "conic must be clear");
        const i64 consumed = 2 * k - 4;
        if (c.doubles < consumed) throw StepFailure("double_chain", "not enough doubles");
        Configuration next = c;
        next.doubles -= consumed;
        next.k = k - 6;
        if (next.total_length() != c.total_length() - 6 * consumed)
            throw std::logic_error("double_chain: length not conserved");
        if (cert)
            push_step(*cert, "double_chain_step", c, next,
                      {{"consumed_doubles", consumed}, {"trace_first", 2 * k},
                       {"trace_second", 2 * k - 4}, {"trace_third", 2 * k - 8}});
        c = next;
    }
    return c;
}

Certificate double_chain_compose(i64 k, i64 n, const Configuration& rest,
                                const Certificate& rest_cert) {
    Certificate cert;
    try {
        if (k < 6) throw StepFailure("double_chain", "degree below 6");
        Configuration top = rest;
        top.k = k;
        top.doubles = rest.doubles + alpha(n, k);
        Configuration out = double_chain(top, n, &cert);
        if (out.k != rest.k || out.doubles != rest.doubles ||
            out.total_length() != rest.total_length())
            throw StepFailure("double_chain", "residue does not match the certified rest");
        if (!rest_cert.ok) throw StepFailure("double_chain", "rest certificate not valid");
        for (const Step& st : rest_cert.steps) cert.steps.push_back(st);
        cert.terminal = rest_cert.terminal;
        cert.ok = true;
    } catch (const StepFailure& e) {
        cert.ok = false;
        cert.failure = e.what();
    }
    return cert;
}

std::pair<i64, i64> algorithm_A(i64 t, i64 k, Certificate* cert) {
    if (k < 4) throw std::invalid_argument("algorithm_A: k too small");
    if (t < 0 || 3 * t > 2 * k) throw std::invalid_argument("algorithm_A: needs 3t <= 2k");
    const i64 d = 2 * u_of(k) - 2 * t;
    if (d < 0) throw std::invalid_argument("algorithm_A: negative double count");
    Configuration c;
    c.k = k;
    c.doubles = d;
    c.triples = t;
    c.rem = Remainder{int(rho_of(k)), false};
    Certificate local;
    Certificate& target = cert ? *cert : local;
    Step s1, s2;
    c = standard_step(c, &s1);
    if (s1.params.at("g") != t)
        throw StepFailure("algorithm_A", "first step did not consume every triple");
    target.steps.push_back(s1);
    c = standard_step(c, &s2);
    target.steps.push_back(s2);
    if (c.c12 != 0 || c.c13 != 0 || c.c23 != 0 || c.triples != 0)
        throw StepFailure("algorithm_A", "residue is not a chunk plus doubles");
    return {c.chunk, c.doubles};
}

Configuration algorithm_C(i64 t, i64 k, Certificate* cert) {
    if (k < 4) throw std::invalid_argument("algorithm_C: k too small");
    if (3 * t <= 2 * k) throw std::invalid_argument("algorithm_C: needs 3t > 2k");
    const i64 d = 2 * u_of(k) - 2 * t;
    if (d < 0) throw std::invalid_argument("algorithm_C: negative double count");
    Configuration c;
    c.k = k;
    c.doubles = d;
    c.triples = t;
    c.rem = Remainder{int(rho_of(k)), false};
    Step st;
    Configuration out = standard_step(c, &st);
    if (st.params.at("r") != 0 || st.params.at("s") != 0)
        throw StepFailure("algorithm_C", "step was not triple-only");
    if (cert) cert->steps.push_back(st);
    return out;
}

namespace {

void settle_by_split_once(Certificate& cert, Configuration c) {
    const i64 k = c.k, d = c.doubles;
    StepChoice first;
    first.r = k; // k doubles specialized wholly onto the conic
    Step s1;
    c = standard_step(c, &s1, &first);
    cert.steps.push_back(s1);

    const i64 rem_needed = 2 * (k - 2) - k - 2 * (d - k);
    if (rem_needed < 0) throw StepFailure("conic_split", "double slides overflow the trace");
    StepChoice second;
    second.r = d - k;
    second.g = rem_needed / 3;
    if (rem_needed % 3 == 2) second.n = 1;
    else if (rem_needed % 3 == 1) second.p = 1;
    Step s2;
    c = standard_step(c, &s2, &second);
    cert.steps.push_back(s2);
    if (!try_terminal(cert, c))
        throw StepFailure("conic_split", "descended column configuration is not settled");
}

void settle_by_split_twice(Certificate& cert, Configuration c) {
    const i64 k = c.k, d = c.doubles;
    StepChoice first;
    first.r = k;
    Step s1;
    c = standard_step(c, &s1, &first);
    cert.steps.push_back(s1);

    const i64 m = (k - 4) / 2, l = (k - 4) % 2;
    StepChoice second;
    second.r = m;
    second.s = l;
    Step s2;
    c = standard_step(c, &s2, &second);
    cert.steps.push_back(s2);

    const i64 rest = d - k - m - l;
    const i64 rem_needed = 2 * (k - 4) - (m + 2 * l) - 2 * rest;
    if (rest < 0 || rem_needed < 0)
        throw StepFailure("conic_split", "double slides overflow the trace");
    StepChoice third;
    third.r = rest;
    third.g = rem_needed / 3;
    if (rem_needed % 3 == 2) third.n = 1;
    else if (rem_needed % 3 == 1) third.p = 1;
    Step s3;
    c = standard_step(c, &s3, &third);
    cert.steps.push_back(s3);
    if (!try_terminal(cert, c))
        throw StepFailure("conic_split", "descended column configuration is not settled");
}

void settle_X(Certificate& cert, Configuration c) {
    for (;;) {
        if (try_terminal(cert, c)) return;
        const i64 k = c.k, d = c.doubles;
        if (d % 2 != 0) throw StepFailure("settle", "odd double count on the X track");
        if (k < 12) throw StepFailure("settle", "X track below degree 12");

        if (d <= k) {
            Configuration z = c;
            z.doubles = 0;
            z.c12 = d;
            push_step(cert, "doubles_onto_conic", c, z, {{"moved", d}});
            if (!try_terminal(cert, z))
                throw StepFailure("settle", "column configuration is not settled");
            return;
        }
        if (k >= 16 && d <= k + (k - 4) / 2) {
            settle_by_split_once(cert, c);
            return;
        }
        if (k >= 18 && d < 2 * k - 4) {
            settle_by_split_twice(cert, c);
            return;
        }
        if (k >= 18) {
            const i64 h = k / 6;
            const i64 nb = n_bar(d, k);
            const i64 n = (nb <= h - 3) ? nb : (h - 2);
            if (n < 1) throw StepFailure("settle", "no chain application available");
            c = double_chain(c, n, &cert);
            continue;
        }
        // base degrees 12..17
        if (k == 17 && d >= 2 * k - 4) {
            c = double_chain(c, 1, &cert);
            cascade(cert, c);
            return;
        }
        cascade(cert, c);
        return;
    }
}

} // namespace

Certificate replay_X(i64 d, i64 t, i64 k, bool barred) {
    Certificate cert;
    cert.d = d;
    cert.t = t;
    cert.k = k;
    cert.p = barred ? 11 : rho_of(k);
    try {
        if (d < 0 || t < 0) throw StepFailure("replay", "negative counts");
        if (barred && k % 6 != 5) throw StepFailure("replay", "barred track needs k = 5 mod 6");
        Configuration c;
        c.k = k;
        c.doubles = d;
        c.triples = t;
        c.rem = Remainder{barred ? 11 : int(rho_of(k)), barred};
        if (c.total_length() != k * (k + 2))
            throw StepFailure("replay", "length is not k(k+2)");
        settle_X(cert, c);
    } catch (const StepFailure& e) {
        cert.ok = false;
        cert.failure = e.what();
    }
    return cert;
}

Certificate replay_H(i64 s, i64 d, i64 t, i64 p, i64 k) {
    Certificate cert;
    cert.s = s;
    cert.d = d;
    cert.t = t;
    cert.p = p;
    cert.k = k;
    try {
        if (!in_lambda_k(s, d, t, p, k))
            throw StepFailure("lambda_membership", "tuple is not in Lambda_k");
        if (k < 12) throw StepFailure("lambda_membership", "replay needs k >= 12");

        Configuration start;
        start.k = k;
        start.simples = s;
        start.doubles = d;
        start.triples = t;
        start.rem = Remainder{int(p), false};
        const i64 rho = rho_of(k);

        ReduceResult rr = reduce_simples(s, d, t, p, k);
        if (rr.merged_all_doubles) {
            Configuration merged = start;
            merged.simples = rr.sigma;
            merged.doubles = 0;
            merged.triples = rr.tau;
            push_step(cert, "simples_into_triples", start, merged,
                      {{"s_left", rr.sigma}, {"t_new", rr.tau}});
            Configuration absorbed = merged;
            absorbed.simples = 0;
            absorbed.rem = Remainder{int(rho), false};
            push_step(cert, "absorb_into_remainder", merged, absorbed,
                      {{"simples", rr.sigma}, {"from_p", p}, {"to_p", rho}});
            if (!try_terminal(cert, absorbed))
                throw StepFailure("settle", "merged configuration is not the B form");
            return cert;
        }

        Configuration merged = start;
        merged.simples = rr.sigma;
        merged.doubles = rr.delta;
        merged.triples = rr.tau;
        push_step(cert, "doubles_into_triples", start, merged,
                  {{"sigma", rr.sigma}, {"delta", rr.delta}, {"tau", rr.tau}, {"j", rr.j}});

        Configuration xform = merged;
        if (rr.barred) {
            xform.simples = 0;
            xform.doubles = rr.d;
            xform.rem = Remainder{11, true};
            push_step(cert, "route_barred_remainder", merged, xform,
                      {{"d", rr.d}, {"t", rr.t}});
        } else {
            xform.simples = 0;
            xform.doubles = rr.d;
            xform.rem = Remainder{int(rho), false};
            push_step(cert, "absorb_into_remainder", merged, xform,
                      {{"simples", rr.sigma}, {"doubles", rr.j}, {"from_p", p}, {"to_p", rho}});
        }
        settle_X(cert, xform);
    } catch (const StepFailure& e) {
        cert.ok = false;
        cert.failure = e.what();
    } catch (const std::exception& e) {
        cert.ok = false;
        cert.failure = e.what();
    }
    return cert;
}

const std::vector<BarredBase>& barred_base_list() {
    static const std::vector<BarredBase> list = {
        {0, 9, 0, 1, 2}, {1, 5, 0, 0, 3}, {1, 6, 0, 1, 2}, {1, 7, 1, 0, 2},
        {2, 2, 0, 0, 3}, {2, 3, 0, 1, 2}, {2, 4, 1, 0, 2}, {3, 5, 0, 0, 2},
        {4, 2, 0, 0, 2}, {4, 3, 0, 1, 1}, {1, 1, 1, 0, 3},
    };
    return list;
}

Certificate replay_barred_base(const BarredBase& scheme) {
    Certificate cert;
    cert.k = 7;
    cert.p = 11;
    try {
        Configuration c;
        c.k = 7;
        c.c12 = scheme.b;
        c.chunk = scheme.c;
        c.c13 = scheme.d;
        c.c23 = scheme.e;
        c.triples = scheme.f;
        c.rem = Remainder{11, true};
        if (c.total_length() != 63)
            throw StepFailure("replay", "base scheme length is not 63");
        cascade(cert, c);
    } catch (const StepFailure& e) {
        cert.ok = false;
        cert.failure = e.what();
    }
    return cert;
}

std::vector<LambdaTuple> enumerate_lambda(i64 k) {
    std::vector<LambdaTuple> out;
    const i64 total = k * (k + 2);
    const i64 rho = rho_of(k);
    for (i64 p : {0, 1, 2, 3, 5, 8, 11}) {
        if (p > rho) continue;
        for (i64 t = 0; 12 * t + p <= total; ++t)
            for (i64 d = 0; 6 * d + 12 * t + p <= total; ++d) {
                const i64 rest = total - 6 * d - 12 * t - p;
                if (rest % 2 != 0) continue;
                out.push_back({rest / 2, d, t, p});
            }
    }
    return out;
}

} // namespace ledger
} // namespace fatpoints
