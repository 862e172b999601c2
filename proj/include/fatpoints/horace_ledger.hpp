#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/numerics.hpp"

// Symbolic certificate checker for the inductive conic (Horace) reductions.
// Configurations on the projectivized cotangent bundle are tracked as pure
// length bookkeeping: pullbacks of simple/double/triple points count 2/6/12,
// a column over the conic counts twice its trace sum, and the remainder
// scheme R_p counts p.  Every reduction step must fill the conic trace to
// exactly 2k and conserve total length; certificates terminate at a closed
// axiom table.

namespace fatpoints {
namespace ledger {

// Remainder scheme of length p; barred is the variant that unpacks into a
// double-point pullback plus R_5 (only p = 11).
struct Remainder {
    int p = 0;
    bool barred = false;

    i64 length() const { return p; }
};

// Column over the conic, entries bottom-up; the bottom entry is the trace
// it forces on the next conic step, the bundle length is twice the sum.
struct ColumnScheme {
    std::vector<int> entries;
    i64 trace() const { return entries.empty() ? 0 : entries.front(); }
    i64 length() const {
        i64 s = 0;
        for (int e : entries) s += e;
        return 2 * s;
    }
    bool admissible() const; // (h), (1;2), (1;3), (2;3), (2;2) or (1;2;3)
};

struct Configuration {
    i64 k = 0;
    i64 simples = 0; // general simple pullbacks, length 2
    i64 doubles = 0; // general double pullbacks, length 6
    i64 triples = 0; // general triple pullbacks, length 12
    // on the conic:
    i64 chunk = 0; // merged simple trace units, length 2 each
    i64 c12 = 0;   // (1;2) columns, length 6
    i64 c13 = 0;   // (1;3) columns, length 8
    i64 c23 = 0;   // (2;3) columns, length 10
    bool r5_on_conic = false; // deployed remainder column (2 plus bundle point), length 5
    bool bundle_point = false; // a single point of the bundle, length 1
    Remainder rem;

    i64 total_length() const;
    i64 conic_trace() const; // forced trace of the on-conic part
    // multiset view of the on-conic part as column schemes
    std::vector<ColumnScheme> conic_columns() const;
    std::string describe() const;
};

struct Step {
    std::string rule;
    i64 k_before = 0;
    i64 k_after = 0;
    std::map<std::string, i64> params;
    i64 length_before = 0;
    i64 length_after = 0;
    std::string state_after;
    std::optional<std::string> axiom; // set on the terminal step
};

struct Certificate {
    i64 s = 0, d = 0, t = 0, p = 0, k = 0; // the replayed tuple, when applicable
    std::vector<Step> steps;
    std::string terminal; // axiom id, empty on failure
    bool ok = false;
    std::string failure; // failing rule and reason
};

// ---- membership and tuple choosers ----

bool in_delta_k(i64 s, i64 d, i64 p, i64 k);
bool in_lambda_k(i64 s, i64 d, i64 t, i64 p, i64 k);

struct DeltaTuple {
    i64 s = 0, d = 0, p = 0;
};
// Tuple in Delta_{k-1} embedding in the pullback of a simple/double union
// with counts (a, b).  Requires (k-1)(k+1) < 2a+6b.
DeltaTuple choose_delta_subtuple(i64 a, i64 b, i64 k);

struct LambdaTuple {
    i64 s = 0, d = 0, t = 0, p = 0;
};
// Tuple in Lambda_k containing the pullback of (a, b, c) componentwise.
// Requires 2a+6b+12c <= k(k+2).
LambdaTuple choose_lambda_supertuple(i64 a, i64 b, i64 c, i64 k);

// ---- reduction rules ----

struct ReduceResult {
    bool merged_all_doubles = false; // branch that lands directly on the B-form
    // X-track result: d doubles, t triples, remainder (rho or barred)
    i64 d = 0, t = 0;
    bool barred = false;
    // intermediate values, recorded in certificates
    i64 sigma = 0, delta = 0, tau = 0, j = 0;
};
// Eliminates general simple pullbacks from a Lambda_k tuple by merging
// them (with doubles) into triples; flags the barred track when the
// leftover is a double plus R_5.
ReduceResult reduce_simples(i64 s, i64 d, i64 t, i64 p, i64 k);

// Forced parameter choice for one conic step (overrides the greedy rule).
struct StepChoice {
    i64 g = 0, n = 0, p = 0;  // triple slices of size 3 / 2 / 1
    i64 r = 0, s = 0;         // double slices of size 2 / 1
    i64 simples_on_conic = 0; // general simples consumed, size 1 each
    i64 remainder_slice = 0;  // 3 for R_11/R_8, 2 for R_5, 0 for none
};

// One conic step k -> k-2.  Fills the trace to exactly 2k (greedy: triples,
// then doubles, then simples, with the degree-triggered remainder slices),
// checks length conservation, and returns the residue configuration.
Configuration standard_step(const Configuration& conf, Step* recorded = nullptr,
                            const StepChoice* forced = nullptr);

// Two-step reduction of d = 2u(k)-2t doubles and t triples; returns the
// (w, q) pair of the residue two degrees down: a chunk of w
// points on the conic plus q general doubles.  Requires 3t <= 2k.
std::pair<i64, i64> algorithm_A(i64 t, i64 k, Certificate* cert = nullptr);

// Single triple-only step, applicable whenever 3t > 2k.
Configuration algorithm_C(i64 t, i64 k, Certificate* cert = nullptr);

// n stacked conic reductions k -> k-6n, each consuming 2k_i - 4 doubles
// with trace counts 2k_i, 2k_i-4, 2k_i-8.  Validates and appends to cert.
Configuration double_chain(const Configuration& conf, i64 n, Certificate* cert);

// Wrapper form: verifies one chain application at degree k around an
// already-certified rest configuration.
Certificate double_chain_compose(i64 k, i64 n, const Configuration& rest,
                                const Certificate& rest_cert);

// ---- replay driver ----

// Machine-checked certificate that the tuple (s,d,t,p) in Lambda_k imposes
// independent conditions, k >= 12.  Never assumes a side condition: any
// violation aborts with the failing step recorded.
Certificate replay_H(i64 s, i64 d, i64 t, i64 p, i64 k);

// Replays the X(d,t,k) / barred track directly (d even, 6d+12t+rem = k(k+2)).
Certificate replay_X(i64 d, i64 t, i64 k, bool barred);

// The eleven barred degree-7 base configurations, replayed down to the
// one-settled terminal.  Index 0..10.
struct BarredBase {
    i64 b, c, d, e, f;
};
const std::vector<BarredBase>& barred_base_list();
Certificate replay_barred_base(const BarredBase& scheme);

// ---- axiom table ----

struct AxiomInfo {
    std::string id;
    std::string applicability;
    std::string description;
};
const std::vector<AxiomInfo>& axiom_table();

bool axiom_A_applicable(i64 k);       //  k == 1 or k >= 4
bool axiom_B_applicable(i64 k);       //  k >= 10
// Settledness of the column-scheme configurations (b,c,d,e,f | rem p | k).
bool axiom_settled_applicable(i64 b, i64 c, i64 d, i64 e, i64 f, i64 p, i64 k, bool barred);

// Full enumeration of Lambda_k (used by sweeps and tests).
std::vector<LambdaTuple> enumerate_lambda(i64 k);

} // namespace ledger
} // namespace fatpoints
