#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatpoints/scheme_model.hpp"

// Minimal generator and first-syzygy counts from exact ranks of the
// multiplication maps I(k-1) (x) <x,y,z> -> I(k), compared against the
// expected resolution.

namespace fatpoints {

// Raised when an instance fails to stabilize inside the degree caps; the
// trial is reported as degenerate, not fatal.
struct DegenerateTrialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GradedPiece {
    i64 k = 0;
    i64 h0 = 0;      // dim I(k)
    i64 mu_rank = 0; // rank of multiplication from degree k-1
    i64 gens = 0;    // h0 - mu_rank
};

struct TrialReport {
    std::uint64_t seed = 0;
    std::string scheme_lines;            // "m:x:y" serialization
    std::map<i64, i64> hilbert;          // degree -> h0 (computed range)
    std::vector<GradedPiece> pieces;
    std::map<i64, i64> syzygies;         // degree -> minimal first syzygies
    bool hf_maximal = false;
    bool matches_expected = false;
    bool degenerate = false;
    std::string note;
    bool identity_ok = true;             // 3 h0(k) - h0(k+1) = k(k+2) - 2l on regular degrees
};

struct BettiReport {
    i64 a = 0, b = 0, c = 0;
    i64 length = 0;
    std::uint64_t prime = kDefaultPrime;
    ExpectedResolution expected;
    std::vector<TrialReport> trials;
    bool aggregate_matches = false;  // majority over non-degenerate trials
    bool aggregate_hf_maximal = false;
};

// Rank of the map sending (f, L) -> L f from degree k-1 into degree k.
i64 mu_rank(const SupportedScheme& scheme, i64 k);

// Generator counts per degree from v_of(length) up to stabilization.
// Hard cap at v+4 (DegenerateTrialError beyond it).
std::vector<GradedPiece> generators_per_degree(const SupportedScheme& scheme);

// Minimal first syzygies per degree of the computed generators, cap v+5.
std::map<i64, i64> syzygies_per_degree(const SupportedScheme& scheme,
                                       const std::vector<GradedPiece>& pieces);

// Full pipeline over the given seeds with majority verdict.
BettiReport verify_expected(i64 a, i64 b, i64 c, const std::vector<std::uint64_t>& seeds,
                            std::uint64_t prime = kDefaultPrime, bool with_syzygies = false);

// Single-scheme trial (used for replaying serialized instances).
TrialReport run_trial(const SupportedScheme& scheme, const ExpectedResolution& expected,
                      bool with_syzygies);

} // namespace fatpoints
