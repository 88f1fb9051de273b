#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wqmc/json_writer.hpp"

namespace wqmc {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;
    std::vector<int> criteria; // empty = all (ids 1..9)
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    // Soft warning that does not fail the criterion (e.g. a statistical bound
    // holding with less than 5% headroom).
    bool flagged = false;
    JsonValue details;    // object; deterministic content only, no timings
    double seconds = 0.0; // wall clock, never serialized into reports
};

// Runs the built-in verification criteria in id order. Each criterion is an
// independent end-to-end check of one headline property of the library
// (exact character sums, exponential-sum bounds, worst-case error bounds,
// randomized mean error, lower-bound constructions, frequency-set search,
// dual-path consistency).
std::vector<CriterionResult> run_verification(const VerifyOptions& options);

// Deterministic JSON report: identical options produce identical bytes.
JsonValue verification_report(const std::vector<CriterionResult>& results,
                              const VerifyOptions& options);

} // namespace wqmc
