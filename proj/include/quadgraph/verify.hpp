#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "quadgraph/json_io.hpp"

namespace quadgraph {

enum class ClaimStatus { Pass, Fail, Skip };

struct ClaimResult {
    std::string id;
    ClaimStatus status = ClaimStatus::Skip;
    std::string expected;
    std::string observed;
    std::string detail;  // free-form; skip reason when skipped
    ordered_json extra;  // structured payload (histograms, ratios, ...)
};

struct VerifyOptions {
    LoopPolicy loop_policy = LoopPolicy::Include;
    size_t eig_cap = 5000;
    std::uint64_t clique_budget = 50'000'000;
    int gap_trials = 200;
    std::uint64_t seed = 12345;
    size_t arc_cap = 20000;
    std::optional<std::filesystem::path> cache_dir;
    unsigned threads = 0;
    /// Lemma-6 bijections are checked for every vertex up to this vertex
    /// count; above it, a deterministic sample (documented in the report).
    size_t lemma6_full_limit = 2000;
};

struct VerifyRun {
    int n = 0, k = 0;
    long long q = 0;
    std::vector<ClaimResult> claims;
    bool all_passed() const;
};

/// Run the whole claim registry for one (n, k, q) instance. Every claim id
/// appears exactly once; inapplicable claims come back as Skip with a reason.
VerifyRun verify_all(int n, int k, const FieldRef& spec, const VerifyOptions& opt = {});

ordered_json verify_run_to_json(const VerifyRun& run, const VerifyOptions& opt);

const char* to_string(ClaimStatus s);

}  // namespace quadgraph
