#pragma once

#include "core/closed_forms.hpp"
#include "core/engine.hpp"
#include "core/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace dominion {

enum class EngineChoice { search, oracle };

enum class VerifyOutcome {
    ok,                  // engine ran, formula agreed
    mismatch,            // engine ran, formula disagreed
    skipped,             // instance over the chosen engine's capacity
    timeout,             // per-instance budget exhausted
    engine_disagreement, // search engine and reference check disagree (bug)
};

struct VerificationRecord {
    std::string family; // instance label in the family grammar, e.g. "path:7"
    int n = 0;          // vertex count of the instance
    int formula_gamma = 0;
    int engine_gamma = 0;
    u128 formula_zeta = 0;
    u128 engine_zeta = 0;
    ProofStatus status = ProofStatus::proven;
    VerifyOutcome outcome = VerifyOutcome::skipped;
    bool match = false; // formula == engine on both gamma and zeta
    std::int64_t elapsed_ms = 0;
    std::string note; // detail for skipped/timeout/disagreement rows
};

struct VerifyOptions {
    EngineChoice engine = EngineChoice::search;
    std::int64_t budget_ms = 0; // per instance; 0 = unlimited, negative = already expired
    int threads = 0;            // 0 = machine parallelism
    int search_max_n = 40;      // branch-and-bound size guard
};

// Per-family sweeps: one record per instance, in parameter order. Instances
// run concurrently; record order is independent of completion order. The
// chosen engine is always cross-checked against the other one when the
// instance fits its capacity, and a disagreement is reported as a fatal
// outcome of its own.
std::vector<VerificationRecord> verify_paths(int lo, int hi, const VerifyOptions& opts = {});
std::vector<VerificationRecord> verify_cycles(int lo, int hi, const VerifyOptions& opts = {});
std::vector<VerificationRecord> verify_suns(int lo, int hi, const VerifyOptions& opts = {});

// all sorted part vectors with 2 or 3 parts, sizes 1..4, total <= max_total
std::vector<VerificationRecord> verify_multipartite(int max_total, const VerifyOptions& opts = {});

// the fixed deterministic batch of random connected join pairs
std::vector<VerificationRecord> verify_joins(const VerifyOptions& opts = {});

// everything above with family-appropriate ranges derived from max_n
std::vector<VerificationRecord> verify_families_suite(int max_n, const VerifyOptions& opts = {});

// engine vs conjectured cycle values for 4 <= n <= max_n, n not divisible by 3
std::vector<VerificationRecord> verify_cycle_conjecture(int max_n, const VerifyOptions& opts = {});

// 0 = all good; 1 = a proven formula mismatched or the engines disagreed;
// 5 = only conjectured formulas mismatched
int exit_class(const std::vector<VerificationRecord>& records);

std::string conjecture_summary(const std::vector<VerificationRecord>& records);

// G(n, p) with a deterministic bit source (stable across platforms)
Graph random_graph(int n, double edge_prob, std::mt19937_64& rng);

// 40 deterministic connected pairs with n1+n2 <= 16 covering every case of
// the join dominion theorem (gamma pairs (1,1), (1,>=2), (2,2), (2,>=3),
// (>=3,>=3)) at least three times each
std::vector<std::pair<Graph, Graph>> join_verification_pairs();

} // namespace dominion
