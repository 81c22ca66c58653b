// experiment.hpp -- batch trial runner: strategy x codemaker x n grid,
// seeded trials, per-phase query counts, CSV rows for scaling plots

#pragma once

#include "mastermind/codemaker.hpp"
#include "mastermind/harness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mastermind {

struct ExperimentConfig {
    std::string strategy = "size-two";  // size-one | size-two | unrestricted | rls
    std::string codemaker = "random";   // fixed | random | devil
    std::vector<int> n_grid = {64};
    int k = 2;
    std::size_t mu = 0; // 0: strategy default
    int trials = 1;
    std::uint64_t base_seed = 1;
    double epsilon = 1.0;
    double big_k = 10.0;
    std::optional<int> block_size;
    std::size_t query_cap = 0; // 0: 50 * n
    std::optional<std::string> secret_text; // required by the fixed codemaker
    int workers = 1;
    std::uint64_t devil_budget = DevilCodemaker::default_candidate_budget;

    void validate() const;
};

struct TrialRecord {
    int n = 0;
    int k = 2;
    std::string strategy;
    std::string codemaker;
    std::size_t mu = 1;
    std::uint64_t seed = 0;
    std::size_t queries = 0;
    std::array<std::uint64_t, 4> phase_queries{};
    bool won = false;
};

struct CellSummary {
    int n = 0;
    int k = 2;
    std::string strategy;
    int trials = 0;
    bool skipped = false;
    std::string skip_reason;
    std::string layout_description;
    double mean_queries = 0.0;
    double median_queries = 0.0;
    std::size_t max_queries = 0;
    double normalized = 0.0; ///< mean * log2(n) / n
    bool all_won = true;
};

struct GridResult {
    std::vector<TrialRecord> records;
    std::vector<CellSummary> cells;
    bool all_won = true;
};

/// Builds fresh strategy instances for the named strategy.  The layout for
/// the encoding strategies is computed once up front.
StrategyFactory make_strategy_factory(const std::string &name, const GameParams &params,
                                      double eps, double big_k,
                                      std::optional<int> block_size);

/// The memory capacity a strategy requires (size-one: 1, size-two: 2,
/// unrestricted: t + 1, rls: 1).
std::size_t default_mu(const std::string &strategy, const GameParams &params, double eps);

/// Runs the full grid.  Deterministic given the base seed: per-trial seeds
/// derive from hash(base seed, n, k, trial).  Cells whose layout or budget
/// is infeasible are reported as skipped and the run continues.
GridResult run_grid(const ExperimentConfig &config);

/// Fixed-schema CSV: n,k,strategy,codemaker,mu,seed,queries,phase0,phase1,
/// phase2,phase3,won.  Byte-identical for identical configs.
std::string to_csv(const std::vector<TrialRecord> &records);

/// Human-readable per-cell summary (layout header, mean/median/max,
/// normalized statistic).
std::string summary_text(const GridResult &result);

} // namespace mastermind
