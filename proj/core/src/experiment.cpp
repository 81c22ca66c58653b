#include "mastermind/experiment.hpp"

#include "mastermind/errors.hpp"
#include "mastermind/strategies/rls.hpp"
#include "mastermind/strategies/size_one.hpp"
#include "mastermind/strategies/size_two.hpp"
#include "mastermind/strategies/unrestricted.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace mastermind {

void ExperimentConfig::validate() const
{
    static const char *strategies[] = {"size-one", "size-two", "unrestricted", "rls"};
    if (std::find(std::begin(strategies), std::end(strategies), strategy) ==
        std::end(strategies))
        throw std::invalid_argument("ExperimentConfig: unknown strategy " + strategy);
    static const char *codemakers[] = {"fixed", "random", "devil"};
    if (std::find(std::begin(codemakers), std::end(codemakers), codemaker) ==
        std::end(codemakers))
        throw std::invalid_argument("ExperimentConfig: unknown codemaker " + codemaker);
    if (codemaker == "fixed" && !secret_text)
        throw std::invalid_argument("ExperimentConfig: fixed codemaker needs a secret");
    if (n_grid.empty())
        throw std::invalid_argument("ExperimentConfig: empty n grid");
    if (trials < 0)
        throw std::invalid_argument("ExperimentConfig: negative trial count");
}

StrategyFactory make_strategy_factory(const std::string &name, const GameParams &params,
                                      double eps, double big_k,
                                      std::optional<int> block_size)
{
    if (name == "rls")
        return [params]() { return std::make_unique<RlsStrategy>(params); };
    if (name == "unrestricted")
        return [params, eps]() { return std::make_unique<UnrestrictedStrategy>(params, eps); };
    if (name == "size-two") {
        auto layout = LayoutParams::size_two(params, eps, block_size);
        return [params, layout]() { return std::make_unique<SizeTwoStrategy>(params, layout); };
    }
    if (name == "size-one") {
        auto layout = LayoutParams::size_one(params, eps, big_k, block_size);
        return [params, layout]() { return std::make_unique<SizeOneStrategy>(params, layout); };
    }
    throw std::invalid_argument("make_strategy_factory: unknown strategy " + name);
}

std::size_t default_mu(const std::string &strategy, const GameParams &params, double eps)
{
    if (strategy == "size-one" || strategy == "rls")
        return 1;
    if (strategy == "size-two")
        return 2;
    if (strategy == "unrestricted")
        return static_cast<std::size_t>(theorem_three_t(params.n, params.k, eps)) + 1;
    throw std::invalid_argument("default_mu: unknown strategy " + strategy);
}

namespace {

std::unique_ptr<Codemaker> make_codemaker(const ExperimentConfig &config,
                                          const GameParams &params, RandomStream &rng)
{
    if (config.codemaker == "fixed")
        return std::make_unique<FixedCodemaker>(
            params, code_from_text(*config.secret_text, params.k));
    if (config.codemaker == "random") {
        auto stream = rng.split(0x5ec7e7);
        return std::make_unique<RandomCodemaker>(params, stream);
    }
    return std::make_unique<DevilCodemaker>(params, config.devil_budget);
}

std::string layout_header(const std::string &strategy, const GameParams &params,
                          const ExperimentConfig &config)
{
    if (strategy == "size-two")
        return LayoutParams::size_two(params, config.epsilon, config.block_size).describe();
    if (strategy == "size-one")
        return LayoutParams::size_one(params, config.epsilon, config.big_k, config.block_size)
            .describe();
    if (strategy == "unrestricted") {
        std::ostringstream out;
        out << "layout=unrestricted t=" << theorem_three_t(params.n, params.k, config.epsilon);
        return out.str();
    }
    return "layout=rls";
}

} // namespace

GridResult run_grid(const ExperimentConfig &config)
{
    config.validate();
    GridResult result;

    for (int n : config.n_grid) {
        const GameParams params{n, config.k};
        CellSummary cell;
        cell.n = n;
        cell.k = config.k;
        cell.strategy = config.strategy;
        cell.trials = config.trials;

        StrategyFactory factory;
        std::size_t mu = config.mu;
        try {
            params.validate();
            factory = make_strategy_factory(config.strategy, params, config.epsilon,
                                            config.big_k, config.block_size);
            if (mu == 0)
                mu = default_mu(config.strategy, params, config.epsilon);
            cell.layout_description = layout_header(config.strategy, params, config);
            // admissibility of the (strategy, mu) pairing
            auto probe = factory();
            if (mu < probe->memory_requirement())
                throw std::invalid_argument("mu below the strategy's requirement");
            if ((config.strategy == "size-one" && mu != 1) ||
                (config.strategy == "size-two" && mu != 2))
                throw std::invalid_argument("fixed-memory strategy run with a different mu");
            if (config.codemaker == "devil") {
                // construction enforces the candidate budget
                (void)DevilCodemaker(params, config.devil_budget);
            }
        } catch (const std::exception &error) {
            cell.skipped = true;
            cell.skip_reason = error.what();
            result.cells.push_back(std::move(cell));
            continue;
        }

        const std::size_t query_cap =
            config.query_cap ? config.query_cap : static_cast<std::size_t>(50) * n;

        std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
        std::atomic<int> next_trial{0};
        auto worker = [&]() {
            for (;;) {
                const int trial = next_trial.fetch_add(1);
                if (trial >= config.trials)
                    return;
                const std::uint64_t seed = derive_seed(config.base_seed, n, config.k, trial);
                RandomStream rng(seed);
                auto codemaker_rng = rng.split(0xc0de);
                auto codemaker = make_codemaker(config, params, codemaker_rng);
                auto strategy = factory();
                GameTranscript transcript =
                    run_game(*strategy, *codemaker, params, mu, query_cap, rng.split(0x9a3e));

                TrialRecord record;
                record.n = n;
                record.k = config.k;
                record.strategy = config.strategy;
                record.codemaker = config.codemaker;
                record.mu = mu;
                record.seed = seed;
                record.queries = transcript.queries.size();
                record.phase_queries = transcript.phase_queries;
                record.won = transcript.won();
                records[static_cast<std::size_t>(trial)] = std::move(record);
            }
        };

        const int thread_count = std::max(1, std::min(config.workers, config.trials));
        if (thread_count <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(thread_count));
            for (int i = 0; i < thread_count; ++i)
                pool.emplace_back(worker);
            for (auto &thread : pool)
                thread.join();
        }

        if (!records.empty()) {
            std::vector<std::size_t> counts;
            counts.reserve(records.size());
            for (const auto &record : records) {
                counts.push_back(record.queries);
                cell.all_won = cell.all_won && record.won;
                result.all_won = result.all_won && record.won;
            }
            std::sort(counts.begin(), counts.end());
            double total = 0.0;
            for (std::size_t c : counts)
                total += static_cast<double>(c);
            cell.mean_queries = total / static_cast<double>(counts.size());
            cell.median_queries =
                counts.size() % 2
                    ? static_cast<double>(counts[counts.size() / 2])
                    : (static_cast<double>(counts[counts.size() / 2 - 1]) +
                       static_cast<double>(counts[counts.size() / 2])) /
                          2.0;
            cell.max_queries = counts.back();
            cell.normalized = cell.mean_queries * std::log2(double(n)) / n;
        }
        result.cells.push_back(std::move(cell));
        for (auto &record : records)
            result.records.push_back(std::move(record));
    }
    return result;
}

std::string to_csv(const std::vector<TrialRecord> &records)
{
    std::ostringstream out;
    out << "n,k,strategy,codemaker,mu,seed,queries,phase0,phase1,phase2,phase3,won\n";
    for (const auto &r : records) {
        out << r.n << ',' << r.k << ',' << r.strategy << ',' << r.codemaker << ',' << r.mu
            << ',' << r.seed << ',' << r.queries;
        for (auto count : r.phase_queries)
            out << ',' << count;
        out << ',' << (r.won ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string summary_text(const GridResult &result)
{
    std::ostringstream out;
    for (const auto &cell : result.cells) {
        out << "cell n=" << cell.n << " k=" << cell.k << " strategy=" << cell.strategy;
        if (cell.skipped) {
            out << " skipped: " << cell.skip_reason << "\n";
            continue;
        }
        out << " trials=" << cell.trials;
        if (cell.trials > 0) {
            out << " mean=" << cell.mean_queries << " median=" << cell.median_queries
                << " max=" << cell.max_queries << " norm=" << cell.normalized
                << " all_won=" << (cell.all_won ? 1 : 0);
        }
        out << "\n  " << cell.layout_description << "\n";
    }
    return out.str();
}

} // namespace mastermind
