// main.cpp -- command line simulator: batch grids with CSV output, plus an
// interactive mode where a human answers at the prompt

#include "mastermind/consistent.hpp"
#include "mastermind/errors.hpp"
#include "mastermind/experiment.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace mastermind;

/// Oracle backed by a person at the terminal.  Answers are range-checked;
/// when k^n is small enough, every reply is also checked against the set of
/// codes consistent with the history, and a contradiction aborts the game
/// with the violated constraints printed.
class InteractiveCodemaker : public Codemaker {
public:
    explicit InteractiveCodemaker(GameParams params, std::uint64_t budget)
      : params_(params)
    {
        try {
            consistent_ = all_codes(params_, budget);
            std::cout << "(consistency checking enabled: " << consistent_->size()
                      << " candidate codes)\n";
        } catch (const EnumerationBudgetError &) {
            std::cout << "(k^n too large for consistency checking)\n";
        }
    }

    std::string name() const override { return "interactive"; }

    Answer answer(const CodeString &guess) override
    {
        std::cout << "guess " << history_.size() + 1 << ": " << to_text(guess, params_.k)
                  << "\nblack pegs? " << std::flush;
        int black = -1;
        for (;;) {
            std::string line;
            if (!std::getline(std::cin, line))
                throw std::runtime_error("interactive: input closed");
            try {
                black = std::stoi(line);
            } catch (...) {
                black = -1;
            }
            if (black >= 0 && black <= params_.n)
                break;
            std::cout << "please enter an integer in [0.." << params_.n << "]: " << std::flush;
        }
        history_.push_back({guess, black});
        if (consistent_) {
            std::vector<CodeString> kept;
            for (auto &candidate : *consistent_)
                if (eq(candidate, guess) == black)
                    kept.push_back(std::move(candidate));
            if (kept.empty()) {
                std::cout << "your answers are contradictory; no code matches all of:\n";
                for (const auto &[g, b] : history_)
                    std::cout << "  " << to_text(g, params_.k) << " -> " << b << "\n";
                throw std::runtime_error("interactive: inconsistent answers");
            }
            *consistent_ = std::move(kept);
        }
        return Answer{black, std::nullopt};
    }

private:
    GameParams params_;
    std::optional<std::vector<CodeString>> consistent_;
    std::vector<std::pair<CodeString, int>> history_;
};

int interactive_game(const ExperimentConfig &config)
{
    const GameParams params{config.n_grid.front(), config.k};
    params.validate();
    auto factory = make_strategy_factory(config.strategy, params, config.epsilon,
                                         config.big_k, config.block_size);
    const std::size_t mu =
        config.mu ? config.mu : default_mu(config.strategy, params, config.epsilon);
    const std::size_t cap =
        config.query_cap ? config.query_cap : static_cast<std::size_t>(50) * params.n;

    auto strategy = factory();
    InteractiveCodemaker codemaker(params, config.devil_budget);
    std::cout << "playing " << config.strategy << " with mu=" << mu << " on n=" << params.n
              << " k=" << params.k << "; answer each guess with its black-peg count\n";
    try {
        GameTranscript transcript =
            run_game(*strategy, codemaker, params, mu, cap, RandomStream(config.base_seed));
        if (transcript.won()) {
            std::cout << "code found: "
                      << to_text(transcript.queries.back().guess, params.k) << " after "
                      << transcript.queries.size() << " guesses\n";
            return 0;
        }
        std::cout << "query cap reached without a win\n";
        return 1;
    } catch (const std::runtime_error &error) {
        std::cout << error.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"memory-restricted Mastermind codebreaker simulator"};

    ExperimentConfig config;
    std::string codemaker = "random";
    std::string csv_path;
    std::string transcript_dir;

    app.add_option("--strategy", config.strategy,
                   "codebreaker: size-one, size-two, unrestricted, rls")
        ->default_val("size-two");
    app.add_option("--codemaker", codemaker,
                   "answerer: fixed, random, devil, interactive")
        ->default_val("random");
    app.add_option("--n", config.n_grid, "positions; a comma-separated grid is allowed")
        ->delimiter(',')
        ->default_val(std::vector<int>{64});
    app.add_option("--k", config.k, "colors")->default_val(2);
    app.add_option("--mu", config.mu, "memory capacity (0 = strategy default)")
        ->default_val(0);
    app.add_option("--trials", config.trials, "trials per grid cell")->default_val(1);
    app.add_option("--seed", config.base_seed, "base seed")->default_val(1);
    app.add_option("--epsilon", config.epsilon, "sample-count slack constant")
        ->default_val(1.0);
    app.add_option("--bigk", config.big_k, "head-room constant in the block-count bound")
        ->default_val(10.0);
    int block_size = 0;
    app.add_option("--block-size", block_size, "force the block length (0 = auto)")
        ->default_val(0);
    app.add_option("--query-cap", config.query_cap, "query cap per game (0 = 50n)")
        ->default_val(0);
    app.add_option("--csv", csv_path, "write trial records to this CSV file");
    std::string secret;
    app.add_option("--secret", secret, "secret code for the fixed codemaker");
    app.add_option("--workers", config.workers, "concurrent trials")->default_val(1);
    app.add_option("--devil-budget", config.devil_budget,
                   "candidate budget for the devil / interactive checker")
        ->default_val(mastermind::DevilCodemaker::default_candidate_budget);
    app.add_option("--transcript-dir", transcript_dir,
                   "write one transcript file per trial into this directory");

    CLI11_PARSE(app, argc, argv);

    if (block_size > 0)
        config.block_size = block_size;
    if (!secret.empty())
        config.secret_text = secret;

    if (codemaker == "interactive")
        return interactive_game(config);
    config.codemaker = codemaker;

    try {
        GridResult result = run_grid(config);
        std::cout << summary_text(result);
        if (!csv_path.empty()) {
            std::ofstream out(csv_path, std::ios::binary);
            out << to_csv(result.records);
            std::cout << "wrote " << result.records.size() << " rows to " << csv_path << "\n";
        }
        if (!transcript_dir.empty()) {
            std::filesystem::create_directories(transcript_dir);
            for (const auto &record : result.records) {
                // replay the trial to regenerate its transcript
                const GameParams params{record.n, record.k};
                auto factory = make_strategy_factory(config.strategy, params, config.epsilon,
                                                     config.big_k, config.block_size);
                RandomStream rng(record.seed);
                auto codemaker_rng = rng.split(0xc0de);
                std::unique_ptr<Codemaker> maker;
                if (config.codemaker == "fixed")
                    maker = std::make_unique<FixedCodemaker>(
                        params, code_from_text(*config.secret_text, params.k));
                else if (config.codemaker == "random")
                    maker = std::make_unique<RandomCodemaker>(params, codemaker_rng);
                else
                    maker = std::make_unique<DevilCodemaker>(params, config.devil_budget);
                auto strategy = factory();
                const std::size_t cap = config.query_cap
                                            ? config.query_cap
                                            : static_cast<std::size_t>(50) * record.n;
                GameTranscript transcript = run_game(*strategy, *maker, params, record.mu,
                                                     cap, rng.split(0x9a3e));
                std::ostringstream name;
                name << transcript_dir << "/game_n" << record.n << "_k" << record.k << "_s"
                     << record.seed << ".txt";
                std::ofstream out(name.str(), std::ios::binary);
                out << serialize_transcript(transcript);
            }
            std::cout << "wrote " << result.records.size() << " transcripts to "
                      << transcript_dir << "\n";
        }
        return result.all_won ? 0 : 1;
    } catch (const std::exception &error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
}
