// harness.hpp -- enforces the bounded-memory query scheme and records games

#pragma once

#include "mastermind/codemaker.hpp"
#include "mastermind/strategy.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace mastermind {

/// Full query history of one game, with the seed that reproduces it.
struct GameTranscript {
    GameParams params;
    std::size_t mu = 1;
    std::uint64_t seed = 0;
    std::string strategy_name;
    std::string codemaker_name;
    std::vector<MemoryPair> queries;
    std::optional<std::size_t> winning_index;
    std::array<std::uint64_t, 4> phase_queries{}; // not serialized

    bool won() const noexcept { return winning_index.has_value(); }
};

/// Runs one game: variation step, oracle query, selection step, until an
/// answer with black == n or until query_cap guesses have been made.  The
/// memory-capacity invariant is asserted after every selection; a
/// wrong-length guess raises ContractViolationError.  Hitting the cap
/// yields a transcript without winning_index, not an error.
GameTranscript run_game(const Strategy &strategy, Codemaker &codemaker,
                        const GameParams &params, std::size_t mu, std::size_t query_cap,
                        RandomStream rng, StrategyObserver *observer = nullptr);

/// Replays a transcript, feeding each reconstructed memory state to a
/// freshly built strategy instance with the replayed random stream.  True
/// iff every regenerated guess equals the recorded one; a strategy smuggling
/// state across queries in its instance fails this.
bool statelessness_check(const StrategyFactory &factory, const GameTranscript &transcript);

/// The fitness view of a secret: x -> eq(z, x).
std::function<int(const CodeString &)> one_max_view(CodeString z);

/// Serialization: one header line (n, k, mu, seed, strategy, codemaker),
/// then one line per query `<index> <guess-text> <black>`.  Byte-identical
/// across runs with equal seeds.
std::string serialize_transcript(const GameTranscript &transcript);
GameTranscript parse_transcript(std::istream &in);
GameTranscript parse_transcript(const std::string &text);

} // namespace mastermind
