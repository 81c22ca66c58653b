#include "mastermind/harness.hpp"

#include "mastermind/errors.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace mastermind {

GameTranscript run_game(const Strategy &strategy, Codemaker &codemaker,
                        const GameParams &params, std::size_t mu, std::size_t query_cap,
                        RandomStream rng, StrategyObserver *observer)
{
    params.validate();
    if (mu < 1)
        throw std::invalid_argument("run_game: mu must be at least 1");
    if (query_cap < 1)
        throw std::invalid_argument("run_game: query_cap must be at least 1");

    // The observer is installed for the duration of the run only; it taps
    // computations without feeding back into them.
    struct ObserverGuard {
        Strategy &strategy;
        ~ObserverGuard() { strategy.set_observer(nullptr); }
    };
    auto &mutable_strategy = const_cast<Strategy &>(strategy);
    ObserverGuard guard{mutable_strategy};
    mutable_strategy.set_observer(observer);

    GameTranscript transcript;
    transcript.params = params;
    transcript.mu = mu;
    transcript.seed = rng.seed();
    transcript.strategy_name = strategy.name();
    transcript.codemaker_name = codemaker.name();

    MemoryState memory(mu);
    for (std::size_t index = 0; index < query_cap; ++index) {
        const int phase = strategy.phase_of(memory);
        CodeString guess = strategy.vary(memory, rng);
        if (guess.size() != static_cast<std::size_t>(params.n))
            throw ContractViolationError("run_game: strategy produced a wrong-length guess");
        Answer answer = codemaker.answer(guess);
        transcript.queries.push_back(MemoryPair{guess, answer});
        if (phase >= 0 && phase < 4)
            ++transcript.phase_queries[static_cast<std::size_t>(phase)];

        if (answer.black == params.n) {
            transcript.winning_index = index;
            break;
        }
        memory = strategy.select(memory, transcript.queries.back(), rng);
        if (memory.size() > mu)
            throw ContractViolationError("run_game: selection kept more than mu pairs");
    }

    return transcript;
}

bool statelessness_check(const StrategyFactory &factory, const GameTranscript &transcript)
{
    RandomStream rng(transcript.seed);
    MemoryState memory(transcript.mu);
    for (std::size_t i = 0; i < transcript.queries.size(); ++i) {
        // Fresh instance per step: anything the strategy tried to remember
        // inside the object is gone, exactly as the scheme demands.
        auto vary_instance = factory();
        CodeString guess = vary_instance->vary(memory, rng);
        if (guess != transcript.queries[i].guess)
            return false;
        if (transcript.winning_index && *transcript.winning_index == i)
            break;
        auto select_instance = factory();
        memory = select_instance->select(memory, transcript.queries[i], rng);
    }
    return true;
}

std::function<int(const CodeString &)> one_max_view(CodeString z)
{
    return [z = std::move(z)](const CodeString &x) { return eq(z, x); };
}

std::string serialize_transcript(const GameTranscript &transcript)
{
    std::ostringstream out;
    out << "n=" << transcript.params.n << " k=" << transcript.params.k
        << " mu=" << transcript.mu << " seed=" << transcript.seed
        << " strategy=" << transcript.strategy_name
        << " codemaker=" << transcript.codemaker_name << "\n";
    for (std::size_t i = 0; i < transcript.queries.size(); ++i) {
        out << i << ' ' << to_text(transcript.queries[i].guess, transcript.params.k) << ' '
            << transcript.queries[i].answer.black << "\n";
    }
    return out.str();
}

namespace {

std::string_view header_field(std::string_view line, std::string_view key)
{
    std::string token(key);
    token += '=';
    std::size_t at = line.find(token);
    if (at == std::string_view::npos)
        throw std::invalid_argument("parse_transcript: missing header field " + std::string(key));
    std::size_t begin = at + token.size();
    std::size_t end = line.find(' ', begin);
    return line.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin);
}

template <typename T>
T parse_number(std::string_view text, const char *what)
{
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("parse_transcript: bad ") + what);
    return value;
}

} // namespace

GameTranscript parse_transcript(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("parse_transcript: empty input");

    GameTranscript transcript;
    transcript.params.n = parse_number<int>(header_field(line, "n"), "n");
    transcript.params.k = parse_number<int>(header_field(line, "k"), "k");
    transcript.mu = parse_number<std::size_t>(header_field(line, "mu"), "mu");
    transcript.seed = parse_number<std::uint64_t>(header_field(line, "seed"), "seed");
    transcript.strategy_name = std::string(header_field(line, "strategy"));
    transcript.codemaker_name = std::string(header_field(line, "codemaker"));

    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::size_t index = 0;
        std::string guess_text;
        int black = 0;
        if (!(fields >> index >> guess_text >> black))
            throw std::invalid_argument("parse_transcript: bad query line");
        if (index != transcript.queries.size())
            throw std::invalid_argument("parse_transcript: query index out of order");
        MemoryPair pair{code_from_text(guess_text, transcript.params.k), Answer{black, std::nullopt}};
        if (pair.guess.size() != static_cast<std::size_t>(transcript.params.n))
            throw std::invalid_argument("parse_transcript: guess length != n");
        transcript.queries.push_back(std::move(pair));
        if (black == transcript.params.n)
            transcript.winning_index = index;
    }
    return transcript;
}

GameTranscript parse_transcript(const std::string &text)
{
    std::istringstream in(text);
    return parse_transcript(in);
}

} // namespace mastermind
