#include "mastermind/codemaker.hpp"

#include "mastermind/errors.hpp"

#include <algorithm>
#include <map>

namespace mastermind {

FixedCodemaker::FixedCodemaker(GameParams params, CodeString secret)
  : params_(params), secret_(std::move(secret))
{
    params_.validate();
    if (secret_.size() != static_cast<std::size_t>(params_.n))
        throw std::invalid_argument("FixedCodemaker: secret length != n");
    for (Color c : secret_)
        if (c >= params_.k)
            throw std::invalid_argument("FixedCodemaker: secret color out of range");
}

Answer FixedCodemaker::answer(const CodeString &guess)
{
    if (guess.size() != secret_.size())
        throw std::invalid_argument("FixedCodemaker: guess length != n");
    return Answer{eq(secret_, guess), std::nullopt};
}

std::vector<CodeString> all_codes(const GameParams &params, std::uint64_t budget)
{
    params.validate();
    double total = 1.0;
    for (int i = 0; i < params.n; ++i)
        total *= params.k;
    if (total > static_cast<double>(budget))
        throw EnumerationBudgetError("all_codes: k^n exceeds the candidate budget");

    std::vector<CodeString> codes;
    codes.reserve(static_cast<std::size_t>(total));
    std::vector<Color> current(static_cast<std::size_t>(params.n), 0);
    for (;;) {
        codes.emplace_back(current);
        // odometer increment, least significant position last
        int pos = params.n - 1;
        while (pos >= 0) {
            if (++current[static_cast<std::size_t>(pos)] < params.k)
                break;
            current[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
    return codes;
}

DevilCodemaker::DevilCodemaker(GameParams params, std::uint64_t candidate_budget)
  : params_(params), consistent_(all_codes(params, candidate_budget))
{
}

Answer DevilCodemaker::answer(const CodeString &guess)
{
    if (guess.size() != static_cast<std::size_t>(params_.n))
        throw std::invalid_argument("DevilCodemaker: guess length != n");
    if (consistent_.empty())
        throw ContractViolationError("DevilCodemaker: consistent set is empty");

    std::map<int, std::size_t> class_size;
    for (const auto &candidate : consistent_)
        ++class_size[eq(candidate, guess)];

    int best_eq = -1;
    std::size_t best_size = 0;
    for (const auto &[value, size] : class_size) {
        if (size > best_size) { // ties resolve to the smaller eq (map order)
            best_size = size;
            best_eq = value;
        }
    }

    std::vector<CodeString> kept;
    kept.reserve(best_size);
    for (auto &candidate : consistent_)
        if (eq(candidate, guess) == best_eq)
            kept.push_back(std::move(candidate));
    consistent_ = std::move(kept);

    return Answer{best_eq, std::nullopt};
}

} // namespace mastermind
