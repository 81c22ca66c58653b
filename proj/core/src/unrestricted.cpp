#include "mastermind/strategies/unrestricted.hpp"

#include "mastermind/consistent.hpp"
#include "mastermind/errors.hpp"

namespace mastermind {

UnrestrictedStrategy::UnrestrictedStrategy(GameParams params, double eps,
                                           std::uint64_t budget)
  : params_(params), t_(theorem_three_t(params.n, params.k, eps)), budget_(budget)
{
    params_.validate();
    // fail at construction rather than mid-game
    double total = 1.0;
    for (int i = 0; i < params_.n; ++i)
        total *= params_.k;
    if (total > static_cast<double>(budget_))
        throw EnumerationBudgetError("UnrestrictedStrategy: k^n exceeds the enumeration budget");
}

CodeString UnrestrictedStrategy::vary(const MemoryState &memory, RandomStream &rng) const
{
    if (static_cast<int>(memory.size()) < t_)
        return rng.code(params_);

    BlockEvidence evidence;
    evidence.samples.reserve(memory.size());
    for (const auto &pair : memory.pairs())
        evidence.samples.push_back({pair.guess, pair.answer.black});
    auto candidates = consistent_fragments(evidence, params_.n, params_.k, budget_);
    if (candidates.empty())
        throw ContractViolationError("UnrestrictedStrategy: consistent set is empty");
    return candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
}

MemoryState UnrestrictedStrategy::select(const MemoryState &memory, const MemoryPair &incoming,
                                         RandomStream &rng) const
{
    (void)rng;
    MemoryState next(memory.capacity());
    if (memory.size() < memory.capacity()) {
        for (const auto &pair : memory.pairs())
            next.push(pair);
        next.push(incoming);
        return next;
    }
    // full: keep the t sampling pairs and the newest pair
    for (std::size_t i = 0; i < static_cast<std::size_t>(t_); ++i)
        next.push(memory.pair(i));
    next.push(incoming);
    return next;
}

int UnrestrictedStrategy::phase_of(const MemoryState &memory) const
{
    return static_cast<int>(memory.size()) < t_ ? 1 : 3;
}

} // namespace mastermind
