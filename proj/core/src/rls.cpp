#include "mastermind/strategies/rls.hpp"

namespace mastermind {

RlsStrategy::RlsStrategy(GameParams params) : params_(params)
{
    params_.validate();
}

CodeString RlsStrategy::vary(const MemoryState &memory, RandomStream &rng) const
{
    if (memory.empty())
        return rng.code(params_);
    CodeString guess = memory.pair(0).guess;
    const auto pos = static_cast<std::size_t>(rng.below(guess.size()));
    guess[pos] = rng.color_excluding(params_.k, guess[pos]);
    return guess;
}

MemoryState RlsStrategy::select(const MemoryState &memory, const MemoryPair &incoming,
                                RandomStream &rng) const
{
    (void)rng;
    MemoryState next(memory.capacity());
    if (memory.empty() || incoming.answer.black > memory.pair(0).answer.black)
        next.push(incoming);
    else
        next.push(memory.pair(0));
    return next;
}

} // namespace mastermind
