// unrestricted.hpp -- random guessing with full history: t uniform guesses,
// then draws from the set of codes consistent with everything stored

#pragma once

#include "mastermind/strategy.hpp"

#include <cstdint>

namespace mastermind {

/// The historical baseline.  Needs memory t + 1 where
/// t = theorem_three_t(n, k, eps); the resolution step enumerates all k^n
/// candidates, so this runs at small n only (the enumeration budget gates
/// it).  Selection keeps the t sampling pairs plus the newest pair.
class UnrestrictedStrategy : public Strategy {
public:
    UnrestrictedStrategy(GameParams params, double eps,
                         std::uint64_t budget = 1ull << 24);

    std::string name() const override { return "unrestricted"; }
    std::size_t memory_requirement() const override { return static_cast<std::size_t>(t_) + 1; }
    int sample_count() const noexcept { return t_; }

    CodeString vary(const MemoryState &memory, RandomStream &rng) const override;
    MemoryState select(const MemoryState &memory, const MemoryPair &incoming,
                       RandomStream &rng) const override;
    int phase_of(const MemoryState &memory) const override;

private:
    GameParams params_;
    int t_;
    std::uint64_t budget_;
};

} // namespace mastermind
