// rls.hpp -- randomized local search baseline (memory one)

#pragma once

#include "mastermind/strategy.hpp"

namespace mastermind {

/// Memory-one hill climber: guess the stored string with one uniformly
/// random position recolored; keep the better of old and new by black
/// count (ties keep the old).  Coupon-collector behavior, Theta(n log n).
class RlsStrategy : public Strategy {
public:
    explicit RlsStrategy(GameParams params);

    std::string name() const override { return "rls"; }
    std::size_t memory_requirement() const override { return 1; }
    CodeString vary(const MemoryState &memory, RandomStream &rng) const override;
    MemoryState select(const MemoryState &memory, const MemoryPair &incoming,
                       RandomStream &rng) const override;
    int phase_of(const MemoryState &memory) const override
    {
        (void)memory;
        return 2;
    }

private:
    GameParams params_;
};

} // namespace mastermind
