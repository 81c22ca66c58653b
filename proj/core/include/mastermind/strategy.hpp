// strategy.hpp -- the memory-restricted codebreaker contract

#pragma once

#include "mastermind/memory.hpp"
#include "mastermind/random.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mastermind {

/// Read-only tap used by instrumented tests: block contributions as they
/// are computed, records as they are written, and reconstructed histories.
/// Observers never influence a guess.
class StrategyObserver {
public:
    virtual ~StrategyObserver() = default;

    /// A block contribution was computed for `fragment` of block `block`.
    virtual void on_contribution(int block, const CodeString &fragment, int delta)
    {
        (void)block; (void)fragment; (void)delta;
    }

    /// A (fragment, value) record was written into storage.  `value` is the
    /// raw stored answer for answer-keeping layouts and the contribution for
    /// contribution-keeping layouts.
    virtual void on_record_stored(int block, const CodeString &fragment, int value)
    {
        (void)block; (void)fragment; (void)value;
    }

    /// The full per-block history was decoded back out of storage.
    virtual void on_history_reconstructed(int block,
                                          const std::vector<int> &reference_answers,
                                          const std::vector<std::pair<CodeString, int>> &records)
    {
        (void)block; (void)reference_answers; (void)records;
    }
};

/// A codebreaker.  Both steps are pure functions of their arguments: no
/// iteration counters, no per-instance mutable state.  Randomness comes in
/// through the explicit stream so runs replay exactly.
class Strategy {
public:
    virtual ~Strategy() = default;

    virtual std::string name() const = 0;

    /// The memory capacity this strategy is designed for.
    virtual std::size_t memory_requirement() const = 0;

    /// Chooses the next guess from the memory contents alone.
    virtual CodeString vary(const MemoryState &memory, RandomStream &rng) const = 0;

    /// Keeps at most capacity() pairs drawn from the old memory plus the
    /// incoming pair.
    virtual MemoryState select(const MemoryState &memory, const MemoryPair &incoming,
                               RandomStream &rng) const = 0;

    /// Coarse phase label (0..3) for query accounting, derived from memory.
    virtual int phase_of(const MemoryState &memory) const
    {
        (void)memory;
        return 1;
    }

    void set_observer(StrategyObserver *observer) noexcept { observer_ = observer; }

protected:
    StrategyObserver *observer_ = nullptr;
};

using StrategyFactory = std::function<std::unique_ptr<Strategy>()>;

} // namespace mastermind
