// size_one.hpp -- one-cell codebreaker: the single memory string carries a
// status bit, the last reply, the determined blocks, a copy of the first l
// secret entries, all per-block records, the block counter and a phase
// suffix.  Phases: linear prefix extension to l, block-wise random guessing
// with in-string storage, linear extension to n-2, suffix endgame.

#pragma once

#include "mastermind/layout.hpp"
#include "mastermind/strategy.hpp"

namespace mastermind {

/// Phase labels decoded from the memory string.
enum class SizeOnePhase {
    init,            ///< empty memory
    prefix_lin_alg,  ///< suffix [cc], tail number <= l
    intermediate,    ///< suffix [cc], tail number == l + 1
    sampling,        ///< suffix [01], block counter <= b, q < t + k
    optimize,        ///< suffix [01], block counter <= b, q == t + k
    phase_two_prep,  ///< suffix [01], block counter == b + 1
    lin_alg,         ///< suffix [cc], l + b s < tail number <= n - 2
    endgame          ///< suffix [cc], tail number == n - 1
};

class SizeOneStrategy : public Strategy {
public:
    SizeOneStrategy(GameParams params, LayoutParams layout);

    static SizeOneStrategy with_default_layout(GameParams params, double eps = 1.0,
                                               double big_k = 10.0);

    std::string name() const override { return "size-one"; }
    std::size_t memory_requirement() const override { return 1; }
    const LayoutParams &layout() const noexcept { return layout_; }

    /// Total phase classification of a stored string; throws
    /// ContractViolationError on a string the strategy could not have kept.
    SizeOnePhase classify(const MemoryState &memory) const;

    CodeString vary(const MemoryState &memory, RandomStream &rng) const override;
    MemoryState select(const MemoryState &memory, const MemoryPair &incoming,
                       RandomStream &rng) const override;
    int phase_of(const MemoryState &memory) const override;

private:
    CodeString prefix_copy(const CodeString &x) const;
    /// eq of the first l entries of a candidate prefix against the stored
    /// copy of the first l secret entries.
    int prefix_contribution(const CodeString &x, const std::vector<Color> &first_l) const;
    /// Off-tail baseline shared by the reference strings of the current
    /// block, recovered from the reference records.
    int reference_baseline(const CodeString &x, int block_index) const;
    int sample_delta(const CodeString &sample, int answer, int block_index) const;

    CodeString intermediate_guess(const CodeString &x) const;
    CodeString sample_type_guess(const CodeString &store, int answer,
                                 const CodeString &fragment, int block_index) const;
    CodeString store_record_guess(const CodeString &sample, int answer, int block_index) const;
    CodeString store_reference_guess(const CodeString &sample, int answer, int slot) const;
    CodeString update_guess(const CodeString &winner, int block_index) const;
    CodeString prep_guess(const CodeString &x, RandomStream &rng) const;
    CodeString resolution_guess(const CodeString &store, int block_index,
                                RandomStream &rng) const;

    GameParams params_;
    LayoutParams layout_;
};

} // namespace mastermind
