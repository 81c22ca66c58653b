// size_two.hpp -- two-cell codebreaker: one sampling string carries the
// determined prefix, one storage string encodes the block counter and the
// full per-block guessing history

#pragma once

#include "mastermind/consistent.hpp"
#include "mastermind/layout.hpp"
#include "mastermind/strategy.hpp"

namespace mastermind {

/// On-block contribution of a guess, recovered from its raw answer by
/// differencing against the k constant-color reference answers:
/// answer - (sum(refs) - block_len) / k.  Throws LayoutCorruptionError on a
/// non-divisible sum or an out-of-range result.
int delta_contribution(int answer, const std::vector<int> &reference_answers,
                       int block_len, int k);

/// Decoded per-block history of a two-cell storage string: the k reference
/// answers and the recorded (fragment, answer) samples.
struct SizeTwoHistory {
    std::vector<int> reference_answers;
    std::vector<std::pair<CodeString, int>> samples;
};

/// Decodes the full record region of x; requires all t + k records present.
SizeTwoHistory reconstruct_history_size_two(const CodeString &x, const LayoutParams &layout);

/// Block-wise random guessing with two memory cells.  The n-th position is
/// not part of any block: it flags which memory string is storage (1) and
/// which is sampling (0).  When no record layout fits (tiny n), the strategy
/// runs the position-by-position linear mode instead.
class SizeTwoStrategy : public Strategy {
public:
    SizeTwoStrategy(GameParams params, LayoutParams layout);

    /// Convenience: default layout for the dimensions.
    static SizeTwoStrategy with_default_layout(GameParams params, double eps = 1.0);

    std::string name() const override { return "size-two"; }
    std::size_t memory_requirement() const override { return 2; }
    const LayoutParams &layout() const noexcept { return layout_; }

    CodeString vary(const MemoryState &memory, RandomStream &rng) const override;
    MemoryState select(const MemoryState &memory, const MemoryPair &incoming,
                       RandomStream &rng) const override;
    int phase_of(const MemoryState &memory) const override;

private:
    struct Cells {
        const MemoryPair *storage = nullptr;  // the pair with guess_n == 1
        const MemoryPair *sampling = nullptr; // the pair with guess_n == 0
    };
    Cells split_cells(const MemoryState &memory) const;

    CodeString transition_guess(const CodeString &y, int answer_y, int next_block) const;
    CodeString store_guess(const CodeString &x, const CodeString &y, int answer_y,
                           int block) const;

    GameParams params_;
    LayoutParams layout_;
};

} // namespace mastermind
