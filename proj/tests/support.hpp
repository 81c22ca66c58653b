// support.hpp -- independent oracles and instrumentation used by the tests.
// Everything here is deliberately written against the definitions, not the
// library's implementation paths.

#pragma once

#include "mastermind/harness.hpp"
#include "mastermind/layout.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace mastermind::test {

/// White pegs by the permutation definition:
/// max over permutations rho of |{i : z_i = x_rho(i)}| minus eq(z, x).
inline int permutation_white_pegs(const CodeString &z, const CodeString &x)
{
    std::vector<std::size_t> perm(z.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    int best = 0;
    do {
        int matches = 0;
        for (std::size_t i = 0; i < z.size(); ++i)
            matches += (z[i] == x[perm[i]]);
        best = std::max(best, matches);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best - eq(z, x);
}

/// Tail number straight from the definition scan.
inline int naive_tail_number(const CodeString &x)
{
    const int n = static_cast<int>(x.size());
    for (int i = 1; i <= n; ++i) {
        bool constant = true;
        for (int j = i; j <= n; ++j)
            constant = constant && x[static_cast<std::size_t>(j - 1)] ==
                                       x[static_cast<std::size_t>(i - 1)];
        if (constant)
            return i;
    }
    return n;
}

/// Last position <= limit holding a 1, by forward scan.
inline int naive_last_one_pos(const CodeString &x, int limit)
{
    int best = 0;
    for (int i = 1; i <= limit; ++i)
        if (x[static_cast<std::size_t>(i - 1)] == 1)
            best = i;
    return best;
}

/// Second, structurally different enumeration of consistent fragments:
/// recursive digit extension with the library's eq at the leaves.
inline void enumerate_consistent(std::vector<Color> &prefix, int length, int k,
                                 const std::vector<std::pair<CodeString, int>> &evidence,
                                 std::vector<CodeString> &out)
{
    if (static_cast<int>(prefix.size()) == length) {
        CodeString candidate(prefix);
        for (const auto &[fragment, wanted] : evidence)
            if (eq(candidate, fragment) != wanted)
                return;
        out.push_back(std::move(candidate));
        return;
    }
    for (int c = 0; c < k; ++c) {
        prefix.push_back(static_cast<Color>(c));
        enumerate_consistent(prefix, length, k, evidence, out);
        prefix.pop_back();
    }
}

inline std::vector<CodeString>
oracle_consistent_fragments(int length, int k,
                            const std::vector<std::pair<CodeString, int>> &evidence)
{
    std::vector<Color> prefix;
    std::vector<CodeString> out;
    enumerate_consistent(prefix, length, k, evidence, out);
    return out;
}

/// Strategy double that keeps a hidden per-instance counter, violating the
/// pure-function-of-memory contract.  Replay with fresh instances must
/// diverge from its recorded guesses.
class HiddenCounterStrategy : public Strategy {
public:
    explicit HiddenCounterStrategy(GameParams params) : params_(params) {}

    std::string name() const override { return "hidden-counter"; }
    std::size_t memory_requirement() const override { return 1; }

    CodeString vary(const MemoryState &, RandomStream &) const override
    {
        const int value = counter_++;
        CodeString guess(static_cast<std::size_t>(params_.n), 0);
        for (int bit = 0; bit < params_.n && bit < 20; ++bit)
            guess[static_cast<std::size_t>(bit)] =
                static_cast<Color>((value >> bit) & 1);
        return guess;
    }

    MemoryState select(const MemoryState &memory, const MemoryPair &incoming,
                       RandomStream &) const override
    {
        MemoryState next(memory.capacity());
        next.push(incoming);
        return next;
    }

private:
    GameParams params_;
    mutable int counter_ = 0;
};

/// Observer that checks every reported contribution against the true
/// secret, accumulates stored records per block, and compares them with the
/// reconstructed history.
class DeltaCheckObserver : public StrategyObserver {
public:
    DeltaCheckObserver(CodeString secret, LayoutParams layout)
      : secret_(std::move(secret)), layout_(std::move(layout))
    {
    }

    void on_contribution(int block, const CodeString &fragment, int delta) override
    {
        ++contributions;
        const CodeString truth = block_of(secret_, layout_.block(block));
        if (eq(truth, fragment) != delta)
            ++mismatches;
    }

    void on_record_stored(int block, const CodeString &fragment, int value) override
    {
        stored[block].emplace_back(fragment, value);
    }

    void on_history_reconstructed(
        int block, const std::vector<int> &reference_answers,
        const std::vector<std::pair<CodeString, int>> &records) override
    {
        ++reconstructions;
        last_reference_answers = reference_answers;
        // compare against what was stored for this block, in order; the
        // two-cell layout stores the references as its first records
        const auto it = stored.find(block);
        if (it == stored.end()) {
            ++reconstruction_mismatches;
            return;
        }
        const auto &written = it->second;
        if (written.size() < records.size()) {
            ++reconstruction_mismatches;
            return;
        }
        const std::size_t skip = written.size() - records.size();
        if (skip > 0) {
            // two-cell layout: the leading stored records are the k
            // constant-color references; their answers must round-trip too
            if (skip != reference_answers.size()) {
                ++reconstruction_mismatches;
            } else {
                for (std::size_t c = 0; c < skip; ++c)
                    if (written[c].second != reference_answers[c])
                        ++reconstruction_mismatches;
            }
        }
        for (std::size_t j = 0; j < records.size(); ++j)
            if (written[skip + j] != records[j])
                ++reconstruction_mismatches;
    }

    CodeString secret_;
    LayoutParams layout_;
    long contributions = 0;
    long mismatches = 0;
    long reconstructions = 0;
    long reconstruction_mismatches = 0;
    std::vector<int> last_reference_answers;
    std::map<int, std::vector<std::pair<CodeString, int>>> stored;
};

} // namespace mastermind::test
