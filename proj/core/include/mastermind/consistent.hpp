// consistent.hpp -- brute-force enumeration of code fragments consistent
// with recorded answers

#pragma once

#include "mastermind/random.hpp"
#include "mastermind/types.hpp"

#include <cstdint>
#include <vector>

namespace mastermind {

/// Per-block evidence: sampled fragments together with their on-block
/// contributions.
struct BlockEvidence {
    struct Sample {
        CodeString fragment;
        int contribution = 0;
    };
    std::vector<Sample> samples;
};

inline constexpr std::uint64_t default_enumeration_budget = 1ull << 24;

/// All fragments w of the given length with eq(w, sample) = contribution for
/// every sample, in lexicographic order (position 1 most significant).  The
/// true fragment behind truthful evidence is always a member.  Throws
/// EnumerationBudgetError when k^length exceeds the budget.
std::vector<CodeString> consistent_fragments(const BlockEvidence &evidence,
                                             int fragment_length, int k,
                                             std::uint64_t budget = default_enumeration_budget);

/// Number of uniform random guesses after which the consistent set over
/// length-`size` strings has expected size at most 1 + 1/size:
/// ceil((2+eps) * size * (1 + 2*log2(k)) / (log2(size) - log2(k))).
/// Requires size > k.
int theorem_three_t(int size, int k, double eps);

/// Monte Carlo estimate: for `z_trials` random secrets of length n, draw
/// t = theorem_three_t(n, k, eps) uniform guesses, enumerate every
/// consistent candidate, and return the mean set size.
double expected_consistent_size(int n, int k, double eps, int z_trials, RandomStream &rng,
                                std::uint64_t budget = default_enumeration_budget);

/// Probability that one uniform random guess gives the same eq value on two
/// fixed strings differing in exactly d positions.
double tie_probability(int d, int k);

/// Exact E[|consistent set|] for t uniform samples against a length-`len`
/// secret: 1 + sum_d C(len, d) (k-1)^d tie_probability(d, k)^t.
double analytic_expected_consistent_size(int len, int k, int t);

} // namespace mastermind
