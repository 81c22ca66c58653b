// linalg.hpp -- the one-cell linear-time routine: extend the determined
// prefix of the memory string by one position per expected-constant guesses.
// The frontier is the tail number; everything from it to the end is kept at
// one color so the string itself records how far the prefix reaches.

#pragma once

#include "mastermind/memory.hpp"
#include "mastermind/random.hpp"

namespace mastermind {

/// Next probe for two colors, given the memory string x with tn(x) < n:
/// with probability 1/2 flip only position tn(x), otherwise flip every
/// position after tn(x).
CodeString lin_alg_vary_k2(const CodeString &x, RandomStream &rng);

/// Keep rule for two colors: a single flip is kept iff eq increased; a tail
/// flip is kept iff answer_x + answer_y = n + tn(x).
bool lin_alg_keep_k2(const CodeString &x, int answer_x, const CodeString &y, int answer_y);

/// Next probe for three or more colors: with probability (k-1)/k recolor
/// position tn(x) to a different color, with probability 1/k re-mark the
/// whole tail with a color different from position tn(x)-1.
CodeString lin_alg_vary_k3(const CodeString &x, int k, RandomStream &rng);

/// Keep rule for three or more colors: a single recolor is kept iff eq
/// increased; a tail re-mark is always kept.
bool lin_alg_keep_k3(const CodeString &x, int answer_x, const CodeString &y, int answer_y);

CodeString lin_alg_vary(const CodeString &x, int k, RandomStream &rng);
bool lin_alg_keep(const CodeString &x, int answer_x, const CodeString &y, int answer_y, int k);

/// Position-by-position mode shared by the encoding strategies when no
/// block layout fits: all-one-color start, linear-time prefix extension to
/// tn = n-1, then uniform draws over the k^2 - 1 remaining suffix pairs.
CodeString linear_mode_vary(const GameParams &params, const MemoryState &memory,
                            RandomStream &rng);
MemoryState linear_mode_select(const GameParams &params, const MemoryState &memory,
                               const MemoryPair &incoming);
int linear_mode_phase(const GameParams &params, const MemoryState &memory);

} // namespace mastermind
