// codemaker.hpp -- the answering side: fixed and random secrets, and the
// exact adversary that defers its choice of code

#pragma once

#include "mastermind/random.hpp"
#include "mastermind/types.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mastermind {

/// Answering player.  One instance is confined to a single game.
class Codemaker {
public:
    virtual ~Codemaker() = default;

    virtual std::string name() const = 0;

    /// Black-peg reply to a guess.  Strategies only ever see `black`.
    virtual Answer answer(const CodeString &guess) = 0;

    /// The secret, when one exists up front (fixed/random codemakers).
    /// Used by instrumented tests, never by strategies.
    virtual const CodeString *secret() const { return nullptr; }
};

/// Answers from one immutable secret.
class FixedCodemaker : public Codemaker {
public:
    FixedCodemaker(GameParams params, CodeString secret);

    std::string name() const override { return "fixed"; }
    Answer answer(const CodeString &guess) override;
    const CodeString *secret() const override { return &secret_; }

private:
    GameParams params_;
    CodeString secret_;
};

/// Samples a uniform secret at construction, then plays it fixed.
class RandomCodemaker : public FixedCodemaker {
public:
    RandomCodemaker(GameParams params, RandomStream &rng)
      : FixedCodemaker(params, random_code(params, rng))
    {
    }

    std::string name() const override { return "random"; }
};

/// Every code in [0..k-1]^n in lexicographic order; throws
/// EnumerationBudgetError when k^n exceeds the budget.
std::vector<CodeString> all_codes(const GameParams &params, std::uint64_t budget);

/// Adversarial codemaker that never commits to a code: it keeps the set of
/// codes consistent with every answer given so far, and replies with the
/// eq value whose consistency class is largest (ties to the smaller eq).
/// Exact and therefore exponential: construction enumerates all k^n codes,
/// gated by a candidate budget.
class DevilCodemaker : public Codemaker {
public:
    static constexpr std::uint64_t default_candidate_budget = 1ull << 16;

    explicit DevilCodemaker(GameParams params,
                            std::uint64_t candidate_budget = default_candidate_budget);

    std::string name() const override { return "devil"; }
    Answer answer(const CodeString &guess) override;

    const std::vector<CodeString> &consistent_set() const noexcept { return consistent_; }

private:
    GameParams params_;
    std::vector<CodeString> consistent_;
};

} // namespace mastermind
