#include "support.hpp"

#include "mastermind/codemaker.hpp"

#include <doctest.h>

using namespace mastermind;

TEST_CASE("fixed codemaker answers eq against its secret")
{
    FixedCodemaker maker(GameParams{4, 2}, code_from_text("0110", 2));
    CHECK(maker.answer(code_from_text("0000", 2)).black == 2);
    CHECK(maker.answer(code_from_text("0110", 2)).black == 4);
    CHECK_THROWS_AS(maker.answer(code_from_text("00", 2)), std::invalid_argument);
    CHECK_THROWS_AS(FixedCodemaker(GameParams{3, 2}, code_from_text("0110", 2)),
                    std::invalid_argument);
}

TEST_CASE("devil keeps the largest consistency class, ties to smaller eq")
{
    DevilCodemaker devil(GameParams{2, 2});
    // classes for guess 00: eq=2 {00}, eq=1 {01,10}, eq=0 {11}
    Answer reply = devil.answer(code_from_text("00", 2));
    CHECK(reply.black == 1);
    REQUIRE(devil.consistent_set().size() == 2);
    CHECK(devil.consistent_set()[0] == code_from_text("01", 2));
    CHECK(devil.consistent_set()[1] == code_from_text("10", 2));
}

TEST_CASE("devil is forced to answer n when pinned to the guess")
{
    DevilCodemaker devil(GameParams{2, 2});
    devil.answer(code_from_text("00", 2)); // -> {01, 10}
    devil.answer(code_from_text("01", 2)); // splits {01},{10}; tie -> smaller eq
    REQUIRE(devil.consistent_set().size() == 1);
    CodeString pinned = devil.consistent_set()[0];
    CHECK(devil.answer(pinned).black == 2);
}

TEST_CASE("every devil answer stays consistent with a nonempty set")
{
    const GameParams params{8, 2};
    RandomStream rng(23);
    DevilCodemaker devil(params);
    std::vector<std::pair<CodeString, int>> history;
    for (int round = 0; round < 40; ++round) {
        CodeString guess = random_code(params, rng);
        int black = devil.answer(guess).black;
        history.emplace_back(guess, black);
        REQUIRE(!devil.consistent_set().empty());
        for (const auto &candidate : devil.consistent_set())
            for (const auto &[g, b] : history)
                CHECK(eq(candidate, g) == b);
        if (black == params.n)
            break;
    }
}

TEST_CASE("devil answers are deterministic in set and guess")
{
    const GameParams params{6, 2};
    RandomStream rng(31);
    std::vector<CodeString> guesses;
    for (int i = 0; i < 10; ++i)
        guesses.push_back(random_code(params, rng));

    DevilCodemaker a(params), b(params);
    for (const auto &guess : guesses)
        CHECK(a.answer(guess).black == b.answer(guess).black);
}

TEST_CASE("devil enforces its candidate budget")
{
    CHECK_THROWS_AS(DevilCodemaker(GameParams{40, 2}), EnumerationBudgetError);
    CHECK_NOTHROW(DevilCodemaker(GameParams{16, 2}));
}
