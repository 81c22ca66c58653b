#include "support.hpp"

#include "mastermind/random.hpp"

#include <doctest.h>

using namespace mastermind;

namespace {
CodeString cs(std::initializer_list<int> values)
{
    std::vector<Color> entries;
    for (int v : values)
        entries.push_back(static_cast<Color>(v));
    return CodeString(std::move(entries));
}
} // namespace

TEST_CASE("eq counts coinciding positions")
{
    CHECK(eq(cs({0, 1, 1, 0}), cs({0, 0, 1, 1})) == 2);

    CodeString z = cs({1, 0, 2, 2, 1});
    CHECK(eq(z, z) == 5);

    std::vector<Color> alternating, zeros(10, 0);
    for (int i = 0; i < 10; ++i)
        alternating.push_back(static_cast<Color>(i % 2));
    CHECK(eq(CodeString(alternating), CodeString(zeros)) == 5);

    CHECK_THROWS_AS(eq(cs({0, 1}), cs({0, 1, 0})), std::invalid_argument);
}

TEST_CASE("eq is symmetric")
{
    RandomStream rng(11);
    const GameParams params{9, 3};
    for (int trial = 0; trial < 200; ++trial) {
        CodeString a = random_code(params, rng);
        CodeString b = random_code(params, rng);
        CHECK(eq(a, b) == eq(b, a));
    }
}

TEST_CASE("white pegs: multiset formula on known instances")
{
    CHECK(white_pegs(cs({1, 2, 3, 4}), cs({4, 3, 2, 1})) == 4);
    CodeString z = cs({2, 0, 1});
    CHECK(white_pegs(z, z) == 0);

    // brute-force permutation oracle fixes the expected value
    CodeString a = cs({1, 1, 2});
    CodeString b = cs({2, 1, 1});
    CHECK(test::permutation_white_pegs(a, b) == 2);
    CHECK(white_pegs(a, b) == 2);
}

TEST_CASE("white pegs match the permutation definition exhaustively (n<=5, k<=3)")
{
    for (int n = 1; n <= 5; ++n) {
        for (int k = 2; k <= 3; ++k) {
            auto codes = all_codes(GameParams{n, k}, 1u << 20);
            for (const auto &z : codes)
                for (const auto &x : codes) {
                    CHECK(white_pegs(z, x) == test::permutation_white_pegs(z, x));
                    CHECK(eq(z, x) + white_pegs(z, x) <= n);
                }
        }
    }
}

TEST_CASE("white pegs match the permutation definition on random pairs (n<=6, k<=4)")
{
    RandomStream rng(17);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const int k = 2 + static_cast<int>(rng.below(3));
        const GameParams params{n, k};
        CodeString z = random_code(params, rng);
        CodeString x = random_code(params, rng);
        CHECK(white_pegs(z, x) == test::permutation_white_pegs(z, x));
    }
}

TEST_CASE("text form round-trips")
{
    CHECK(to_text(cs({0, 1, 5}), 6) == "015");
    CHECK(code_from_text("015", 6) == cs({0, 1, 5}));
    CHECK(to_text(cs({0, 11, 3}), 12) == "0,11,3");
    CHECK(code_from_text("0,11,3", 12) == cs({0, 11, 3}));
    CHECK_THROWS_AS(code_from_text("091", 6), std::invalid_argument);
    CHECK_THROWS_AS(code_from_text("0,12", 12), std::invalid_argument);
    CHECK_THROWS_AS(code_from_text("ab", 6), std::invalid_argument);
}

TEST_CASE("random codes are deterministic given the seed")
{
    const GameParams params{4, 2};
    RandomStream a(42), b(42);
    CHECK(random_code(params, a) == random_code(params, b));
}

TEST_CASE("random codes have balanced color frequencies")
{
    const GameParams params{100000, 2};
    RandomStream rng(5);
    CodeString code = random_code(params, rng);
    long ones = 0;
    for (Color c : code)
        ones += c;
    const double frequency = static_cast<double>(ones) / params.n;
    CHECK(frequency > 0.48);
    CHECK(frequency < 0.52);
}

TEST_CASE("random single-position code stays in range")
{
    const GameParams params{1, 6};
    RandomStream rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        CodeString code = random_code(params, rng);
        CHECK(code.size() == 1);
        CHECK(code[0] < 6);
    }
}
