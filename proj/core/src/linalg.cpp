#include "mastermind/strategies/linalg.hpp"

#include "mastermind/codec.hpp"
#include "mastermind/errors.hpp"

namespace mastermind {

namespace {

int checked_tail(const CodeString &x)
{
    const int tn = tail_number(x);
    if (tn >= static_cast<int>(x.size()))
        throw ContractViolationError("lin_alg: tail number must be below n");
    return tn;
}

} // namespace

CodeString lin_alg_vary_k2(const CodeString &x, RandomStream &rng)
{
    const int tn = checked_tail(x);
    CodeString y = x;
    if (rng.below(2) == 0) {
        y[static_cast<std::size_t>(tn - 1)] ^= 1;
    } else {
        for (std::size_t i = static_cast<std::size_t>(tn); i < y.size(); ++i)
            y[i] ^= 1;
    }
    return y;
}

bool lin_alg_keep_k2(const CodeString &x, int answer_x, const CodeString &y, int answer_y)
{
    const int tn = checked_tail(x);
    if (y[static_cast<std::size_t>(tn - 1)] != x[static_cast<std::size_t>(tn - 1)])
        return answer_y > answer_x; // single flip at the frontier
    return answer_x + answer_y == static_cast<int>(x.size()) + tn; // tail flip
}

CodeString lin_alg_vary_k3(const CodeString &x, int k, RandomStream &rng)
{
    const int tn = checked_tail(x);
    CodeString y = x;
    if (rng.below(static_cast<std::uint64_t>(k)) != 0) {
        // recolor the frontier position
        y[static_cast<std::size_t>(tn - 1)] =
            rng.color_excluding(k, x[static_cast<std::size_t>(tn - 1)]);
    } else {
        // re-mark the tail; the new color differs from position tn-1 so the
        // tail number is preserved
        Color mark = tn >= 2 ? rng.color_excluding(k, x[static_cast<std::size_t>(tn - 2)])
                             : rng.color(k);
        for (std::size_t i = static_cast<std::size_t>(tn - 1); i < y.size(); ++i)
            y[i] = mark;
    }
    return y;
}

bool lin_alg_keep_k3(const CodeString &x, int answer_x, const CodeString &y, int answer_y)
{
    const int tn = checked_tail(x);
    bool single = true;
    for (std::size_t i = 0; i < x.size() && single; ++i) {
        if (x[i] != y[i] && static_cast<int>(i) != tn - 1)
            single = false;
    }
    if (single && y[static_cast<std::size_t>(tn - 1)] != x[static_cast<std::size_t>(tn - 1)])
        return answer_y > answer_x; // recolor of the frontier position
    return true;                    // tail re-mark (possibly a no-op repaint): always kept
}

CodeString lin_alg_vary(const CodeString &x, int k, RandomStream &rng)
{
    return k == 2 ? lin_alg_vary_k2(x, rng) : lin_alg_vary_k3(x, k, rng);
}

bool lin_alg_keep(const CodeString &x, int answer_x, const CodeString &y, int answer_y, int k)
{
    return k == 2 ? lin_alg_keep_k2(x, answer_x, y, answer_y)
                  : lin_alg_keep_k3(x, answer_x, y, answer_y);
}

CodeString linear_mode_vary(const GameParams &params, const MemoryState &memory,
                            RandomStream &rng)
{
    const auto n = static_cast<std::size_t>(params.n);
    if (memory.empty())
        return CodeString(n, rng.color(params.k));

    const auto &[x, answer] = memory.pair(0);
    const int tn = tail_number(x);
    if (params.n >= 2 && tn <= params.n - 2)
        return lin_alg_vary(x, params.k, rng);

    // endgame: all but the last two positions are determined
    const auto pairs = static_cast<std::uint64_t>(params.k) * params.k;
    const Color last1 = x[n - 2];
    const Color last2 = x[n - 1];
    const std::uint64_t current =
        static_cast<std::uint64_t>(last1) * params.k + last2;
    std::uint64_t draw = rng.below(pairs - 1);
    if (draw >= current)
        ++draw;
    CodeString y = x;
    y[n - 2] = static_cast<Color>(draw / params.k);
    y[n - 1] = static_cast<Color>(draw % params.k);
    return y;
}

MemoryState linear_mode_select(const GameParams &params, const MemoryState &memory,
                               const MemoryPair &incoming)
{
    MemoryState next(memory.capacity());
    if (memory.empty()) {
        next.push(incoming);
        return next;
    }
    const auto &[x, answer] = memory.pair(0);
    const int tn = tail_number(x);
    bool keep_new;
    if (params.n >= 2 && tn <= params.n - 2)
        keep_new = lin_alg_keep(x, answer.black, incoming.guess, incoming.answer.black, params.k);
    else
        keep_new = incoming.answer.black == params.n;
    next.push(keep_new ? incoming : memory.pair(0));
    return next;
}

int linear_mode_phase(const GameParams &params, const MemoryState &memory)
{
    if (memory.empty())
        return 0;
    const int tn = tail_number(memory.pair(0).guess);
    if (params.n >= 2 && tn <= params.n - 2)
        return 2;
    return 3;
}

} // namespace mastermind
