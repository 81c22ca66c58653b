// random.hpp -- seeded deterministic random stream

#pragma once

#include "mastermind/types.hpp"

#include <cstdint>
#include <random>

namespace mastermind {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t &state)
{
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

/// Deterministic pseudo-random source.  The engine (mt19937_64) and every
/// derived draw are fully specified, so identical seeds give identical
/// streams on every platform.  Bounded draws use rejection sampling rather
/// than std::uniform_int_distribution, whose output is
/// implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound == 0)
            throw std::invalid_argument("RandomStream::below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % bound;
    }

    Color color(int k) { return static_cast<Color>(below(static_cast<std::uint64_t>(k))); }

    /// Uniform color different from `avoid`.
    Color color_excluding(int k, Color avoid)
    {
        auto draw = static_cast<Color>(below(static_cast<std::uint64_t>(k - 1)));
        return draw >= avoid ? static_cast<Color>(draw + 1) : draw;
    }

    std::vector<Color> fragment(std::size_t length, int k)
    {
        std::vector<Color> out(length);
        for (auto &c : out)
            c = color(k);
        return out;
    }

    CodeString code(const GameParams &params)
    {
        return CodeString(fragment(static_cast<std::size_t>(params.n), params.k));
    }

    /// Derives an independent child stream; consumes one draw from this
    /// stream, so repeated splits with distinct tags give distinct children.
    RandomStream split(std::uint64_t tag)
    {
        std::uint64_t state = next_u64() ^ (tag * 0xd1342543de82ef95ull);
        return RandomStream(detail::splitmix64(state));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Per-trial seed derivation: hash of (base seed, n, k, trial index).
inline std::uint64_t derive_seed(std::uint64_t base, int n, int k, int trial)
{
    std::uint64_t state = base;
    std::uint64_t h = detail::splitmix64(state);
    state = h ^ (static_cast<std::uint64_t>(n) << 1);
    h = detail::splitmix64(state);
    state = h ^ (static_cast<std::uint64_t>(k) << 33);
    h = detail::splitmix64(state);
    state = h ^ static_cast<std::uint64_t>(trial);
    return detail::splitmix64(state);
}

/// Uniform secret sampling for experiments; deterministic given the stream.
inline CodeString random_code(const GameParams &params, RandomStream &rng)
{
    return rng.code(params);
}

} // namespace mastermind
