#include "mastermind/consistent.hpp"

#include "mastermind/errors.hpp"

#include <bit>
#include <cmath>

namespace mastermind {

namespace {

/// ceil with a tolerance for values that are integral up to floating noise.
int ceil_with_slack(double value)
{
    return static_cast<int>(std::ceil(value - 1e-9));
}

double pow_u64_checked(int k, int length, std::uint64_t budget)
{
    double total = 1.0;
    for (int i = 0; i < length; ++i)
        total *= k;
    if (total > static_cast<double>(budget))
        throw EnumerationBudgetError("consistent set: k^length exceeds the enumeration budget");
    return total;
}

/// Fast path for two colors: fragments are bit masks, eq is a popcount.
std::vector<CodeString> consistent_fragments_binary(const BlockEvidence &evidence,
                                                    int length)
{
    std::vector<std::uint64_t> masks;
    std::vector<int> wanted;
    masks.reserve(evidence.samples.size());
    for (const auto &sample : evidence.samples) {
        std::uint64_t mask = 0;
        for (int i = 0; i < length; ++i)
            mask = (mask << 1) | sample.fragment[static_cast<std::size_t>(i)];
        masks.push_back(mask);
        wanted.push_back(sample.contribution);
    }

    std::vector<CodeString> out;
    const std::uint64_t count = 1ull << length;
    for (std::uint64_t candidate = 0; candidate < count; ++candidate) {
        bool ok = true;
        for (std::size_t j = 0; j < masks.size(); ++j) {
            int matches = length - std::popcount(candidate ^ masks[j]);
            if (matches != wanted[j]) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        std::vector<Color> entries(static_cast<std::size_t>(length));
        for (int i = 0; i < length; ++i)
            entries[static_cast<std::size_t>(i)] =
                static_cast<Color>((candidate >> (length - 1 - i)) & 1);
        out.emplace_back(std::move(entries));
    }
    return out;
}

} // namespace

std::vector<CodeString> consistent_fragments(const BlockEvidence &evidence,
                                             int fragment_length, int k,
                                             std::uint64_t budget)
{
    if (fragment_length < 0 || k < 2)
        throw std::invalid_argument("consistent_fragments: bad arguments");
    for (const auto &sample : evidence.samples) {
        if (static_cast<int>(sample.fragment.size()) != fragment_length)
            throw std::invalid_argument("consistent_fragments: sample length mismatch");
        if (sample.contribution < 0 || sample.contribution > fragment_length)
            throw std::invalid_argument("consistent_fragments: contribution out of range");
    }
    pow_u64_checked(k, fragment_length, budget);
    if (fragment_length == 0)
        return {CodeString{}};

    if (k == 2 && fragment_length <= 62)
        return consistent_fragments_binary(evidence, fragment_length);

    std::vector<CodeString> out;
    std::vector<Color> candidate(static_cast<std::size_t>(fragment_length), 0);
    for (;;) {
        bool ok = true;
        for (const auto &sample : evidence.samples) {
            int matches = 0;
            for (int i = 0; i < fragment_length; ++i)
                matches += (candidate[static_cast<std::size_t>(i)] ==
                            sample.fragment[static_cast<std::size_t>(i)]);
            if (matches != sample.contribution) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.emplace_back(candidate);

        // lexicographic odometer, last position least significant
        int pos = fragment_length - 1;
        while (pos >= 0) {
            if (++candidate[static_cast<std::size_t>(pos)] < k)
                break;
            candidate[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
    return out;
}

int theorem_three_t(int size, int k, double eps)
{
    if (k < 2)
        throw std::invalid_argument("theorem_three_t: k must be at least 2");
    if (size <= k)
        throw std::invalid_argument("theorem_three_t: size must exceed k");
    if (eps <= 0)
        throw std::invalid_argument("theorem_three_t: eps must be positive");
    const double numerator = (2.0 + eps) * size * (1.0 + 2.0 * std::log2(double(k)));
    const double denominator = std::log2(double(size)) - std::log2(double(k));
    return ceil_with_slack(numerator / denominator);
}

double expected_consistent_size(int n, int k, double eps, int z_trials, RandomStream &rng,
                                std::uint64_t budget)
{
    if (z_trials < 1)
        throw std::invalid_argument("expected_consistent_size: need at least one trial");
    const GameParams params{n, k};
    params.validate();
    pow_u64_checked(k, n, budget);

    const int t = theorem_three_t(n, k, eps);
    double total = 0.0;
    for (int trial = 0; trial < z_trials; ++trial) {
        CodeString z = random_code(params, rng);
        BlockEvidence evidence;
        evidence.samples.reserve(static_cast<std::size_t>(t));
        for (int j = 0; j < t; ++j) {
            CodeString guess = random_code(params, rng);
            int answer = eq(z, guess);
            evidence.samples.push_back({std::move(guess), answer});
        }
        total += static_cast<double>(consistent_fragments(evidence, n, k, budget).size());
    }
    return total / z_trials;
}

double tie_probability(int d, int k)
{
    if (d < 0 || k < 2)
        throw std::invalid_argument("tie_probability: bad arguments");
    // Random walk over the eq difference: each differing position moves the
    // difference +1 with probability 1/k (guess hits the first string), -1
    // with probability 1/k (hits the second), else 0.
    std::vector<double> dist(static_cast<std::size_t>(2 * d + 1), 0.0);
    dist[static_cast<std::size_t>(d)] = 1.0; // offset d == difference 0
    const double p_hit = 1.0 / k;
    const double p_stay = double(k - 2) / k;
    for (int step = 0; step < d; ++step) {
        std::vector<double> next(dist.size(), 0.0);
        for (std::size_t i = 0; i < dist.size(); ++i) {
            if (dist[i] == 0.0)
                continue;
            if (i + 1 < dist.size())
                next[i + 1] += dist[i] * p_hit;
            if (i >= 1)
                next[i - 1] += dist[i] * p_hit;
            next[i] += dist[i] * p_stay;
        }
        dist = std::move(next);
    }
    return dist[static_cast<std::size_t>(d)];
}

double analytic_expected_consistent_size(int len, int k, int t)
{
    if (len < 0 || k < 2 || t < 0)
        throw std::invalid_argument("analytic_expected_consistent_size: bad arguments");
    double expectation = 1.0;
    double binom = 1.0; // C(len, d), updated incrementally
    for (int d = 1; d <= len; ++d) {
        binom = binom * (len - d + 1) / d;
        double others = std::pow(double(k - 1), d);
        expectation += binom * others * std::pow(tie_probability(d, k), t);
    }
    return expectation;
}

} // namespace mastermind
