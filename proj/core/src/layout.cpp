#include "mastermind/layout.hpp"

#include "mastermind/consistent.hpp"
#include "mastermind/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace mastermind {

namespace {

int ceil_log2(int value)
{
    int bits = 0;
    while ((1 << bits) < value)
        ++bits;
    return bits;
}

int answer_field_width(int n) { return ceil_log2(n) + 1; }

int floor_with_slack(double value) { return static_cast<int>(std::floor(value + 1e-9)); }

/// Largest fragment length whose k^s enumeration stays fast enough to run
/// inside a strategy (the per-operation budget is separate and larger).
int strategy_fragment_cap(int k, LayoutKind kind)
{
    (void)kind;
    if (k == 2)
        return 20;
    double total = 1.0;
    int s = 0;
    while (total * k <= 600000.0 && s < 20) {
        total *= k;
        ++s;
    }
    return s;
}

/// Expected guesses spent on one block of length `len`: one transition
/// store, a guess plus a store for each non-free record, and the expected
/// number of resolution draws.
double block_cost(int len, int k, int t)
{
    return 1.0 + 2.0 * (k - 1 + t) + analytic_expected_consistent_size(len, k, t);
}

} // namespace

int LayoutParams::num_blocks() const
{
    if (kind == LayoutKind::size_two)
        return s > 0 ? (n - 2) / s + 1 : 0; // ceil((n-1)/s)
    return b;
}

Block LayoutParams::block(int i) const
{
    if (i < 1 || i > num_blocks())
        throw std::invalid_argument("LayoutParams::block: index out of range");
    if (kind == LayoutKind::size_two)
        return Block{(i - 1) * s + 1, std::min(i * s, n - 1)};
    return Block{l + (i - 1) * s + 1, l + i * s};
}

int LayoutParams::storage_requirement() const
{
    if (kind != LayoutKind::size_one)
        throw std::invalid_argument("storage_requirement: one-cell layouts only");
    return 1 + ln + b * s + l + (k - 1) * (2 * ln + 1) + t * (ln + s + ls + 1) + ls + 2;
}

std::string LayoutParams::describe() const
{
    std::ostringstream out;
    out << (kind == LayoutKind::size_two ? "layout=size-two" : "layout=size-one");
    if (degenerate) {
        out << " mode=linear (no feasible block layout at n=" << n << " k=" << k << ")";
        return out.str();
    }
    out << " n=" << n << " k=" << k << " s=" << s << " t=" << t
        << " t_theorem=" << t_theorem << " ln=" << ln << " l=" << l << " ls=" << ls;
    if (kind == LayoutKind::size_one)
        out << " b=" << b << " storage=" << storage_requirement();
    else
        out << " blocks=" << num_blocks();
    out << " epsilon=" << epsilon;
    if (kind == LayoutKind::size_one)
        out << " K=" << big_k;
    return out.str();
}

LayoutParams LayoutParams::size_two(const GameParams &params, double eps,
                                    std::optional<int> s_override)
{
    params.validate();
    if (eps <= 0)
        throw std::invalid_argument("LayoutParams::size_two: eps must be positive");

    LayoutParams layout;
    layout.kind = LayoutKind::size_two;
    layout.n = params.n;
    layout.k = params.k;
    layout.ln = answer_field_width(params.n);
    layout.l = layout.ln + 1;
    layout.epsilon = eps;

    const int n = params.n;
    const int k = params.k;
    const int ln = layout.ln;
    const int cap = strategy_fragment_cap(k, LayoutKind::size_two);

    int s_lo = k + 1;
    int s_hi = std::min(cap, n - 2);
    if (s_override) {
        if (*s_override <= k)
            throw InfeasibleLayoutError("size_two: block length must exceed k");
        s_lo = s_hi = *s_override;
    }

    double best_cost = std::numeric_limits<double>::infinity();
    for (int s = s_lo; s <= s_hi; ++s) {
        // All t + k records of one block must fit after the block counter,
        // inside positions 1 .. n-1.
        const int t_fit = (n - 1 - ln) / (s + ln + 1) - k;
        if (t_fit < 1)
            continue;
        const int t_upper = std::min(t_fit, theorem_three_t(s, k, eps));
        const int blocks = (n - 2) / s + 1;
        for (int t = 1; t <= t_upper; ++t) {
            double cost = blocks * block_cost(s, k, t);
            if (cost < best_cost) {
                best_cost = cost;
                layout.s = s;
                layout.t = t;
            }
        }
    }

    if (!std::isfinite(best_cost)) {
        if (s_override)
            throw InfeasibleLayoutError("size_two: no record layout fits with s=" +
                                        std::to_string(*s_override));
        layout.degenerate = true;
        return layout;
    }

    layout.ls = ceil_log2(layout.s) + 1;
    layout.t_theorem = theorem_three_t(layout.s, k, eps);
    return layout;
}

LayoutParams LayoutParams::size_one(const GameParams &params, double eps, double big_k,
                                    std::optional<int> s_override)
{
    params.validate();
    if (eps <= 0)
        throw std::invalid_argument("LayoutParams::size_one: eps must be positive");

    LayoutParams layout;
    layout.kind = LayoutKind::size_one;
    layout.n = params.n;
    layout.k = params.k;
    layout.ln = answer_field_width(params.n);
    layout.l = layout.ln + 1;
    layout.epsilon = eps;
    layout.big_k = big_k;

    const int n = params.n;
    const int k = params.k;
    const int ln = layout.ln;
    const int l = layout.l;
    const int cap = std::min(strategy_fragment_cap(k, LayoutKind::size_one),
                             static_cast<int>(std::ceil(std::sqrt(double(n)))));

    int s_lo = k + 1;
    int s_hi = std::min(cap, n - 2);
    if (s_override) {
        if (*s_override <= k)
            throw InfeasibleLayoutError("size_one: block length must exceed k");
        s_lo = s_hi = *s_override;
    }

    // Expected linear-mode cost per position; sampling a block is only
    // worthwhile when it beats this.
    const double linear_per_position = k == 2 ? 2.0 : 4.5;

    double best_saving = 0.0;
    for (int s = s_lo; s <= s_hi; ++s) {
        const int ls0 = ceil_log2(s) + 1;
        const int t_upper = theorem_three_t(s, k, eps);
        for (int t = 1; t <= t_upper; ++t) {
            // The counter field must also hold b + 1; widening it trades
            // storage for more blocks, so try a few widths.
            for (int ls = ls0; ls <= std::min(ls0 + 6, ln); ++ls) {
                const int fixed = 1 + ln + l + (k - 1) * (2 * ln + 1) +
                                  t * (ln + s + ls + 1) + ls + 2;
                // <= n-1 keeps the trailing record marker below the p1 scan
                // limit n - ls - 3.
                const int b_storage = (n - 1 - fixed) / s;
                const int b_bound = floor_with_slack(
                    (double(n - 2) / s) * (1.0 - big_k / std::log2(double(n))));
                const int b_counter = (1 << ls) - 2;
                const int b = std::min({b_storage, b_bound, b_counter});
                if (b < 1)
                    continue;
                const double saving = b * (linear_per_position * s - block_cost(s, k, t));
                if (saving > best_saving) {
                    best_saving = saving;
                    layout.s = s;
                    layout.t = t;
                    layout.ls = ls;
                    layout.b = b;
                }
            }
        }
    }

    if (layout.b < 1) {
        layout.degenerate = true;
        layout.b = 0;
        return layout;
    }

    layout.t_theorem = theorem_three_t(layout.s, k, eps);
    if (layout.storage_requirement() > n - 1)
        throw InfeasibleLayoutError("size_one: storage requirement exceeds n - 1");
    return layout;
}

int block_index_size_two(const CodeString &x, const LayoutParams &layout)
{
    return binary_decode(x, 1, layout.ln);
}

int block_index_size_one(const CodeString &x, const LayoutParams &layout)
{
    return binary_decode(x, layout.counter_first(), layout.ls);
}

int query_count_size_two(const CodeString &x, const LayoutParams &layout)
{
    const int i = block_index_size_two(x, layout);
    const int p1 = last_one_pos(x, layout.n - 1);
    if (p1 <= layout.ln)
        return 0; // empty store: only counter bits, if any
    if (i < 1 || i > layout.num_blocks())
        throw LayoutCorruptionError("query_count_size_two: counter out of range");
    const int stride = layout.record_stride(layout.block(i).size());
    const int offset = p1 - layout.ln;
    if (offset % stride != 0)
        throw LayoutCorruptionError("query_count_size_two: offset off a record boundary");
    const int q = offset / stride;
    if (q < 1 || q > layout.t + layout.k)
        throw LayoutCorruptionError("query_count_size_two: record count out of range");
    return q;
}

int query_count_size_one(const CodeString &x, const LayoutParams &layout)
{
    const Color status = x[0];
    if (status > 1)
        throw LayoutCorruptionError("query_count_size_one: status entry not 0/1");
    const int p1 = last_one_pos(x, layout.p1_limit());
    const int refs_base = layout.refs_first() - 1; // == 2l + bs
    if (p1 <= refs_base)
        return status;

    const int ref_width = layout.ref_record_width();
    const int refs_span = (layout.k - 1) * ref_width;
    int offset = p1 - refs_base;
    if (offset <= refs_span) {
        if (offset % ref_width != 0)
            throw LayoutCorruptionError("query_count_size_one: reference record misaligned");
        const int c = offset / ref_width;
        return c < layout.k - 1 ? c + 1 : layout.k;
    }
    offset -= refs_span;
    const int stride = layout.sample_record_width();
    if (offset % stride != 0)
        throw LayoutCorruptionError("query_count_size_one: sample record misaligned");
    const int j = offset / stride;
    if (j < 1 || j > layout.t)
        throw LayoutCorruptionError("query_count_size_one: record count out of range");
    return layout.k + j;
}

int part_flag(const CodeString &y, int answer_y, const CodeString &x,
              const LayoutParams &layout)
{
    const int p1 = last_one_pos(x, layout.n - 1);
    if (p1 <= layout.ln)
        return 0;
    const int i = block_index_size_two(x, layout);
    const Block block = layout.block(i);
    const int len = block.size();
    const int answer_first = p1 - layout.ln;
    const int fragment_first = answer_first - len;
    if (fragment_first < 1)
        throw LayoutCorruptionError("part_flag: record does not fit before marker");
    if (binary_decode(x, answer_first, layout.ln) != answer_y)
        return 0;
    return block_of(x, Block{fragment_first, answer_first - 1}) == block_of(y, block) ? 1 : 0;
}

} // namespace mastermind
