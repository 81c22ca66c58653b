// layout.hpp -- derived layout constants for the encoding strategies, plus
// the in-string decoders (block counter, query count, part flag)

#pragma once

#include "mastermind/codec.hpp"
#include "mastermind/types.hpp"

#include <optional>
#include <string>

namespace mastermind {

enum class LayoutKind { size_two, size_one };

/// All derived constants for one encoding layout.
///
/// Field widths: `ln` holds any answer in [0..n], `ls` holds any block
/// contribution in [0..s] and the block counter.  `t` is the number of
/// random samples recorded per block.  The construction functions pick `s`
/// and `t` (and `b` for the one-cell layout) to minimize an estimated query
/// count subject to three hard bounds: the storage region of one string,
/// the Theorem-style sample count for the block length (never exceeded),
/// and the fragment-enumeration budget.  At dimensions where no block
/// layout fits, `degenerate` is set and the owning strategy falls back to
/// its position-by-position linear mode.
struct LayoutParams {
    LayoutKind kind = LayoutKind::size_two;
    int n = 0;
    int k = 2;
    int s = 0;         ///< block length
    int ln = 0;        ///< answer field width
    int l = 0;         ///< ln + 1: status bit plus answer field
    int ls = 0;        ///< contribution / block-counter field width
    int t = 0;         ///< samples recorded per block
    int t_theorem = 0; ///< sample count the asymptotic bound asks for
    int b = 0;         ///< one-cell layout: number of sampled blocks
    double epsilon = 1.0;
    double big_k = 10.0;
    bool degenerate = false;

    int num_blocks() const;

    /// 1-based positions of block i (1-based i).  Two-cell layout: blocks
    /// tile [1 .. n-1], the last one may be short.  One-cell layout: blocks
    /// tile [l+1 .. l+b*s].
    Block block(int i) const;

    /// Two-cell storage: positions one record occupies.
    int record_stride(int block_len) const { return block_len + ln + 1; }

    // One-cell storage geometry (1-based first positions).
    int prefix_copy_first() const { return l + b * s + 1; }
    int refs_first() const { return 2 * l + b * s + 1; }
    int ref_record_width() const { return 2 * ln + 1; }
    int records_first() const { return refs_first() + (k - 1) * ref_record_width(); }
    int sample_record_width() const { return ln + s + ls + 1; }
    int counter_first() const { return n - ls - 1; }
    int p1_limit() const { return kind == LayoutKind::size_two ? n - 1 : n - ls - 3; }

    /// One-cell layout: exact position count the storage structure needs.
    int storage_requirement() const;

    std::string describe() const;

    /// Builds the two-cell layout.  `s_override` forces the block length.
    static LayoutParams size_two(const GameParams &params, double eps,
                                 std::optional<int> s_override = std::nullopt);

    /// Builds the one-cell layout.  `big_k` is the head-room constant in the
    /// block-count bound b <= floor(((n-2)/s) (1 - K/log2 n)).
    static LayoutParams size_one(const GameParams &params, double eps, double big_k,
                                 std::optional<int> s_override = std::nullopt);
};

/// Decoded block counter: first ln entries of a two-cell storage string.
int block_index_size_two(const CodeString &x, const LayoutParams &layout);

/// Decoded block counter: positions n-ls-1 .. n-2 of a one-cell string.
int block_index_size_one(const CodeString &x, const LayoutParams &layout);

/// Number of records stored for the current block of a two-cell storage
/// string; 0 on an empty store.  Offsets off a record boundary raise
/// LayoutCorruptionError.
int query_count_size_two(const CodeString &x, const LayoutParams &layout);

/// Guess counter decoded from a one-cell string in its sampling phase:
/// 0/1 before any reference record exists (split by the status bit),
/// reference-record states up to k, then k + (number of sample records).
int query_count_size_one(const CodeString &x, const LayoutParams &layout);

/// 1 iff the information of sampling string y (with oracle reply
/// `answer_y`) is already present as the last record of storage string x.
int part_flag(const CodeString &y, int answer_y, const CodeString &x,
              const LayoutParams &layout);

} // namespace mastermind
