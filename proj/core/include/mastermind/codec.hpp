// codec.hpp -- deterministic string bookkeeping shared by the encoding
// strategies: tail number, last-one position, binary fields, block
// substitution.
//
// Every position in this API is 1-based, matching the layout arithmetic the
// encoding strategies are specified in.  CodeString indexing stays 0-based;
// the conversion lives here and nowhere else.

#pragma once

#include "mastermind/types.hpp"

#include <vector>

namespace mastermind {

/// Inclusive 1-based position interval.  first > last denotes an empty block.
struct Block {
    int first = 1;
    int last = 0;

    int size() const noexcept { return last >= first ? last - first + 1 : 0; }
    bool contains(int pos) const noexcept { return pos >= first && pos <= last; }

    bool operator==(const Block &) const = default;
};

/// Smallest index i such that x_i = x_{i+1} = ... = x_n.  1 for constant
/// strings; n when the last two entries differ.
int tail_number(const CodeString &x);

/// Largest position i <= limit with x_i = 1, or 0 when no such position
/// exists.  The 0 sentinel sits below every valid position, so "p1 <= bound"
/// comparisons treat an empty store correctly.
int last_one_pos(const CodeString &x, int limit);

/// Big-endian fixed-width binary field: the last entry is the 2^0 digit.
/// Requires 0 <= value < 2^width.
std::vector<Color> binary_encode(int value, int width);

/// Decodes `width` entries of x starting at 1-based position `first`.
/// Entries other than 0/1 raise LayoutCorruptionError.
int binary_decode(const CodeString &x, int first, int width);

/// Copy of x with block B replaced by `replacement` (|replacement| = |B|).
CodeString substitute_block(const CodeString &x, const Block &block,
                            const CodeString &replacement);

/// Copy of x with the single position `pos` set to color c.
CodeString substitute_position(const CodeString &x, int pos, Color c);

/// The entries of x at positions B.
CodeString block_of(const CodeString &x, const Block &block);

/// Writes `values` into x starting at 1-based position `first` (in place).
void write_entries(CodeString &x, int first, const std::vector<Color> &values);

} // namespace mastermind
