// types.hpp -- colors, code strings and oracle replies

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mastermind {

/// A single peg color, one of 0 .. k-1.
using Color = std::uint8_t;

/// Game dimensions: n positions, k colors.
struct GameParams {
    int n = 4;
    int k = 2;

    void validate() const
    {
        if (n < 1)
            throw std::invalid_argument("GameParams: n must be at least 1");
        if (k < 2 || k > 200)
            throw std::invalid_argument("GameParams: k must be in [2, 200]");
    }

    bool operator==(const GameParams &) const = default;
};

/// A sequence of colors.  Full-length strings (guesses, secrets) and block
/// fragments are both represented by this type; the length carries the
/// distinction.
class CodeString {
public:
    CodeString() = default;
    explicit CodeString(std::vector<Color> entries) : entries_(std::move(entries)) {}
    CodeString(std::size_t length, Color fill) : entries_(length, fill) {}

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    Color operator[](std::size_t i) const { return entries_[i]; }
    Color &operator[](std::size_t i) { return entries_[i]; }

    const std::vector<Color> &entries() const noexcept { return entries_; }
    std::vector<Color> &entries() noexcept { return entries_; }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool operator==(const CodeString &) const = default;
    auto operator<=>(const CodeString &) const = default;

private:
    std::vector<Color> entries_;
};

/// Oracle reply: black pegs always, white pegs only where a caller asked
/// for them.  black == n implies white == 0.
struct Answer {
    int black = 0;
    std::optional<int> white;

    bool operator==(const Answer &) const = default;
};

/// Number of positions where z and x agree.  Symmetric; throws on length
/// mismatch.
int eq(const CodeString &z, const CodeString &x);

/// Number of additional pegs with the right color in the wrong position:
/// sum over colors of min(count in z, count in x), minus eq(z, x).
int white_pegs(const CodeString &z, const CodeString &x);

/// Text form: bare digits for k <= 10, comma-separated integers otherwise.
std::string to_text(const CodeString &code, int k);

/// Parses the text form; validates every entry against k.
CodeString code_from_text(std::string_view text, int k);

} // namespace mastermind
