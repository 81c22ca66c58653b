#include "mastermind/types.hpp"

#include <array>
#include <charconv>

namespace mastermind {

int eq(const CodeString &z, const CodeString &x)
{
    if (z.size() != x.size())
        throw std::invalid_argument("eq: length mismatch");
    int count = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        count += (z[i] == x[i]);
    return count;
}

int white_pegs(const CodeString &z, const CodeString &x)
{
    if (z.size() != x.size())
        throw std::invalid_argument("white_pegs: length mismatch");
    std::array<int, 256> count_z{};
    std::array<int, 256> count_x{};
    for (std::size_t i = 0; i < z.size(); ++i) {
        ++count_z[z[i]];
        ++count_x[x[i]];
    }
    int shared = 0;
    for (std::size_t c = 0; c < count_z.size(); ++c)
        shared += std::min(count_z[c], count_x[c]);
    return shared - eq(z, x);
}

std::string to_text(const CodeString &code, int k)
{
    std::string out;
    if (k <= 10) {
        out.reserve(code.size());
        for (Color c : code)
            out.push_back(static_cast<char>('0' + c));
    } else {
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (i)
                out.push_back(',');
            out += std::to_string(static_cast<int>(code[i]));
        }
    }
    return out;
}

CodeString code_from_text(std::string_view text, int k)
{
    std::vector<Color> entries;
    if (k <= 10) {
        entries.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("code_from_text: expected digit, got '" +
                                            std::string(1, ch) + "'");
            int value = ch - '0';
            if (value >= k)
                throw std::invalid_argument("code_from_text: color out of range");
            entries.push_back(static_cast<Color>(value));
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : comma - pos);
            int value = -1;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw std::invalid_argument("code_from_text: bad integer token");
            if (value < 0 || value >= k)
                throw std::invalid_argument("code_from_text: color out of range");
            entries.push_back(static_cast<Color>(value));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
    }
    return CodeString(std::move(entries));
}

} // namespace mastermind
