#include "mastermind/codec.hpp"

#include "mastermind/errors.hpp"

namespace mastermind {

int tail_number(const CodeString &x)
{
    const int n = static_cast<int>(x.size());
    if (n == 0)
        throw std::invalid_argument("tail_number: empty string");
    int i = n;
    while (i > 1 && x[static_cast<std::size_t>(i - 2)] == x[static_cast<std::size_t>(i - 1)])
        --i;
    return i;
}

int last_one_pos(const CodeString &x, int limit)
{
    if (limit >= static_cast<int>(x.size()))
        throw std::invalid_argument("last_one_pos: limit must be below the string length");
    for (int pos = limit; pos >= 1; --pos)
        if (x[static_cast<std::size_t>(pos - 1)] == 1)
            return pos;
    return 0;
}

std::vector<Color> binary_encode(int value, int width)
{
    if (width < 0 || width > 30)
        throw std::invalid_argument("binary_encode: bad width");
    if (value < 0 || (value >> width) != 0)
        throw std::invalid_argument("binary_encode: value out of range for width");
    std::vector<Color> out(static_cast<std::size_t>(width), 0);
    for (int bit = 0; bit < width; ++bit)
        out[static_cast<std::size_t>(width - 1 - bit)] = static_cast<Color>((value >> bit) & 1);
    return out;
}

int binary_decode(const CodeString &x, int first, int width)
{
    if (first < 1 || first + width - 1 > static_cast<int>(x.size()))
        throw std::invalid_argument("binary_decode: field out of bounds");
    int value = 0;
    for (int i = 0; i < width; ++i) {
        Color digit = x[static_cast<std::size_t>(first - 1 + i)];
        if (digit > 1)
            throw LayoutCorruptionError("binary_decode: non-binary digit in field");
        value = (value << 1) | digit;
    }
    return value;
}

CodeString substitute_block(const CodeString &x, const Block &block,
                            const CodeString &replacement)
{
    if (block.first < 1 || block.last > static_cast<int>(x.size()))
        throw std::invalid_argument("substitute_block: block out of bounds");
    if (static_cast<int>(replacement.size()) != block.size())
        throw std::invalid_argument("substitute_block: replacement length != block size");
    CodeString out = x;
    for (int i = 0; i < block.size(); ++i)
        out[static_cast<std::size_t>(block.first - 1 + i)] = replacement[static_cast<std::size_t>(i)];
    return out;
}

CodeString substitute_position(const CodeString &x, int pos, Color c)
{
    if (pos < 1 || pos > static_cast<int>(x.size()))
        throw std::invalid_argument("substitute_position: position out of bounds");
    CodeString out = x;
    out[static_cast<std::size_t>(pos - 1)] = c;
    return out;
}

CodeString block_of(const CodeString &x, const Block &block)
{
    if (block.size() == 0)
        return CodeString{};
    if (block.first < 1 || block.last > static_cast<int>(x.size()))
        throw std::invalid_argument("block_of: block out of bounds");
    std::vector<Color> out;
    out.reserve(static_cast<std::size_t>(block.size()));
    for (int pos = block.first; pos <= block.last; ++pos)
        out.push_back(x[static_cast<std::size_t>(pos - 1)]);
    return CodeString(std::move(out));
}

void write_entries(CodeString &x, int first, const std::vector<Color> &values)
{
    if (first < 1 || first - 1 + static_cast<int>(values.size()) > static_cast<int>(x.size()))
        throw std::invalid_argument("write_entries: range out of bounds");
    for (std::size_t i = 0; i < values.size(); ++i)
        x[static_cast<std::size_t>(first - 1) + i] = values[i];
}

} // namespace mastermind
