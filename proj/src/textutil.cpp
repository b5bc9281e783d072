#include "textutil.hpp"

#include <algorithm>

#include "unicode_tables.hpp"

namespace plagdet::textutil {

namespace {

bool in_ranges(const unitab::Range* ranges, std::size_t count, char32_t cp) {
    const unitab::Range* end = ranges + count;
    auto it = std::upper_bound(ranges, end, cp, [](char32_t value, const unitab::Range& r) {
        return value < r.lo;
    });
    if (it == ranges) return false;
    --it;
    return cp >= it->lo && cp <= it->hi;
}

}  // namespace

Decoded decode_utf8(std::string_view text, std::size_t pos) {
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
    const unsigned char b0 = byte(pos);
    if (b0 < 0x80) return {b0, 1};

    std::size_t len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return {kInvalid, 1};
    }
    if (pos + len > text.size()) return {kInvalid, 1};
    for (std::size_t i = 1; i < len; ++i) {
        const unsigned char b = byte(pos + i);
        if ((b & 0xC0) != 0x80) return {kInvalid, 1};
        cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMinForLen[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLen[len]) return {kInvalid, 1};            // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) return {kInvalid, 1};    // surrogate
    if (cp > 0x10FFFF) return {kInvalid, 1};
    return {cp, len};
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::size_t find_invalid_utf8(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        const Decoded d = decode_utf8(text, pos);
        if (d.cp == kInvalid) return pos;
        pos += d.length;
    }
    return std::string_view::npos;
}

bool is_punct_or_symbol(char32_t cp) {
    return in_ranges(unitab::kPunctSymbol, unitab::kPunctSymbolCount, cp);
}

bool is_whitespace(char32_t cp) {
    return in_ranges(unitab::kWhitespace, unitab::kWhitespaceCount, cp);
}

void append_lowered(std::string& out, char32_t cp) {
    for (std::size_t i = 0; i < unitab::kLowerExpandCount; ++i) {
        if (unitab::kLowerExpand[i].cp == cp) {
            for (std::uint8_t j = 0; j < unitab::kLowerExpand[i].len; ++j)
                append_utf8(out, unitab::kLowerExpand[i].out[j]);
            return;
        }
    }
    const unitab::LowerPair* begin = unitab::kLowerSingle;
    const unitab::LowerPair* end = begin + unitab::kLowerSingleCount;
    auto it = std::lower_bound(begin, end, cp, [](const unitab::LowerPair& p, char32_t value) {
        return p.cp < value;
    });
    if (it != end && it->cp == cp)
        append_utf8(out, it->lower);
    else
        append_utf8(out, cp);
}

std::size_t codepoint_count(std::string_view text) {
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        pos += decode_utf8(text, pos).length;
        ++n;
    }
    return n;
}

}  // namespace plagdet::textutil
