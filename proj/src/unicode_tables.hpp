// Lookup tables generated from the Unicode character database.
// See tools/gen_unicode_tables.py.

#pragma once

#include <cstddef>
#include <cstdint>

namespace plagdet::unitab {

struct Range {
    char32_t lo;
    char32_t hi;
};

struct LowerPair {
    char32_t cp;
    char32_t lower;
};

struct LowerExpand {
    char32_t cp;
    char32_t out[3];
    std::uint8_t len;
};

extern const Range kPunctSymbol[];
extern const std::size_t kPunctSymbolCount;

extern const Range kWhitespace[];
extern const std::size_t kWhitespaceCount;

extern const LowerPair kLowerSingle[];
extern const std::size_t kLowerSingleCount;

extern const LowerExpand kLowerExpand[];
extern const std::size_t kLowerExpandCount;

}  // namespace plagdet::unitab
