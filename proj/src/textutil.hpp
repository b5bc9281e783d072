// UTF-8 decoding and Unicode character classes used by the preprocess
// pipeline. Internal to the library.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace plagdet::textutil {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

struct Decoded {
    char32_t cp;        // kInvalid for a malformed sequence
    std::size_t length; // bytes consumed (>= 1)
};

/// Decodes the codepoint starting at `pos`. Rejects overlong forms,
/// surrogates and out-of-range values; a malformed sequence consumes one
/// byte and yields kInvalid.
Decoded decode_utf8(std::string_view text, std::size_t pos);

void append_utf8(std::string& out, char32_t cp);

/// Byte offset of the first malformed sequence, or npos if valid.
std::size_t find_invalid_utf8(std::string_view text);

bool is_punct_or_symbol(char32_t cp);
bool is_whitespace(char32_t cp);

/// Lowercases one codepoint into `out` (usually one codepoint; U+0130
/// expands to two).
void append_lowered(std::string& out, char32_t cp);

/// Codepoint count of a valid UTF-8 string.
std::size_t codepoint_count(std::string_view text);

}  // namespace plagdet::textutil
