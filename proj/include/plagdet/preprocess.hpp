#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "plagdet/corpus.hpp"

namespace plagdet {

using StopwordSet = std::unordered_set<std::string>;

struct PreprocessConfig {
    StopwordSet stopwords;            // must be lowercase, delimiter-free
    bool stemming_enabled = false;
    std::size_t min_token_length = 1; // in codepoints

    PreprocessConfig();  // starts from the bundled stop-word list
};

/// Ordered, normalized token sequence of one document.
struct PreprocessedDocument {
    std::string id;
    std::vector<std::string> tokens;
};

/// Unicode-aware lowercasing; nothing else changes.
std::string normalize_case(std::string_view text);

/// Replaces every punctuation or symbol character (Unicode categories P*
/// and S*) with a single space. Letters, digits and whitespace pass
/// through. Replacing rather than deleting keeps "end.start" two words.
std::string strip_delimiters(std::string_view text);

/// Splits on runs of whitespace (newlines included; line boundaries do
/// not survive). Tokens shorter than `min_token_length` codepoints are
/// dropped.
std::vector<std::string> tokenize(std::string_view text, std::size_t min_token_length = 1);

/// Keeps input order; drops every token found in `stopwords`.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopwordSet& stopwords);

/// The full pipeline: lowercase, strip delimiters, tokenize, drop stop
/// words, optionally stem.
PreprocessedDocument preprocess(const RawDocument& doc, const PreprocessConfig& cfg);

/// The bundled list of common English function words (~120 entries).
const StopwordSet& default_stopwords();

/// Reads a stop-word file: UTF-8, one word per line, '#' comments and
/// blank lines ignored. Entries are lowercased; an entry that would not
/// survive the preprocessing pipeline as a single token is a UsageError.
StopwordSet load_stopwords(const std::filesystem::path& path);

}  // namespace plagdet
