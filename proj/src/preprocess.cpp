#include "plagdet/preprocess.hpp"

#include <fstream>

#include "plagdet/errors.hpp"
#include "plagdet/stemmer.hpp"
#include "textutil.hpp"

namespace plagdet {

namespace {

// Common English function words. Overridable via load_stopwords.
constexpr const char* kDefaultStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an", "and",
    "any", "are", "as", "at", "be", "because", "been", "before", "being", "below",
    "between", "both", "but", "by", "can", "cannot", "could", "did", "do", "does",
    "doing", "down", "during", "each", "few", "for", "from", "further", "had", "has",
    "have", "having", "he", "her", "here", "hers", "herself", "him", "himself", "his",
    "how", "i", "if", "in", "into", "is", "it", "its", "itself", "just",
    "me", "more", "most", "my", "myself", "no", "nor", "not", "now", "of",
    "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves", "out",
    "over", "own", "same", "she", "should", "so", "some", "such", "than", "that",
    "the", "their", "theirs", "them", "themselves", "then", "there", "these", "they", "this",
    "those", "through", "to", "too", "under", "until", "up", "very", "was", "we",
    "were", "what", "when", "where", "which", "while", "who", "whom", "why", "will",
    "with", "would", "you", "your", "yours", "yourself", "yourselves",
};

// A stop-word entry must already look like a pipeline token.
bool is_clean_token(std::string_view word) {
    if (word.empty()) return false;
    std::size_t pos = 0;
    while (pos < word.size()) {
        const auto d = textutil::decode_utf8(word, pos);
        if (d.cp == textutil::kInvalid) return false;
        if (textutil::is_whitespace(d.cp) || textutil::is_punct_or_symbol(d.cp)) return false;
        pos += d.length;
    }
    return normalize_case(word) == word;
}

}  // namespace

PreprocessConfig::PreprocessConfig() : stopwords(default_stopwords()) {}

const StopwordSet& default_stopwords() {
    static const StopwordSet set(std::begin(kDefaultStopwords), std::end(kDefaultStopwords));
    return set;
}

std::string normalize_case(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto d = textutil::decode_utf8(text, pos);
        if (d.cp == textutil::kInvalid)
            textutil::append_utf8(out, 0xFFFD);
        else
            textutil::append_lowered(out, d.cp);
        pos += d.length;
    }
    return out;
}

std::string strip_delimiters(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto d = textutil::decode_utf8(text, pos);
        if (d.cp == textutil::kInvalid || textutil::is_punct_or_symbol(d.cp))
            out.push_back(' ');
        else
            textutil::append_utf8(out, d.cp);
        pos += d.length;
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text, std::size_t min_token_length) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t current_cps = 0;

    auto flush = [&] {
        if (!current.empty() && current_cps >= min_token_length) tokens.push_back(current);
        current.clear();
        current_cps = 0;
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto d = textutil::decode_utf8(text, pos);
        if (d.cp != textutil::kInvalid && textutil::is_whitespace(d.cp)) {
            flush();
        } else if (d.cp == textutil::kInvalid) {
            textutil::append_utf8(current, 0xFFFD);
            ++current_cps;
        } else {
            textutil::append_utf8(current, d.cp);
            ++current_cps;
        }
        pos += d.length;
    }
    flush();
    return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const StopwordSet& stopwords) {
    if (stopwords.empty()) return tokens;
    std::erase_if(tokens, [&](const std::string& t) { return stopwords.contains(t); });
    return tokens;
}

PreprocessedDocument preprocess(const RawDocument& doc, const PreprocessConfig& cfg) {
    PreprocessedDocument out;
    out.id = doc.id;
    out.tokens = remove_stopwords(
        tokenize(strip_delimiters(normalize_case(doc.text)), cfg.min_token_length),
        cfg.stopwords);
    if (cfg.stemming_enabled) out.tokens = stem_tokens(std::move(out.tokens));
    return out;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stop-word file: " + path.string());

    StopwordSet set;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
        line.erase(0, start);
        if (line.empty()) continue;

        std::string word = normalize_case(line);
        if (!is_clean_token(word)) {
            throw UsageError("stop-word file " + path.string() + " line " +
                             std::to_string(lineno) + ": invalid entry \"" + line + "\"");
        }
        set.insert(std::move(word));
    }
    if (in.bad()) throw IoError("read failure on stop-word file: " + path.string());
    return set;
}

}  // namespace plagdet
