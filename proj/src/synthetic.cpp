#include <random>

#include "plagdet/engine.hpp"
#include "plagdet/errors.hpp"

namespace plagdet {

namespace {

// Pronounceable six-letter bases (three consonant-vowel syllables) keep
// the vocabulary stemmable English-like words; 'q' is reserved for
// filler tokens so vocabulary and filler never collide.
constexpr char kConsonants[] = "bcdfgklmnprstvz";  // 15
constexpr char kVowels[] = "aeiou";                // 5
constexpr std::size_t kSyllables = 15 * 5;
constexpr std::size_t kMaxBases = kSyllables * kSyllables * kSyllables;

const char* const kSuffixes[] = {"", "s", "ed", "ing", "ly", "ation", "ness", "ment"};

double next_u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t next_index(std::mt19937_64& rng, std::size_t bound) {
    const auto idx = static_cast<std::size_t>(next_u01(rng) * static_cast<double>(bound));
    return std::min(idx, bound - 1);
}

void append_syllable(std::string& word, std::size_t syllable) {
    word.push_back(kConsonants[syllable / 5]);
    word.push_back(kVowels[syllable % 5]);
}

std::string vocab_word(std::size_t index) {
    std::string word;
    append_syllable(word, index % kSyllables);
    append_syllable(word, (index / kSyllables) % kSyllables);
    append_syllable(word, (index / (kSyllables * kSyllables)) % kSyllables);
    word += kSuffixes[(index * 2654435761ULL) % 8];
    return word;
}

// Corpus-unique token: a few random letters plus a counter tail, so no
// filler ever repeats anywhere in the corpus.
std::string filler_token(std::mt19937_64& rng, std::size_t& counter) {
    std::string token = "q";
    for (int i = 0; i < 4; ++i)
        token.push_back(static_cast<char>('a' + next_index(rng, 26)));
    std::size_t value = counter++;
    for (int i = 0; i < 4; ++i) {
        token.push_back(static_cast<char>('a' + value % 26));
        value /= 26;
    }
    return token;
}

std::string render_text(const std::vector<std::string>& tokens) {
    std::string text;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        text += tokens[i];
        text += (i % 12 == 11 || i + 1 == tokens.size()) ? '\n' : ' ';
    }
    return text;
}

std::string doc_id(std::size_t group, std::size_t member) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "g%03zu_m%03zu.txt", group, member);
    return buf;
}

}  // namespace

Corpus generate_synthetic_corpus(const SyntheticSpec& spec) {
    if (spec.n_docs < 1) throw UsageError("synthetic corpus needs at least 1 document");
    if (spec.n_groups < 1 || spec.n_groups > spec.n_docs)
        throw UsageError("synthetic groups must satisfy 1 <= groups <= docs");
    if (spec.copy_rate < 0.0 || spec.copy_rate > 1.0)
        throw UsageError("copy rate must lie in [0, 1]");
    if (spec.doc_len < 1) throw UsageError("document length must be >= 1");
    if (spec.vocab_size < spec.n_groups)
        throw UsageError("vocabulary size must be >= the number of groups");
    if (spec.vocab_size > kMaxBases)
        throw UsageError("vocabulary size must be <= " + std::to_string(kMaxBases));

    std::mt19937_64 rng(spec.seed);
    std::size_t filler_counter = 0;

    const std::size_t slice = spec.vocab_size / spec.n_groups;
    const std::size_t copy_len =
        std::min(spec.doc_len,
                 static_cast<std::size_t>(spec.copy_rate * static_cast<double>(spec.doc_len) + 0.5));

    Corpus corpus;
    corpus.name = "synthetic";
    corpus.documents.reserve(spec.n_docs);

    for (std::size_t g = 0; g < spec.n_groups; ++g) {
        std::size_t members = spec.n_docs / spec.n_groups;
        if (g < spec.n_docs % spec.n_groups) ++members;

        // the group's base document, drawn from its own vocabulary slice
        std::vector<std::string> base(spec.doc_len);
        for (auto& token : base) token = vocab_word(g * slice + next_index(rng, slice));

        for (std::size_t m = 0; m < members; ++m) {
            std::vector<std::string> tokens;
            if (m == 0) {
                tokens = base;
            } else {
                tokens.assign(base.begin(),
                              base.begin() + static_cast<std::ptrdiff_t>(copy_len));
                while (tokens.size() < spec.doc_len)
                    tokens.push_back(filler_token(rng, filler_counter));
            }
            RawDocument doc;
            doc.id = doc_id(g, m);
            doc.text = render_text(tokens);
            corpus.documents.push_back(std::move(doc));
        }
    }
    return corpus;
}

}  // namespace plagdet
