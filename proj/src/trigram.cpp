#include "plagdet/trigram.hpp"

#include <algorithm>

#include "plagdet/errors.hpp"

namespace plagdet {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t fnv1a_byte(std::uint64_t h, unsigned char byte) {
    h ^= byte;
    return h * kFnvPrime;
}

void check_same_n(const TrigramSet& a, const TrigramSet& b) {
    if (a.n != b.n)
        throw UsageError("cannot compare n-gram sets built with different n (" +
                         std::to_string(a.n) + " vs " + std::to_string(b.n) + ")");
}

}  // namespace

TrigramSet build_trigrams(const PreprocessedDocument& doc, int n) {
    if (n < 1) throw UsageError("n-gram width must be >= 1");
    TrigramSet set;
    set.doc_id = doc.id;
    set.n = n;

    const auto& tokens = doc.tokens;
    const std::size_t width = static_cast<std::size_t>(n);
    if (tokens.size() >= width) {
        set.grams.reserve(tokens.size() - width + 1);
        for (std::size_t i = 0; i + width <= tokens.size(); ++i) {
            // hash of the joined window, 0x1F between tokens
            std::uint64_t h = kFnvOffset;
            for (std::size_t j = 0; j < width; ++j) {
                if (j != 0) h = fnv1a_byte(h, 0x1F);
                h = fnv1a(h, tokens[i + j]);
            }
            set.grams.push_back(h);
        }
        std::sort(set.grams.begin(), set.grams.end());
        set.grams.erase(std::unique(set.grams.begin(), set.grams.end()), set.grams.end());
    }
    return set;
}

std::size_t overlap(const TrigramSet& a, const TrigramSet& b) {
    check_same_n(a, b);
    std::size_t count = 0;
    auto ia = a.grams.begin();
    auto ib = b.grams.begin();
    while (ia != a.grams.end() && ib != b.grams.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

double containment_pct(const TrigramSet& a, const TrigramSet& b) {
    const std::size_t denom = std::min(a.size(), b.size());
    if (denom == 0) return 0.0;
    return 100.0 * static_cast<double>(overlap(a, b)) / static_cast<double>(denom);
}

double jaccard_pct(const TrigramSet& a, const TrigramSet& b) {
    const std::size_t inter = overlap(a, b);
    const std::size_t uni = a.size() + b.size() - inter;
    if (uni == 0) return 0.0;
    return 100.0 * static_cast<double>(inter) / static_cast<double>(uni);
}

SimilarityRecord make_record(const TrigramSet& a, const TrigramSet& b) {
    const TrigramSet& first = a.doc_id <= b.doc_id ? a : b;
    const TrigramSet& second = a.doc_id <= b.doc_id ? b : a;
    SimilarityRecord rec;
    rec.doc_a = first.doc_id;
    rec.doc_b = second.doc_id;
    rec.overlap = overlap(first, second);
    rec.size_a = first.size();
    rec.size_b = second.size();
    const std::size_t min_size = std::min(rec.size_a, rec.size_b);
    rec.containment_pct =
        min_size == 0 ? 0.0
                      : 100.0 * static_cast<double>(rec.overlap) / static_cast<double>(min_size);
    const std::size_t uni = rec.size_a + rec.size_b - rec.overlap;
    rec.jaccard_pct =
        uni == 0 ? 0.0 : 100.0 * static_cast<double>(rec.overlap) / static_cast<double>(uni);
    return rec;
}

BestMatch max_similarity(const std::string& doc_id,
                         std::span<const SimilarityRecord> records) {
    BestMatch best;
    bool found = false;
    for (const auto& rec : records) {
        const std::string* partner = nullptr;
        if (rec.doc_a == doc_id)
            partner = &rec.doc_b;
        else if (rec.doc_b == doc_id)
            partner = &rec.doc_a;
        else
            continue;
        if (!found || rec.containment_pct > best.containment_pct ||
            (rec.containment_pct == best.containment_pct && *partner < best.partner)) {
            best.partner = *partner;
            best.containment_pct = rec.containment_pct;
            found = true;
        }
    }
    if (!found) throw UsageError("no pairs involve document " + doc_id);
    return best;
}

}  // namespace plagdet
