#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plagdet/preprocess.hpp"

namespace plagdet {

/// The distinct word n-grams of one document, stored as 64-bit hashes of
/// the joined tokens (0x1F separator). Sorted, duplicates collapsed.
struct TrigramSet {
    std::string doc_id;
    int n = 3;
    std::vector<std::uint64_t> grams;

    std::size_t size() const { return grams.size(); }
};

/// Sliding window of width n over the whole token stream; a sequence
/// shorter than n yields the empty set.
TrigramSet build_trigrams(const PreprocessedDocument& doc, int n = 3);

/// |grams_a ∩ grams_b|. Throws UsageError if the sets were built with
/// different n.
std::size_t overlap(const TrigramSet& a, const TrigramSet& b);

/// 100 * overlap / min(|a|, |b|); 0 when either set is empty. The primary
/// "percentage of plagiarism" score: a short document fully contained in
/// a longer one scores 100.
double containment_pct(const TrigramSet& a, const TrigramSet& b);

/// 100 * overlap / |a ∪ b|; 0 when both sets are empty. Secondary,
/// diagnostic score; never exceeds containment.
double jaccard_pct(const TrigramSet& a, const TrigramSet& b);

/// One compared pair. doc_a < doc_b lexicographically.
struct SimilarityRecord {
    std::string doc_a;
    std::string doc_b;
    std::size_t overlap = 0;
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    double containment_pct = 0.0;
    double jaccard_pct = 0.0;

    bool operator==(const SimilarityRecord&) const = default;
};

SimilarityRecord make_record(const TrigramSet& a, const TrigramSet& b);

struct BestMatch {
    std::string partner;
    double containment_pct = 0.0;
};

/// The partner of `doc_id` with maximal containment among `records`;
/// ties broken by lexicographically smallest partner id. Throws
/// UsageError ("no pairs") when no record involves doc_id.
BestMatch max_similarity(const std::string& doc_id,
                         std::span<const SimilarityRecord> records);

}  // namespace plagdet
