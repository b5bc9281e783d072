#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plagdet/preprocess.hpp"

namespace plagdet {

/// Corpus vocabulary: distinct terms with document frequency >=
/// min_term_freq, sorted lexicographically.
struct Vocabulary {
    std::vector<std::string> terms;
    std::size_t min_term_freq = 1;

    std::size_t size() const { return terms.size(); }
};

/// Sparse bag-of-words vector: (term index, raw count) sorted by index,
/// no explicit zeros.
struct TermVector {
    std::string doc_id;
    std::vector<std::pair<std::uint32_t, double>> weights;
};

Vocabulary build_vocabulary(std::span<const PreprocessedDocument> docs,
                            std::size_t min_term_freq);

TermVector vectorize(const PreprocessedDocument& doc, const Vocabulary& vocab);

struct KMeansParams {
    std::size_t k = 1;
    std::uint64_t seed = 0;
    std::size_t max_iter = 100;
    double tol = 1e-4;
};

struct ClusterAssignment {
    std::size_t k = 0;
    std::vector<std::size_t> assignment;   // aligned with the input vectors
    std::vector<std::string> doc_ids;      // aligned with assignment
    std::vector<std::vector<double>> centroids;  // k dense vectors
    double sse = 0.0;
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
    std::vector<double> sse_trace;         // one entry per Lloyd pass
};

/// Lloyd's algorithm on L2-normalized vectors with Euclidean distance and
/// k-means++ seeding. Terminates when the assignment stops changing, when
/// every centroid moves less than `tol`, or after `max_iter` passes.
/// Nearest-centroid ties go to the lowest cluster index; a cluster that
/// empties is re-seeded with the point farthest from its assigned
/// centroid. Fully deterministic for fixed inputs and seed.
ClusterAssignment kmeans(std::span<const TermVector> vectors, const KMeansParams& params);

/// One kmeans run per k (same seed); (k, sse) pairs in input order.
std::vector<std::pair<std::size_t, double>> sweep_k(std::span<const TermVector> vectors,
                                                    std::span<const std::size_t> k_values,
                                                    const KMeansParams& base);

/// Default cluster count when none is given: ceil(sqrt(n/2)).
std::size_t default_k(std::size_t n_docs);

}  // namespace plagdet
