#include "plagdet/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

#include "plagdet/errors.hpp"

namespace plagdet {

namespace {

// Uniform double in [0, 1) from the top 53 bits; pinned to the mt19937_64
// sequence so results do not depend on library distribution internals.
double next_u01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t next_index(std::mt19937_64& rng, std::size_t bound) {
    const auto idx = static_cast<std::size_t>(next_u01(rng) * static_cast<double>(bound));
    return std::min(idx, bound - 1);
}

using Sparse = std::vector<std::pair<std::uint32_t, double>>;

// exact squared distance between two sparse vectors
double sparse_dist2(const Sparse& a, const Sparse& b) {
    double sum = 0.0;
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.size() || ib < b.size()) {
        double diff;
        if (ib >= b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
            diff = a[ia].second;
            ++ia;
        } else if (ia >= a.size() || b[ib].first < a[ia].first) {
            diff = b[ib].second;
            ++ib;
        } else {
            diff = a[ia].second - b[ib].second;
            ++ia;
            ++ib;
        }
        sum += diff * diff;
    }
    return sum;
}

// exact squared distance between a sparse point and a dense centroid
double dense_dist2(const Sparse& point, const std::vector<double>& centroid) {
    double sum = 0.0;
    std::size_t ip = 0;
    for (std::size_t d = 0; d < centroid.size(); ++d) {
        double x = 0.0;
        if (ip < point.size() && point[ip].first == d) {
            x = point[ip].second;
            ++ip;
        }
        const double diff = x - centroid[d];
        sum += diff * diff;
    }
    return sum;
}

double sparse_dot_dense(const Sparse& point, const std::vector<double>& centroid) {
    double sum = 0.0;
    for (const auto& [idx, value] : point) sum += value * centroid[idx];
    return sum;
}

}  // namespace

Vocabulary build_vocabulary(std::span<const PreprocessedDocument> docs,
                            std::size_t min_term_freq) {
    if (min_term_freq < 1) throw UsageError("min term frequency must be >= 1");

    std::unordered_map<std::string, std::size_t> doc_freq;
    std::unordered_map<std::string, std::size_t> seen_in;  // term -> last doc index + 1
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (const auto& token : docs[d].tokens) {
            auto& last = seen_in[token];
            if (last != d + 1) {
                last = d + 1;
                ++doc_freq[token];
            }
        }
    }

    Vocabulary vocab;
    vocab.min_term_freq = min_term_freq;
    for (const auto& [term, df] : doc_freq)
        if (df >= min_term_freq) vocab.terms.push_back(term);
    std::sort(vocab.terms.begin(), vocab.terms.end());

    if (vocab.terms.empty())
        throw UsageError("vocabulary is empty after min-term-frequency filtering (" +
                         std::to_string(min_term_freq) + "); lower --min-term-freq");
    return vocab;
}

TermVector vectorize(const PreprocessedDocument& doc, const Vocabulary& vocab) {
    if (vocab.terms.empty()) throw UsageError("cannot vectorize with an empty vocabulary");

    std::unordered_map<std::string_view, double> counts;
    for (const auto& token : doc.tokens) counts[token] += 1.0;

    TermVector vec;
    vec.doc_id = doc.id;
    vec.weights.reserve(counts.size());
    for (const auto& [token, count] : counts) {
        const auto it = std::lower_bound(vocab.terms.begin(), vocab.terms.end(), token);
        if (it != vocab.terms.end() && *it == token) {
            vec.weights.emplace_back(
                static_cast<std::uint32_t>(it - vocab.terms.begin()), count);
        }
    }
    std::sort(vec.weights.begin(), vec.weights.end());
    return vec;
}

std::size_t default_k(std::size_t n_docs) {
    const auto k = static_cast<std::size_t>(
        std::ceil(std::sqrt(static_cast<double>(n_docs) / 2.0)));
    return std::clamp<std::size_t>(k, 1, n_docs == 0 ? 1 : n_docs);
}

ClusterAssignment kmeans(std::span<const TermVector> vectors, const KMeansParams& params) {
    const std::size_t n = vectors.size();
    if (params.k < 1) throw UsageError("k must be >= 1");
    if (params.k > n)
        throw UsageError("k (" + std::to_string(params.k) + ") exceeds the number of documents (" +
                         std::to_string(n) + ")");
    if (params.max_iter < 1) throw UsageError("max iterations must be >= 1");
    if (params.tol < 0) throw UsageError("tolerance must be >= 0");
    const std::size_t k = params.k;

    // L2-normalize so document length does not dominate; zero vectors stay zero
    std::vector<Sparse> points(n);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < n; ++i) {
        points[i] = vectors[i].weights;
        double norm2 = 0.0;
        for (const auto& [idx, value] : points[i]) {
            norm2 += value * value;
            dim = std::max<std::size_t>(dim, idx + 1);
        }
        if (norm2 > 0.0) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& [idx, value] : points[i]) value *= inv;
        }
    }
    std::vector<double> point_norm2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [idx, value] : points[i]) point_norm2[i] += value * value;

    // k-means++ seeding
    std::mt19937_64 rng(params.seed);
    std::vector<std::size_t> centers;
    centers.reserve(k);
    std::vector<bool> is_center(n, false);
    std::vector<double> min_d2(n, std::numeric_limits<double>::infinity());

    const auto add_center = [&](std::size_t idx) {
        centers.push_back(idx);
        is_center[idx] = true;
        for (std::size_t i = 0; i < n; ++i)
            min_d2[i] = std::min(min_d2[i], sparse_dist2(points[i], points[idx]));
    };
    add_center(next_index(rng, n));
    while (centers.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) total += min_d2[i];
        if (total <= 0.0) {
            // all remaining points coincide with a center; take the first free one
            for (std::size_t i = 0; i < n; ++i) {
                if (!is_center[i]) {
                    add_center(i);
                    break;
                }
            }
            continue;
        }
        const double r = next_u01(rng) * total;
        double cum = 0.0;
        std::size_t chosen = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (min_d2[i] <= 0.0) continue;
            cum += min_d2[i];
            if (cum > r) {
                chosen = i;
                break;
            }
        }
        if (chosen == n) {  // numeric edge: r == total
            for (std::size_t i = n; i-- > 0;) {
                if (min_d2[i] > 0.0) {
                    chosen = i;
                    break;
                }
            }
        }
        add_center(chosen);
    }

    std::vector<std::vector<double>> centroids(k, std::vector<double>(dim, 0.0));
    for (std::size_t c = 0; c < k; ++c)
        for (const auto& [idx, value] : points[centers[c]]) centroids[c][idx] = value;

    // Lloyd iterations
    ClusterAssignment result;
    result.k = k;
    result.seed = params.seed;
    result.assignment.assign(n, 0);
    std::vector<std::size_t> prev_assignment;
    std::vector<double> centroid_norm2(k, 0.0);
    std::vector<double> assign_d2(n, 0.0);

    for (std::size_t pass = 0; pass < params.max_iter; ++pass) {
        for (std::size_t c = 0; c < k; ++c) {
            centroid_norm2[c] = 0.0;
            for (const double v : centroids[c]) centroid_norm2[c] += v * v;
        }

        // assignment step; ties go to the lowest cluster index
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_c = 0;
            for (std::size_t c = 0; c < k; ++c) {
                const double d2 = point_norm2[i] + centroid_norm2[c] -
                                  2.0 * sparse_dot_dense(points[i], centroids[c]);
                if (d2 < best) {
                    best = d2;
                    best_c = c;
                }
            }
            result.assignment[i] = best_c;
            assign_d2[i] = best;
        }

        if (result.assignment == prev_assignment) break;

        std::vector<std::size_t> sizes(k, 0);
        for (const std::size_t c : result.assignment) ++sizes[c];

        // a cluster that lost every point is re-seeded with the point
        // farthest from its assigned centroid
        for (std::size_t empty = 0; empty < k; ++empty) {
            if (sizes[empty] != 0) continue;
            double worst = -1.0;
            std::size_t worst_i = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (sizes[result.assignment[i]] < 2) continue;
                if (assign_d2[i] > worst) {
                    worst = assign_d2[i];
                    worst_i = i;
                }
            }
            if (worst_i == n) break;  // nothing movable
            --sizes[result.assignment[worst_i]];
            result.assignment[worst_i] = empty;
            sizes[empty] = 1;
            assign_d2[worst_i] = 0.0;
        }

        // update step
        std::vector<std::vector<double>> updated(k, std::vector<double>(dim, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [idx, value] : points[i])
                updated[result.assignment[i]][idx] += value;
        for (std::size_t c = 0; c < k; ++c) {
            if (sizes[c] == 0) {  // unreachable after repair; kept for safety
                updated[c] = centroids[c];
                continue;
            }
            const double inv = 1.0 / static_cast<double>(sizes[c]);
            for (double& v : updated[c]) v *= inv;
        }
        double max_move2 = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            double move2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = updated[c][d] - centroids[c][d];
                move2 += diff * diff;
            }
            max_move2 = std::max(max_move2, move2);
        }
        centroids.swap(updated);

        double sse = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            sse += dense_dist2(points[i], centroids[result.assignment[i]]);
        result.sse_trace.push_back(sse);

        prev_assignment = result.assignment;
        if (max_move2 < params.tol * params.tol) break;
    }

    result.iterations = result.sse_trace.size();
    result.sse = result.sse_trace.empty() ? 0.0 : result.sse_trace.back();
    result.centroids = std::move(centroids);
    result.doc_ids.reserve(n);
    for (const auto& vec : vectors) result.doc_ids.push_back(vec.doc_id);
    return result;
}

std::vector<std::pair<std::size_t, double>> sweep_k(std::span<const TermVector> vectors,
                                                    std::span<const std::size_t> k_values,
                                                    const KMeansParams& base) {
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(k_values.size());
    for (const std::size_t k : k_values) {
        KMeansParams params = base;
        params.k = k;
        out.emplace_back(k, kmeans(vectors, params).sse);
    }
    return out;
}

}  // namespace plagdet
