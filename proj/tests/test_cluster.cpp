#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "plagdet/cluster.hpp"
#include "plagdet/errors.hpp"

using namespace plagdet;

namespace {

PreprocessedDocument doc_of(std::string id, std::vector<std::string> tokens) {
    return {std::move(id), std::move(tokens)};
}

// Two groups of near-duplicate documents with disjoint vocabularies:
// every member shares 45 of its 50 tokens with the group base.
std::vector<TermVector> planted_two_groups() {
    std::vector<PreprocessedDocument> docs;
    for (int g = 0; g < 2; ++g) {
        const std::string prefix = g == 0 ? "a" : "b";
        std::vector<std::string> base;
        for (int t = 0; t < 45; ++t) base.push_back(prefix + std::to_string(t % 15));
        for (int m = 0; m < 10; ++m) {
            auto tokens = base;
            for (int t = 0; t < 5; ++t)
                tokens.push_back(prefix + "x" + std::to_string(m) + "_" + std::to_string(t));
            docs.push_back(doc_of(prefix + std::to_string(m), std::move(tokens)));
        }
    }
    const auto vocab = build_vocabulary(docs, 1);
    std::vector<TermVector> vectors;
    vectors.reserve(docs.size());
    for (const auto& d : docs) vectors.push_back(vectorize(d, vocab));
    return vectors;
}

// normalized copies of the input vectors, densified
std::vector<std::vector<double>> normalized_dense(const std::vector<TermVector>& vectors,
                                                  std::size_t dim) {
    std::vector<std::vector<double>> out(vectors.size(), std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        double norm2 = 0.0;
        for (const auto& [idx, v] : vectors[i].weights) norm2 += v * v;
        const double inv = norm2 > 0.0 ? 1.0 / std::sqrt(norm2) : 0.0;
        for (const auto& [idx, v] : vectors[i].weights) out[i][idx] = v * inv;
    }
    return out;
}

double recompute_sse(const std::vector<TermVector>& vectors, const ClusterAssignment& ca) {
    std::size_t dim = 0;
    for (const auto& c : ca.centroids) dim = std::max(dim, c.size());
    const auto points = normalized_dense(vectors, dim);
    double sse = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& centroid = ca.centroids[ca.assignment[i]];
        for (std::size_t d = 0; d < dim; ++d) {
            const double x = d < points[i].size() ? points[i][d] : 0.0;
            const double c = d < centroid.size() ? centroid[d] : 0.0;
            sse += (x - c) * (x - c);
        }
    }
    return sse;
}

std::vector<TermVector> random_vectors(std::mt19937& rng, std::size_t n, std::size_t dim) {
    std::vector<TermVector> vectors(n);
    for (std::size_t i = 0; i < n; ++i) {
        vectors[i].doc_id = "v" + std::to_string(i);
        for (std::size_t d = 0; d < dim; ++d) {
            if (rng() % 3 == 0) continue;  // keep them sparse
            vectors[i].weights.emplace_back(static_cast<std::uint32_t>(d),
                                            1.0 + static_cast<double>(rng() % 9));
        }
    }
    return vectors;
}

}  // namespace

TEST_CASE("build_vocabulary filters by document frequency and sorts") {
    std::vector<PreprocessedDocument> docs{doc_of("1", {"a", "b"}), doc_of("2", {"b", "c"})};
    CHECK(build_vocabulary(docs, 1).terms == std::vector<std::string>{"a", "b", "c"});
    CHECK(build_vocabulary(docs, 2).terms == std::vector<std::string>{"b"});
    CHECK_THROWS_AS(build_vocabulary(docs, 3), UsageError);

    // repeated occurrences inside one document count once
    std::vector<PreprocessedDocument> repeats{doc_of("1", {"a", "a", "a"}), doc_of("2", {"b"})};
    CHECK_THROWS_AS(build_vocabulary(repeats, 2), UsageError);
}

TEST_CASE("vectorize counts vocabulary terms and ignores the rest") {
    Vocabulary vocab;
    vocab.terms = {"a", "b", "c"};

    const auto vec = vectorize(doc_of("d", {"b", "b", "c"}), vocab);
    REQUIRE(vec.weights.size() == 2);
    CHECK(vec.weights[0] == std::pair<std::uint32_t, double>{1, 2.0});
    CHECK(vec.weights[1] == std::pair<std::uint32_t, double>{2, 1.0});

    CHECK(vectorize(doc_of("d", {}), vocab).weights.empty());
    CHECK(vectorize(doc_of("d", {"z"}), vocab).weights.empty());
}

TEST_CASE("kmeans validates its parameters") {
    const auto vectors = planted_two_groups();
    KMeansParams params;
    params.k = 0;
    CHECK_THROWS_AS(kmeans(vectors, params), UsageError);
    params.k = vectors.size() + 1;
    CHECK_THROWS_AS(kmeans(vectors, params), UsageError);
    params.k = 2;
    params.max_iter = 0;
    CHECK_THROWS_AS(kmeans(vectors, params), UsageError);
    params.max_iter = 100;
    params.tol = -1.0;
    CHECK_THROWS_AS(kmeans(vectors, params), UsageError);
}

TEST_CASE("k=1 puts everything in one cluster with the mean centroid") {
    const auto vectors = planted_two_groups();
    KMeansParams params;
    params.k = 1;
    const auto ca = kmeans(vectors, params);

    CHECK(ca.k == 1);
    for (const std::size_t c : ca.assignment) CHECK(c == 0);

    const auto points = normalized_dense(vectors, ca.centroids[0].size());
    for (std::size_t d = 0; d < ca.centroids[0].size(); ++d) {
        double mean = 0.0;
        for (const auto& p : points) mean += p[d];
        mean /= static_cast<double>(points.size());
        CHECK(ca.centroids[0][d] == doctest::Approx(mean).epsilon(1e-12));
    }
    CHECK(ca.sse == doctest::Approx(recompute_sse(vectors, ca)).epsilon(1e-12));
}

TEST_CASE("k=n with distinct vectors yields singletons and zero sse") {
    const auto vectors = planted_two_groups();
    KMeansParams params;
    params.k = vectors.size();
    const auto ca = kmeans(vectors, params);

    std::vector<std::size_t> sizes(ca.k, 0);
    for (const std::size_t c : ca.assignment) ++sizes[c];
    for (const std::size_t s : sizes) CHECK(s == 1);
    CHECK(ca.sse == 0.0);
}

TEST_CASE("two planted groups are recovered exactly for seeds 0..9") {
    const auto vectors = planted_two_groups();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        KMeansParams params;
        params.k = 2;
        params.seed = seed;
        const auto ca = kmeans(vectors, params);

        // all of group a together, all of group b together, groups apart
        const std::size_t cluster_a = ca.assignment[0];
        const std::size_t cluster_b = ca.assignment[10];
        CHECK(cluster_a != cluster_b);
        for (std::size_t i = 0; i < 10; ++i) CHECK(ca.assignment[i] == cluster_a);
        for (std::size_t i = 10; i < 20; ++i) CHECK(ca.assignment[i] == cluster_b);
    }
}

TEST_CASE("kmeans is deterministic for fixed inputs and seed") {
    const auto vectors = planted_two_groups();
    KMeansParams params;
    params.k = 4;
    params.seed = 3;
    const auto first = kmeans(vectors, params);
    const auto second = kmeans(vectors, params);
    CHECK(first.assignment == second.assignment);
    CHECK(first.sse == second.sse);
    CHECK(first.sse_trace == second.sse_trace);
    CHECK(first.centroids == second.centroids);
}

TEST_CASE("kmeans invariants hold on random inputs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const auto vectors = random_vectors(rng, 8 + rng() % 25, 6 + rng() % 10);
        KMeansParams params;
        params.k = 1 + rng() % vectors.size();
        params.seed = rng();
        const auto ca = kmeans(vectors, params);

        // partition validity
        std::vector<std::size_t> sizes(ca.k, 0);
        REQUIRE(ca.assignment.size() == vectors.size());
        for (const std::size_t c : ca.assignment) {
            REQUIRE(c < ca.k);
            ++sizes[c];
        }
        std::size_t total = 0;
        for (const std::size_t s : sizes) total += s;
        CHECK(total == vectors.size());

        // monotone trace and recomputable objective
        for (std::size_t i = 1; i < ca.sse_trace.size(); ++i)
            CHECK(ca.sse_trace[i] <= ca.sse_trace[i - 1]);
        const double reference = recompute_sse(vectors, ca);
        CHECK(ca.sse == doctest::Approx(reference).epsilon(1e-9));
        CHECK(ca.iterations == ca.sse_trace.size());
    }
}

TEST_CASE("non-empty clusters have mean centroids at convergence") {
    const auto vectors = planted_two_groups();
    KMeansParams params;
    params.k = 3;
    params.seed = 1;
    const auto ca = kmeans(vectors, params);

    const std::size_t dim = ca.centroids[0].size();
    const auto points = normalized_dense(vectors, dim);
    std::vector<std::vector<double>> sums(ca.k, std::vector<double>(dim, 0.0));
    std::vector<std::size_t> sizes(ca.k, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        ++sizes[ca.assignment[i]];
        for (std::size_t d = 0; d < dim; ++d) sums[ca.assignment[i]][d] += points[i][d];
    }
    for (std::size_t c = 0; c < ca.k; ++c) {
        if (sizes[c] == 0) continue;
        for (std::size_t d = 0; d < dim; ++d)
            CHECK(ca.centroids[c][d] ==
                  doctest::Approx(sums[c][d] / static_cast<double>(sizes[c])).epsilon(1e-9));
    }
}

TEST_CASE("sweep_k covers the degenerate ends and reports per-k sse") {
    const auto vectors = planted_two_groups();
    KMeansParams base;
    base.seed = 0;

    const std::vector<std::size_t> ks{1, 2, 4, vectors.size()};
    const auto table = sweep_k(vectors, ks, base);
    REQUIRE(table.size() == 4);
    CHECK(table[0].first == 1);

    // k=1 sse equals total variance about the global mean
    KMeansParams one;
    one.k = 1;
    const auto single = kmeans(vectors, one);
    CHECK(table[0].second == doctest::Approx(single.sse).epsilon(1e-12));

    // k=n on distinct vectors is a perfect fit
    CHECK(table[3].second == 0.0);

    // non-increasing over {1, 2, 4} on the planted corpus
    CHECK(table[1].second <= table[0].second);
    CHECK(table[2].second <= table[1].second);
}

TEST_CASE("default_k follows ceil(sqrt(n/2))") {
    CHECK(default_k(1) == 1);
    CHECK(default_k(2) == 1);
    CHECK(default_k(8) == 2);
    CHECK(default_k(100) == 8);
    CHECK(default_k(200) == 10);
}
