#include "plagdet/engine.hpp"

#include <algorithm>
#include <chrono>

#include "plagdet/errors.hpp"
#include "parallel.hpp"

namespace plagdet {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<PreprocessedDocument> preprocess_all(const Corpus& corpus,
                                                 const PreprocessConfig& cfg,
                                                 std::size_t workers) {
    std::vector<PreprocessedDocument> out(corpus.size());
    parallel_for(corpus.size(), workers,
                 [&](std::size_t i) { out[i] = preprocess(corpus.documents[i], cfg); });
    return out;
}

struct PairTask {
    std::size_t a;
    std::size_t b;
};

// Builds trigram sets for the documents named by `needed` only; untouched
// slots stay empty.
std::vector<TrigramSet> build_sets(const std::vector<PreprocessedDocument>& docs,
                                   const std::vector<std::size_t>& needed, int n,
                                   std::size_t workers) {
    std::vector<TrigramSet> sets(docs.size());
    parallel_for(needed.size(), workers, [&](std::size_t idx) {
        sets[needed[idx]] = build_trigrams(docs[needed[idx]], n);
    });
    return sets;
}

// Each pair lands in its own slot, so the result is identical for any
// worker count; sorted before returning.
std::vector<SimilarityRecord> compare_pairs(const std::vector<TrigramSet>& sets,
                                            const std::vector<PairTask>& pairs,
                                            std::size_t workers) {
    std::vector<SimilarityRecord> records(pairs.size());
    parallel_for(pairs.size(), workers, [&](std::size_t idx) {
        records[idx] = make_record(sets[pairs[idx].a], sets[pairs[idx].b]);
    });
    std::sort(records.begin(), records.end(),
              [](const SimilarityRecord& x, const SimilarityRecord& y) {
                  return std::tie(x.doc_a, x.doc_b) < std::tie(y.doc_a, y.doc_b);
              });
    return records;
}

std::vector<PairTask> all_pairs(std::size_t n) {
    std::vector<PairTask> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return pairs;
}

std::vector<PairTask> within_cluster_pairs(const std::vector<std::size_t>& assignment,
                                           std::size_t k) {
    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t i = 0; i < assignment.size(); ++i) members[assignment[i]].push_back(i);
    std::vector<PairTask> pairs;
    for (const auto& cluster : members)
        for (std::size_t a = 0; a < cluster.size(); ++a)
            for (std::size_t b = a + 1; b < cluster.size(); ++b)
                pairs.push_back({cluster[a], cluster[b]});
    return pairs;
}

std::map<std::string, std::optional<BestMatch>> compute_per_doc_max(
    const Corpus& corpus, const std::vector<SimilarityRecord>& records) {
    std::map<std::string, std::optional<BestMatch>> best;
    for (const auto& doc : corpus.documents) best[doc.id] = std::nullopt;

    const auto offer = [&](const std::string& doc, const std::string& partner, double pct) {
        auto& slot = best[doc];
        if (!slot || pct > slot->containment_pct ||
            (pct == slot->containment_pct && partner < slot->partner))
            slot = BestMatch{partner, pct};
    };
    for (const auto& rec : records) {
        offer(rec.doc_a, rec.doc_b, rec.containment_pct);
        offer(rec.doc_b, rec.doc_a, rec.containment_pct);
    }
    return best;
}

void require_comparable(const Corpus& corpus) {
    if (corpus.size() < 2)
        throw UsageError("corpus has " + std::to_string(corpus.size()) +
                         " document(s); at least 2 are required for pairwise detection");
}

std::vector<std::size_t> iota_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::string to_string(DetectionMode mode) {
    return mode == DetectionMode::full ? "full" : "clustered";
}

DetectionReport detect_full(const Corpus& corpus, const DetectionConfig& cfg) {
    require_comparable(corpus);
    const auto t_total = Clock::now();

    DetectionReport report;
    report.corpus_name = corpus.name;
    report.mode = DetectionMode::full;
    report.document_count = corpus.size();
    report.config = cfg;
    report.config.mode = DetectionMode::full;
    report.warnings = corpus.warnings;

    auto t = Clock::now();
    const auto docs = preprocess_all(corpus, cfg.preprocess, cfg.workers);
    report.timings.preprocess_ms = ms_since(t);

    t = Clock::now();
    const auto sets = build_sets(docs, iota_indices(corpus.size()), cfg.ngram_n, cfg.workers);
    report.per_pair = compare_pairs(sets, all_pairs(corpus.size()), cfg.workers);
    report.timings.pairwise_ms = ms_since(t);

    report.per_doc_max = compute_per_doc_max(corpus, report.per_pair);
    report.comparisons_made = report.per_pair.size();
    report.comparisons_possible = corpus.size() * (corpus.size() - 1) / 2;
    report.timings.total_ms = ms_since(t_total);
    return report;
}

DetectionReport detect_clustered(const Corpus& corpus, const DetectionConfig& cfg) {
    require_comparable(corpus);
    const auto t_total = Clock::now();

    DetectionReport report;
    report.corpus_name = corpus.name;
    report.mode = DetectionMode::clustered;
    report.document_count = corpus.size();
    report.config = cfg;
    report.config.mode = DetectionMode::clustered;
    report.warnings = corpus.warnings;

    auto t = Clock::now();
    const auto docs = preprocess_all(corpus, cfg.preprocess, cfg.workers);
    report.timings.preprocess_ms = ms_since(t);

    t = Clock::now();
    const auto vocab = build_vocabulary(docs, cfg.cluster.min_term_freq);
    std::vector<TermVector> vectors(docs.size());
    parallel_for(docs.size(), cfg.workers,
                 [&](std::size_t i) { vectors[i] = vectorize(docs[i], vocab); });
    KMeansParams params;
    params.k = cfg.cluster.k.value_or(default_k(corpus.size()));
    params.seed = cfg.cluster.seed;
    params.max_iter = cfg.cluster.max_iter;
    params.tol = cfg.cluster.tol;
    const auto clusters = kmeans(vectors, params);
    report.timings.cluster_ms = ms_since(t);

    t = Clock::now();
    const auto pairs = within_cluster_pairs(clusters.assignment, clusters.k);
    std::vector<std::size_t> needed;
    for (const auto& pair : pairs) {
        needed.push_back(pair.a);
        needed.push_back(pair.b);
    }
    std::sort(needed.begin(), needed.end());
    needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
    const auto sets = build_sets(docs, needed, cfg.ngram_n, cfg.workers);
    report.per_pair = compare_pairs(sets, pairs, cfg.workers);
    report.timings.pairwise_ms = ms_since(t);

    report.per_doc_max = compute_per_doc_max(corpus, report.per_pair);
    report.cluster_table.assign(clusters.k, {});
    for (std::size_t i = 0; i < corpus.size(); ++i)
        report.cluster_table[clusters.assignment[i]].push_back(corpus.documents[i].id);

    ClusterInfo info;
    info.k = clusters.k;
    info.seed = clusters.seed;
    info.min_term_freq = cfg.cluster.min_term_freq;
    info.max_iter = cfg.cluster.max_iter;
    info.tol = cfg.cluster.tol;
    info.vocabulary_size = vocab.size();
    info.iterations = clusters.iterations;
    info.sse = clusters.sse;
    info.sse_trace = clusters.sse_trace;
    report.cluster = std::move(info);

    report.comparisons_made = report.per_pair.size();
    report.comparisons_possible = corpus.size() * (corpus.size() - 1) / 2;
    report.timings.total_ms = ms_since(t_total);
    return report;
}

DetectionReport detect(const Corpus& corpus, const DetectionConfig& cfg) {
    return cfg.mode == DetectionMode::full ? detect_full(corpus, cfg)
                                           : detect_clustered(corpus, cfg);
}

BenchReport bench(const Corpus& corpus, const DetectionConfig& cfg, std::size_t repeats) {
    require_comparable(corpus);
    if (repeats < 1) throw UsageError("bench repeats must be >= 1");

    BenchReport report;
    report.corpus_name = corpus.name;
    report.document_count = corpus.size();
    report.repeats = repeats;
    report.config = cfg;

    // preprocessing is shared by both phases, exactly once
    auto t = Clock::now();
    const auto docs = preprocess_all(corpus, cfg.preprocess, cfg.workers);
    report.preprocess_ms = ms_since(t);

    std::vector<double> full_ms;
    for (std::size_t r = 0; r < repeats; ++r) {
        t = Clock::now();
        const auto sets = build_sets(docs, iota_indices(docs.size()), cfg.ngram_n, cfg.workers);
        const auto records = compare_pairs(sets, all_pairs(docs.size()), cfg.workers);
        full_ms.push_back(ms_since(t));
        report.full.comparisons_made = records.size();
    }
    report.full.pairwise_ms = median(full_ms);
    report.full.total_ms = report.preprocess_ms + report.full.pairwise_ms;

    std::vector<double> cluster_ms;
    std::vector<double> clustered_pairwise_ms;
    for (std::size_t r = 0; r < repeats; ++r) {
        t = Clock::now();
        const auto vocab = build_vocabulary(docs, cfg.cluster.min_term_freq);
        std::vector<TermVector> vectors(docs.size());
        parallel_for(docs.size(), cfg.workers,
                     [&](std::size_t i) { vectors[i] = vectorize(docs[i], vocab); });
        KMeansParams params;
        params.k = cfg.cluster.k.value_or(default_k(corpus.size()));
        params.seed = cfg.cluster.seed;
        params.max_iter = cfg.cluster.max_iter;
        params.tol = cfg.cluster.tol;
        const auto clusters = kmeans(vectors, params);
        cluster_ms.push_back(ms_since(t));

        t = Clock::now();
        const auto pairs = within_cluster_pairs(clusters.assignment, clusters.k);
        std::vector<std::size_t> needed;
        for (const auto& pair : pairs) {
            needed.push_back(pair.a);
            needed.push_back(pair.b);
        }
        std::sort(needed.begin(), needed.end());
        needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
        const auto sets = build_sets(docs, needed, cfg.ngram_n, cfg.workers);
        const auto records = compare_pairs(sets, pairs, cfg.workers);
        clustered_pairwise_ms.push_back(ms_since(t));
        report.clustered.comparisons_made = records.size();
    }
    report.clustered.cluster_ms = median(cluster_ms);
    report.clustered.pairwise_ms = median(clustered_pairwise_ms);
    report.clustered.total_ms =
        report.preprocess_ms + report.clustered.cluster_ms + report.clustered.pairwise_ms;

    report.comparisons_ratio =
        report.full.comparisons_made == 0
            ? 0.0
            : static_cast<double>(report.clustered.comparisons_made) /
                  static_cast<double>(report.full.comparisons_made);
    report.pairwise_time_ratio = report.full.pairwise_ms == 0.0
                                     ? 0.0
                                     : report.clustered.pairwise_ms / report.full.pairwise_ms;
    report.total_time_ratio =
        report.full.total_ms == 0.0 ? 0.0 : report.clustered.total_ms / report.full.total_ms;
    return report;
}

}  // namespace plagdet
