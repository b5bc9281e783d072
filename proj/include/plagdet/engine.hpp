#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plagdet/cluster.hpp"
#include "plagdet/corpus.hpp"
#include "plagdet/preprocess.hpp"
#include "plagdet/trigram.hpp"

namespace plagdet {

enum class DetectionMode { full, clustered };

std::string to_string(DetectionMode mode);

struct ClusterParams {
    std::optional<std::size_t> k;  // default_k(n) when unset
    std::uint64_t seed = 0;
    std::size_t min_term_freq = 1;
    std::size_t max_iter = 100;
    double tol = 1e-4;
};

struct DetectionConfig {
    DetectionMode mode = DetectionMode::full;
    int ngram_n = 3;
    PreprocessConfig preprocess;
    ClusterParams cluster;
    double threshold_pct = 50.0;  // text report highlights pairs above this
    std::size_t workers = 1;
};

struct Timings {
    double preprocess_ms = 0.0;
    double cluster_ms = 0.0;
    double pairwise_ms = 0.0;
    double total_ms = 0.0;
};

/// Clustering diagnostics carried in a clustered-mode report.
struct ClusterInfo {
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t min_term_freq = 1;
    std::size_t max_iter = 100;
    double tol = 1e-4;
    std::size_t vocabulary_size = 0;
    std::size_t iterations = 0;
    double sse = 0.0;
    std::vector<double> sse_trace;
};

struct DetectionReport {
    std::string corpus_name;
    DetectionMode mode = DetectionMode::full;
    std::size_t document_count = 0;
    std::vector<SimilarityRecord> per_pair;  // sorted by (doc_a, doc_b)
    // doc id -> best partner; nullopt for documents that were never
    // compared (singleton clusters).
    std::map<std::string, std::optional<BestMatch>> per_doc_max;
    std::vector<std::vector<std::string>> cluster_table;  // empty in full mode
    std::optional<ClusterInfo> cluster;
    std::size_t comparisons_made = 0;
    std::size_t comparisons_possible = 0;
    Timings timings;
    DetectionConfig config;  // echo for reproducibility
    std::vector<std::string> warnings;
};

/// Compares every unordered pair of documents.
DetectionReport detect_full(const Corpus& corpus, const DetectionConfig& cfg);

/// Clusters documents by bag-of-words first, then compares only
/// within-cluster pairs. Cross-cluster pairs are deliberately skipped;
/// the report shows comparisons_made vs comparisons_possible so the
/// pruning is visible.
DetectionReport detect_clustered(const Corpus& corpus, const DetectionConfig& cfg);

/// Dispatch on cfg.mode.
DetectionReport detect(const Corpus& corpus, const DetectionConfig& cfg);

struct BenchPhase {
    double pairwise_ms = 0.0;  // median over repeats
    double cluster_ms = 0.0;   // median; 0 for the full phase
    double total_ms = 0.0;     // preprocess + cluster + pairwise, medians
    std::size_t comparisons_made = 0;
};

struct BenchReport {
    std::string corpus_name;
    std::size_t document_count = 0;
    std::size_t repeats = 3;
    double preprocess_ms = 0.0;  // shared between both phases
    BenchPhase full;
    BenchPhase clustered;
    double comparisons_ratio = 0.0;    // clustered / full
    double pairwise_time_ratio = 0.0;  // clustered / full, medians
    double total_time_ratio = 0.0;     // clustered / full, medians
    DetectionConfig config;
};

/// Runs the full and the clustered pipeline on the same corpus with the
/// preprocessing done once and shared, `repeats` times each, and reports
/// median times plus comparison counts.
BenchReport bench(const Corpus& corpus, const DetectionConfig& cfg, std::size_t repeats = 3);

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& name);

std::string render_report(const DetectionReport& report, ReportFormat format);
std::string render_bench(const BenchReport& report, ReportFormat format);

/// Writes render_report output to `out_path`. Throws IoError when the
/// path cannot be written. Emitting the same report twice produces
/// byte-identical files.
void emit_report(const DetectionReport& report, ReportFormat format,
                 const std::filesystem::path& out_path);
void emit_report(const BenchReport& report, ReportFormat format,
                 const std::filesystem::path& out_path);

struct SyntheticSpec {
    std::size_t n_docs = 100;
    std::size_t n_groups = 10;
    double copy_rate = 0.9;
    std::size_t vocab_size = 1000;
    std::size_t doc_len = 200;
    std::uint64_t seed = 0;
};

/// Deterministic planted-plagiarism corpus: each group has a base
/// document drawn from a group-specific vocabulary slice; every other
/// member copies the first copy_rate fraction of the base and fills the
/// rest with fresh, corpus-unique tokens. Groups share no vocabulary, so
/// cross-group similarity is exactly zero.
Corpus generate_synthetic_corpus(const SyntheticSpec& spec);

}  // namespace plagdet
