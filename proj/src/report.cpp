#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "plagdet/engine.hpp"
#include "plagdet/errors.hpp"

namespace plagdet {

namespace {

using Json = nlohmann::ordered_json;

std::string fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (const char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

Json config_json(const DetectionConfig& cfg) {
    Json j;
    j["mode"] = to_string(cfg.mode);
    j["ngram_n"] = cfg.ngram_n;
    j["stemming"] = cfg.preprocess.stemming_enabled;
    j["min_token_length"] = cfg.preprocess.min_token_length;
    j["stopword_count"] = cfg.preprocess.stopwords.size();
    j["threshold_pct"] = cfg.threshold_pct;
    j["workers"] = cfg.workers;
    Json c;
    if (cfg.cluster.k)
        c["k"] = *cfg.cluster.k;
    else
        c["k"] = nullptr;
    c["seed"] = cfg.cluster.seed;
    c["min_term_freq"] = cfg.cluster.min_term_freq;
    c["max_iter"] = cfg.cluster.max_iter;
    c["tol"] = cfg.cluster.tol;
    j["cluster"] = std::move(c);
    return j;
}

Json record_json(const SimilarityRecord& rec) {
    Json j;
    j["doc_a"] = rec.doc_a;
    j["doc_b"] = rec.doc_b;
    j["overlap"] = rec.overlap;
    j["size_a"] = rec.size_a;
    j["size_b"] = rec.size_b;
    j["containment_pct"] = rec.containment_pct;
    j["jaccard_pct"] = rec.jaccard_pct;
    return j;
}

Json report_json(const DetectionReport& report) {
    Json j;
    j["schema_version"] = 1;
    j["corpus_name"] = report.corpus_name;
    j["mode"] = to_string(report.mode);
    j["document_count"] = report.document_count;
    j["config"] = config_json(report.config);
    if (report.cluster) {
        Json c;
        c["k"] = report.cluster->k;
        c["seed"] = report.cluster->seed;
        c["min_term_freq"] = report.cluster->min_term_freq;
        c["max_iter"] = report.cluster->max_iter;
        c["tol"] = report.cluster->tol;
        c["vocabulary_size"] = report.cluster->vocabulary_size;
        c["iterations"] = report.cluster->iterations;
        c["sse"] = report.cluster->sse;
        c["sse_trace"] = report.cluster->sse_trace;
        j["cluster"] = std::move(c);
    } else {
        j["cluster"] = nullptr;
    }
    j["cluster_table"] = report.cluster_table;
    j["comparisons_made"] = report.comparisons_made;
    j["comparisons_possible"] = report.comparisons_possible;
    Json pairs = Json::array();
    for (const auto& rec : report.per_pair) pairs.push_back(record_json(rec));
    j["per_pair"] = std::move(pairs);
    Json maxima = Json::object();
    for (const auto& [doc, best] : report.per_doc_max) {
        if (best) {
            Json b;
            b["partner"] = best->partner;
            b["containment_pct"] = best->containment_pct;
            maxima[doc] = std::move(b);
        } else {
            maxima[doc] = nullptr;
        }
    }
    j["per_doc_max"] = std::move(maxima);
    j["warnings"] = report.warnings;
    Json t;
    t["preprocess_ms"] = report.timings.preprocess_ms;
    t["cluster_ms"] = report.timings.cluster_ms;
    t["pairwise_ms"] = report.timings.pairwise_ms;
    t["total_ms"] = report.timings.total_ms;
    j["timings"] = std::move(t);
    return j;
}

std::string report_csv(const DetectionReport& report) {
    std::ostringstream out;
    out << "doc_a,doc_b,overlap,containment_pct,jaccard_pct\n";
    for (const auto& rec : report.per_pair) {
        out << csv_field(rec.doc_a) << ',' << csv_field(rec.doc_b) << ',' << rec.overlap << ','
            << fixed2(rec.containment_pct) << ',' << fixed2(rec.jaccard_pct) << '\n';
    }
    return out.str();
}

std::string report_text(const DetectionReport& report) {
    std::ostringstream out;
    out << "corpus: " << report.corpus_name << "\n";
    out << "mode: " << to_string(report.mode) << "\n";
    out << "documents: " << report.document_count << "\n";
    out << "comparisons: " << report.comparisons_made << " of " << report.comparisons_possible
        << " possible pairs\n";
    for (const auto& warning : report.warnings) out << "warning: " << warning << "\n";

    if (report.cluster) {
        out << "\nclusters (k=" << report.cluster->k << ", seed=" << report.cluster->seed
            << ", iterations=" << report.cluster->iterations << ", sse=" << report.cluster->sse
            << "):\n";
        out << "cluster  members\n";
        for (std::size_t c = 0; c < report.cluster_table.size(); ++c) {
            out << c << '\t';
            for (std::size_t i = 0; i < report.cluster_table[c].size(); ++i) {
                if (i != 0) out << ", ";
                out << report.cluster_table[c][i];
            }
            out << "\n";
        }
    }

    out << "\nper-document maximum plagiarism:\n";
    out << "document\tbest_match\tcontainment_pct\n";
    for (const auto& [doc, best] : report.per_doc_max) {
        if (best)
            out << doc << '\t' << best->partner << '\t' << fixed2(best->containment_pct) << "\n";
        else
            out << doc << '\t' << "(none)" << '\t' << "-\n";
    }

    out << "\npairs above " << fixed2(report.config.threshold_pct) << "% containment:\n";
    out << "doc_a\tdoc_b\toverlap\tcontainment_pct\tjaccard_pct\n";
    std::size_t flagged = 0;
    for (const auto& rec : report.per_pair) {
        if (rec.containment_pct > report.config.threshold_pct) {
            out << rec.doc_a << '\t' << rec.doc_b << '\t' << rec.overlap << '\t'
                << fixed2(rec.containment_pct) << '\t' << fixed2(rec.jaccard_pct) << "\n";
            ++flagged;
        }
    }
    if (flagged == 0) out << "(none)\n";

    out << "\ntimings: preprocess " << fixed2(report.timings.preprocess_ms) << " ms, cluster "
        << fixed2(report.timings.cluster_ms) << " ms, pairwise "
        << fixed2(report.timings.pairwise_ms) << " ms, total "
        << fixed2(report.timings.total_ms) << " ms\n";
    return out.str();
}

Json bench_json(const BenchReport& report) {
    Json j;
    j["schema_version"] = 1;
    j["corpus_name"] = report.corpus_name;
    j["document_count"] = report.document_count;
    j["repeats"] = report.repeats;
    j["preprocess_ms"] = report.preprocess_ms;
    Json full;
    full["comparisons_made"] = report.full.comparisons_made;
    full["pairwise_ms"] = report.full.pairwise_ms;
    full["total_ms"] = report.full.total_ms;
    j["full"] = std::move(full);
    Json clustered;
    clustered["comparisons_made"] = report.clustered.comparisons_made;
    clustered["cluster_ms"] = report.clustered.cluster_ms;
    clustered["pairwise_ms"] = report.clustered.pairwise_ms;
    clustered["total_ms"] = report.clustered.total_ms;
    j["clustered"] = std::move(clustered);
    j["comparisons_ratio"] = report.comparisons_ratio;
    j["pairwise_time_ratio"] = report.pairwise_time_ratio;
    j["total_time_ratio"] = report.total_time_ratio;
    j["config"] = config_json(report.config);
    return j;
}

std::string bench_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "phase,comparisons_made,cluster_ms,pairwise_ms,total_ms\n";
    out << "full," << report.full.comparisons_made << ",0.00," << fixed2(report.full.pairwise_ms)
        << ',' << fixed2(report.full.total_ms) << "\n";
    out << "clustered," << report.clustered.comparisons_made << ','
        << fixed2(report.clustered.cluster_ms) << ',' << fixed2(report.clustered.pairwise_ms)
        << ',' << fixed2(report.clustered.total_ms) << "\n";
    return out.str();
}

std::string bench_text(const BenchReport& report) {
    std::ostringstream out;
    out << "corpus: " << report.corpus_name << " (" << report.document_count << " documents, "
        << report.repeats << " repeats, median times)\n";
    out << "preprocess (shared): " << fixed2(report.preprocess_ms) << " ms\n";
    out << "full:      " << report.full.comparisons_made << " comparisons, pairwise "
        << fixed2(report.full.pairwise_ms) << " ms, total " << fixed2(report.full.total_ms)
        << " ms\n";
    out << "clustered: " << report.clustered.comparisons_made << " comparisons, cluster "
        << fixed2(report.clustered.cluster_ms) << " ms, pairwise "
        << fixed2(report.clustered.pairwise_ms) << " ms, total "
        << fixed2(report.clustered.total_ms) << " ms\n";
    out << "comparisons ratio (clustered/full): " << fixed2(report.comparisons_ratio) << "\n";
    out << "pairwise time ratio (clustered/full): " << fixed2(report.pairwise_time_ratio)
        << "\n";
    out << "total time ratio (clustered/full): " << fixed2(report.total_time_ratio) << "\n";
    return out.str();
}

void write_file(const std::string& content, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write report to " + path.string());
    out << content;
    if (!out) throw IoError("write failure on report " + path.string());
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw UsageError("unknown report format: " + name + " (expected json, csv or text)");
}

std::string render_report(const DetectionReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::json:
            return report_json(report).dump(2) + "\n";
        case ReportFormat::csv:
            return report_csv(report);
        case ReportFormat::text:
            return report_text(report);
    }
    throw UsageError("unknown report format");
}

std::string render_bench(const BenchReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::json:
            return bench_json(report).dump(2) + "\n";
        case ReportFormat::csv:
            return bench_csv(report);
        case ReportFormat::text:
            return bench_text(report);
    }
    throw UsageError("unknown report format");
}

void emit_report(const DetectionReport& report, ReportFormat format,
                 const std::filesystem::path& out_path) {
    write_file(render_report(report, format), out_path);
}

void emit_report(const BenchReport& report, ReportFormat format,
                 const std::filesystem::path& out_path) {
    write_file(render_bench(report, format), out_path);
}

}  // namespace plagdet
