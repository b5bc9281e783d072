#include <doctest.h>

#include <string>
#include <vector>

#include "plagdet/engine.hpp"
#include "plagdet/errors.hpp"

using namespace plagdet;

namespace {

Corpus corpus_of(std::vector<std::pair<std::string, std::string>> files) {
    Corpus corpus;
    corpus.name = "test";
    for (auto& [id, text] : files) corpus.documents.push_back({id, "", text});
    return corpus;
}

DetectionConfig plain_config() {
    DetectionConfig cfg;
    cfg.preprocess.stopwords.clear();  // keep the tiny fixtures literal
    return cfg;
}

// Four documents, two planted near-duplicate pairs, disjoint vocabulary:
// each pair shares a 20-token prefix and differs in its final token.
Corpus two_pair_corpus() {
    const auto doc_text = [](const std::string& prefix, const std::string& tail) {
        std::string text;
        for (int t = 0; t < 20; ++t) text += prefix + std::to_string(t) + " ";
        return text + tail;
    };
    return corpus_of({
        {"a1.txt", doc_text("apple", "applered")},
        {"a2.txt", doc_text("apple", "applegreen")},
        {"b1.txt", doc_text("pear", "pearred")},
        {"b2.txt", doc_text("pear", "peargreen")},
    });
}

}  // namespace

TEST_CASE("detect_full compares every unordered pair") {
    const auto corpus = corpus_of({{"a.txt", "one two three four"},
                                   {"b.txt", "five six seven eight"},
                                   {"c.txt", "nine ten eleven twelve"}});
    const auto report = detect_full(corpus, plain_config());

    CHECK(report.per_pair.size() == 3);
    CHECK(report.comparisons_made == 3);
    CHECK(report.comparisons_possible == 3);
    CHECK(report.mode == DetectionMode::full);
    CHECK(report.cluster_table.empty());
    CHECK_FALSE(report.cluster.has_value());

    // records sorted by (doc_a, doc_b)
    CHECK(report.per_pair[0].doc_a == "a.txt");
    CHECK(report.per_pair[0].doc_b == "b.txt");
    CHECK(report.per_pair[2].doc_a == "b.txt");
}

TEST_CASE("a verbatim copy scores containment 100") {
    const auto corpus = corpus_of({{"a.txt", "the quick brown fox jumps over the lazy dog"},
                                   {"b.txt", "the quick brown fox jumps over the lazy dog"}});
    const auto report = detect_full(corpus, plain_config());
    REQUIRE(report.per_pair.size() == 1);
    CHECK(report.per_pair[0].containment_pct == 100.0);
    CHECK(report.per_pair[0].jaccard_pct == 100.0);
    CHECK(report.per_doc_max.at("a.txt")->partner == "b.txt");
    CHECK(report.per_doc_max.at("a.txt")->containment_pct == 100.0);
}

TEST_CASE("disjoint documents score zero") {
    const auto corpus = corpus_of({{"a.txt", "one two three four five"},
                                   {"b.txt", "six seven eight nine ten"}});
    const auto report = detect_full(corpus, plain_config());
    REQUIRE(report.per_pair.size() == 1);
    CHECK(report.per_pair[0].containment_pct == 0.0);
}

TEST_CASE("detection requires at least two documents") {
    const auto corpus = corpus_of({{"only.txt", "alone in here"}});
    CHECK_THROWS_AS(detect_full(corpus, plain_config()), UsageError);
    CHECK_THROWS_AS(detect_clustered(corpus, plain_config()), UsageError);
}

TEST_CASE("clustered mode prunes cross-cluster pairs without rescoring") {
    const auto corpus = two_pair_corpus();
    auto cfg = plain_config();
    cfg.mode = DetectionMode::clustered;
    cfg.cluster.k = 2;
    cfg.cluster.seed = 0;

    const auto clustered = detect_clustered(corpus, cfg);
    const auto full = detect_full(corpus, plain_config());

    CHECK(clustered.comparisons_made == 2);
    CHECK(clustered.comparisons_possible == 6);
    REQUIRE(clustered.per_pair.size() == 2);
    for (const auto& rec : clustered.per_pair) CHECK(rec.containment_pct >= 90.0);

    // every clustered record equals the full-mode record for that pair
    for (const auto& rec : clustered.per_pair) {
        bool matched = false;
        for (const auto& ref : full.per_pair) {
            if (ref.doc_a == rec.doc_a && ref.doc_b == rec.doc_b) {
                CHECK(rec == ref);
                matched = true;
            }
        }
        CHECK(matched);
    }

    REQUIRE(clustered.cluster.has_value());
    CHECK(clustered.cluster->k == 2);
    CHECK(clustered.cluster_table.size() == 2);
}

TEST_CASE("k=1 clustering degenerates to full detection") {
    const auto corpus = two_pair_corpus();
    auto cfg = plain_config();
    cfg.mode = DetectionMode::clustered;
    cfg.cluster.k = 1;

    const auto clustered = detect_clustered(corpus, cfg);
    const auto full = detect_full(corpus, plain_config());
    REQUIRE(clustered.per_pair.size() == full.per_pair.size());
    for (std::size_t i = 0; i < full.per_pair.size(); ++i)
        CHECK(clustered.per_pair[i] == full.per_pair[i]);
}

TEST_CASE("k=n leaves nothing to compare and per-doc maxima report none") {
    const auto corpus = two_pair_corpus();
    auto cfg = plain_config();
    cfg.mode = DetectionMode::clustered;
    cfg.cluster.k = 4;

    const auto report = detect_clustered(corpus, cfg);
    CHECK(report.comparisons_made == 0);
    CHECK(report.per_pair.empty());
    for (const auto& [doc, best] : report.per_doc_max) CHECK_FALSE(best.has_value());
}

TEST_CASE("synthetic corpus is deterministic and honors copy_rate extremes") {
    SyntheticSpec spec;
    spec.n_docs = 12;
    spec.n_groups = 3;
    spec.vocab_size = 300;
    spec.doc_len = 60;
    spec.seed = 7;

    spec.copy_rate = 1.0;
    const auto verbatim = generate_synthetic_corpus(spec);
    REQUIRE(verbatim.size() == 12);
    const auto verbatim_report = detect_full(verbatim, plain_config());
    for (const auto& rec : verbatim_report.per_pair) {
        const bool same_group = rec.doc_a.substr(0, 4) == rec.doc_b.substr(0, 4);
        if (same_group)
            CHECK(rec.containment_pct == 100.0);
        else
            CHECK(rec.containment_pct == 0.0);
    }

    spec.copy_rate = 0.0;
    const auto disjoint = generate_synthetic_corpus(spec);
    const auto disjoint_report = detect_full(disjoint, plain_config());
    for (const auto& rec : disjoint_report.per_pair) CHECK(rec.containment_pct == 0.0);

    const auto again = generate_synthetic_corpus(spec);
    REQUIRE(again.size() == disjoint.size());
    for (std::size_t i = 0; i < again.size(); ++i) {
        CHECK(again.documents[i].id == disjoint.documents[i].id);
        CHECK(again.documents[i].text == disjoint.documents[i].text);
    }
}

TEST_CASE("synthetic corpus rejects bad parameters") {
    SyntheticSpec spec;
    spec.n_docs = 5;
    spec.n_groups = 6;
    CHECK_THROWS_AS(generate_synthetic_corpus(spec), UsageError);
    spec.n_groups = 2;
    spec.copy_rate = 1.5;
    CHECK_THROWS_AS(generate_synthetic_corpus(spec), UsageError);
    spec.copy_rate = 0.5;
    spec.vocab_size = 1;
    CHECK_THROWS_AS(generate_synthetic_corpus(spec), UsageError);
}

TEST_CASE("bench reports counts, medians and ratios") {
    SyntheticSpec spec;
    spec.n_docs = 20;
    spec.n_groups = 4;
    spec.copy_rate = 0.9;
    spec.vocab_size = 400;
    spec.doc_len = 80;
    const auto corpus = generate_synthetic_corpus(spec);

    auto cfg = plain_config();
    cfg.cluster.k = 4;
    const auto report = bench(corpus, cfg, 3);

    CHECK(report.full.comparisons_made == 190);
    // balanced 4x5 recovery: 4 * C(5,2) = 40 comparisons
    CHECK(report.clustered.comparisons_made == 40);
    CHECK(report.comparisons_ratio == doctest::Approx(40.0 / 190.0));
    CHECK(report.repeats == 3);
    CHECK(report.full.pairwise_ms > 0.0);
    CHECK(report.clustered.pairwise_ms > 0.0);

    // k=1: comparison-count ratio is exactly 1
    cfg.cluster.k = 1;
    const auto degenerate = bench(corpus, cfg, 1);
    CHECK(degenerate.comparisons_ratio == 1.0);
}

TEST_CASE("reports render to json, csv and text, byte-stable across emits") {
    const auto corpus = two_pair_corpus();
    auto cfg = plain_config();
    const auto report = detect_full(corpus, cfg);

    const auto json_once = render_report(report, ReportFormat::json);
    const auto json_twice = render_report(report, ReportFormat::json);
    CHECK(json_once == json_twice);
    CHECK(json_once.find("\"schema_version\": 1") != std::string::npos);

    const auto csv = render_report(report, ReportFormat::csv);
    CHECK(csv.rfind("doc_a,doc_b,overlap,containment_pct,jaccard_pct\n", 0) == 0);

    const auto text = render_report(report, ReportFormat::text);
    CHECK(text.find("per-document maximum plagiarism") != std::string::npos);
}

TEST_CASE("csv rows carry two-decimal percentages") {
    // unigram sets of size 4 and 8 overlapping in 2 tokens: 50.00 / 20.00
    const auto corpus = corpus_of(
        {{"a.txt", "carol carlos sam sue"},
         {"b.txt", "carol carlos xavi xena xeno ximena xolo xuan"}});
    auto cfg = plain_config();
    cfg.ngram_n = 1;
    const auto report = detect_full(corpus, cfg);
    const auto csv = render_report(report, ReportFormat::csv);
    CHECK(csv ==
          "doc_a,doc_b,overlap,containment_pct,jaccard_pct\n"
          "a.txt,b.txt,2,50.00,20.00\n");
}

TEST_CASE("empty pair sections still render valid reports") {
    const auto corpus = two_pair_corpus();
    auto cfg = plain_config();
    cfg.mode = DetectionMode::clustered;
    cfg.cluster.k = 4;
    const auto report = detect_clustered(corpus, cfg);
    REQUIRE(report.per_pair.empty());

    const auto csv = render_report(report, ReportFormat::csv);
    CHECK(csv == "doc_a,doc_b,overlap,containment_pct,jaccard_pct\n");
    const auto text = render_report(report, ReportFormat::text);
    CHECK(text.find("(none)") != std::string::npos);
    CHECK_NOTHROW(render_report(report, ReportFormat::json));
}

TEST_CASE("identical configs give identical reports for any worker count") {
    SyntheticSpec spec;
    spec.n_docs = 24;
    spec.n_groups = 4;
    spec.copy_rate = 0.8;
    spec.vocab_size = 400;
    spec.doc_len = 60;
    const auto corpus = generate_synthetic_corpus(spec);

    auto cfg = plain_config();
    cfg.mode = DetectionMode::clustered;
    cfg.cluster.k = 4;

    cfg.workers = 1;
    const auto serial = detect(corpus, cfg);
    cfg.workers = 8;
    const auto parallel = detect(corpus, cfg);

    CHECK(serial.per_pair == parallel.per_pair);
    CHECK(serial.cluster_table == parallel.cluster_table);
    REQUIRE(serial.per_doc_max.size() == parallel.per_doc_max.size());
    for (const auto& [doc, best] : serial.per_doc_max) {
        const auto& other = parallel.per_doc_max.at(doc);
        CHECK(best.has_value() == other.has_value());
        if (best) {
            CHECK(best->partner == other->partner);
            CHECK(best->containment_pct == other->containment_pct);
        }
    }
}
