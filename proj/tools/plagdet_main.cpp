// plagdet — pairwise plagiarism detection over a directory of plain-text
// assignments, with optional k-means pruning of the comparison space.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plagdet/engine.hpp"
#include "plagdet/errors.hpp"
#include "plagdet/stemmer.hpp"

namespace {

struct CommonOptions {
    std::string dir;
    std::string ext = "txt";
    std::string name;
    std::string stopword_file;
    bool stem = false;
    std::size_t min_token_len = 1;
    int ngram = 3;
    std::size_t workers = 1;
    double threshold = 50.0;

    std::optional<std::size_t> k;
    std::uint64_t kmeans_seed = 0;
    std::size_t min_term_freq = 1;
    std::size_t max_iter = 100;
    double tol = 1e-4;

    std::string format = "text";
    std::string out;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_cluster) {
    cmd->add_option("dir", opt.dir, "directory of assignment files")->required();
    cmd->add_option("--ext", opt.ext, "file extension to load (default txt)");
    cmd->add_option("--name", opt.name, "corpus label (default: directory name)");
    cmd->add_option("--stopwords", opt.stopword_file, "stop-word file (one word per line)");
    auto* stem_flag = cmd->add_flag("--stem", opt.stem, "apply Porter stemming");
    cmd->add_flag("--no-stem", "disable stemming (default)")->excludes(stem_flag);
    cmd->add_option("--min-token-len", opt.min_token_len, "drop tokens shorter than this");
    cmd->add_option("--ngram", opt.ngram, "n-gram width (default 3)");
    cmd->add_option("--workers", opt.workers, "worker threads (default 1)");
    cmd->add_option("--threshold", opt.threshold, "report-highlight threshold in percent")
        ->check(CLI::Range(0.0, 100.0));
    cmd->add_option("--format", opt.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opt.out, "output path (default: stdout)");
    if (with_cluster) {
        cmd->add_option("--k", opt.k, "cluster count (default ceil(sqrt(n/2)))");
        cmd->add_option("--kmeans-seed", opt.kmeans_seed, "k-means RNG seed");
        cmd->add_option("--min-term-freq", opt.min_term_freq,
                        "min document frequency for vocabulary terms");
        cmd->add_option("--max-iter", opt.max_iter, "k-means iteration cap");
        cmd->add_option("--tol", opt.tol, "k-means centroid-movement tolerance");
    }
}

plagdet::DetectionConfig make_config(const CommonOptions& opt, plagdet::DetectionMode mode) {
    plagdet::DetectionConfig cfg;
    cfg.mode = mode;
    cfg.ngram_n = opt.ngram;
    cfg.preprocess.stemming_enabled = opt.stem;
    cfg.preprocess.min_token_length = opt.min_token_len;
    if (!opt.stopword_file.empty())
        cfg.preprocess.stopwords = plagdet::load_stopwords(opt.stopword_file);
    cfg.threshold_pct = opt.threshold;
    cfg.workers = opt.workers == 0 ? 1 : opt.workers;
    cfg.cluster.k = opt.k;
    cfg.cluster.seed = opt.kmeans_seed;
    cfg.cluster.min_term_freq = opt.min_term_freq;
    cfg.cluster.max_iter = opt.max_iter;
    cfg.cluster.tol = opt.tol;
    return cfg;
}

void write_or_print(const std::string& content, const std::string& out) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw plagdet::IoError("cannot write output to " + out);
    file << content;
    if (!file) throw plagdet::IoError("write failure on " + out);
}

int run_stem() {
    std::string word;
    while (std::cin >> word) std::cout << plagdet::porter_stem(word) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plagdet: tri-gram plagiarism detection for text assignments"};
    app.require_subcommand(1);

    CommonOptions detect_opt;
    std::string mode = "full";
    std::vector<std::size_t> sweep;
    auto* detect_cmd = app.add_subcommand("detect", "score pairwise similarity in a corpus");
    detect_cmd->add_option("--mode", mode, "full or clustered (default full)")
        ->check(CLI::IsMember({"full", "clustered"}));
    detect_cmd->add_option("--sweep-k", sweep,
                           "run k-means for these k values and print a (k, sse) table")
        ->delimiter(',');
    add_common_flags(detect_cmd, detect_opt, true);

    CommonOptions bench_opt;
    std::size_t repeats = 3;
    auto* bench_cmd =
        app.add_subcommand("bench", "time full vs clustered detection on one corpus");
    bench_cmd->add_option("--repeats", repeats, "measurement repeats (default 3)");
    add_common_flags(bench_cmd, bench_opt, true);

    plagdet::SyntheticSpec gen_spec;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "generate a planted-plagiarism corpus");
    gen_cmd->add_option("--docs", gen_spec.n_docs, "number of documents (default 100)");
    gen_cmd->add_option("--groups", gen_spec.n_groups, "number of planted groups (default 10)");
    gen_cmd->add_option("--copy-rate", gen_spec.copy_rate,
                        "fraction of the group base each member copies (default 0.9)");
    gen_cmd->add_option("--vocab", gen_spec.vocab_size, "vocabulary size (default 1000)");
    gen_cmd->add_option("--len", gen_spec.doc_len, "tokens per document (default 200)");
    gen_cmd->add_option("--seed", gen_spec.seed, "generator seed (default 0)");
    gen_cmd->add_option("--out", gen_out, "output directory")->required();

    auto* stem_cmd =
        app.add_subcommand("stem", "read words on stdin, write Porter stems on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems exit 1, --help exits 0
    }

    try {
        if (stem_cmd->parsed()) return run_stem();

        if (gen_cmd->parsed()) {
            const auto corpus = plagdet::generate_synthetic_corpus(gen_spec);
            plagdet::write_corpus(corpus, gen_out);
            std::cerr << "wrote " << corpus.size() << " documents to " << gen_out << "\n";
            return 0;
        }

        if (detect_cmd->parsed()) {
            const auto cfg = make_config(detect_opt, mode == "full"
                                                         ? plagdet::DetectionMode::full
                                                         : plagdet::DetectionMode::clustered);
            const auto corpus =
                plagdet::load_corpus(detect_opt.dir, {detect_opt.ext}, detect_opt.name);
            if (!sweep.empty()) {
                const auto docs_count = corpus.size();
                std::vector<plagdet::PreprocessedDocument> docs(docs_count);
                for (std::size_t i = 0; i < docs_count; ++i)
                    docs[i] = plagdet::preprocess(corpus.documents[i], cfg.preprocess);
                const auto vocab =
                    plagdet::build_vocabulary(docs, cfg.cluster.min_term_freq);
                std::vector<plagdet::TermVector> vectors;
                vectors.reserve(docs.size());
                for (const auto& doc : docs) vectors.push_back(plagdet::vectorize(doc, vocab));
                plagdet::KMeansParams base;
                base.seed = cfg.cluster.seed;
                base.max_iter = cfg.cluster.max_iter;
                base.tol = cfg.cluster.tol;
                std::cerr << "k\tsse\n";
                for (const auto& [k, sse] : plagdet::sweep_k(vectors, sweep, base))
                    std::cerr << k << '\t' << sse << '\n';
            }
            const auto report = plagdet::detect(corpus, cfg);
            write_or_print(
                plagdet::render_report(report, plagdet::parse_format(detect_opt.format)),
                detect_opt.out);
            return 0;
        }

        if (bench_cmd->parsed()) {
            const auto cfg = make_config(bench_opt, plagdet::DetectionMode::clustered);
            const auto corpus =
                plagdet::load_corpus(bench_opt.dir, {bench_opt.ext}, bench_opt.name);
            const auto report = plagdet::bench(corpus, cfg, repeats);
            write_or_print(
                plagdet::render_bench(report, plagdet::parse_format(bench_opt.format)),
                bench_opt.out);
            return 0;
        }
    } catch (const plagdet::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const plagdet::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
