#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace plagdet {

/// One ingested assignment. Immutable once loaded.
struct RawDocument {
    std::string id;    // path relative to the corpus root, '/'-separated
    std::string path;  // source file path as given to the loader
    std::string text;  // full UTF-8 content
};

/// A set of assignments to compare against each other. Documents are
/// ordered lexicographically by id, independent of filesystem
/// enumeration order, so downstream output is reproducible.
struct Corpus {
    std::string name;
    std::vector<RawDocument> documents;
    std::vector<std::string> warnings;  // e.g. empty files

    std::size_t size() const { return documents.size(); }
};

/// Loads every file under `root_dir` (recursively) whose extension is in
/// `extensions` (no leading dot). Ids are unique and the document list is
/// sorted by id.
///
/// Throws IoError for unreadable files, for content that is not valid
/// UTF-8 (the message names the file and byte offset), and for duplicate
/// ids; throws UsageError when no file matches ("empty corpus").
Corpus load_corpus(const std::filesystem::path& root_dir,
                   const std::vector<std::string>& extensions = {"txt"},
                   const std::string& name = "");

/// Writes one file per document under `dir`, creating it if needed.
/// Counterpart of load_corpus, used by the synthetic generator CLI.
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);

}  // namespace plagdet
