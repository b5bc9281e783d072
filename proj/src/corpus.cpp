#include "plagdet/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "plagdet/errors.hpp"
#include "textutil.hpp"

namespace plagdet {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on file: " + path.string());
    return std::move(buf).str();
}

bool extension_matches(const fs::path& path, const std::vector<std::string>& extensions) {
    const std::string ext = path.extension().string();  // includes the dot
    for (const auto& wanted : extensions) {
        if (ext.size() == wanted.size() + 1 && ext[0] == '.' &&
            ext.compare(1, std::string::npos, wanted) == 0)
            return true;
    }
    return false;
}

}  // namespace

Corpus load_corpus(const fs::path& root_dir, const std::vector<std::string>& extensions,
                   const std::string& name) {
    std::error_code ec;
    if (!fs::is_directory(root_dir, ec))
        throw IoError("not a readable directory: " + root_dir.string());

    std::vector<fs::path> files;
    for (auto it = fs::recursive_directory_iterator(root_dir, ec);
         it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) throw IoError("cannot enumerate " + root_dir.string() + ": " + ec.message());
        if (it->is_regular_file() && extension_matches(it->path(), extensions))
            files.push_back(it->path());
    }
    if (files.empty()) throw UsageError("empty corpus: no matching files under " + root_dir.string());

    Corpus corpus;
    corpus.name = name.empty() ? root_dir.filename().string() : name;
    corpus.documents.reserve(files.size());
    for (const auto& path : files) {
        RawDocument doc;
        doc.id = fs::relative(path, root_dir).generic_string();
        doc.path = path.string();
        doc.text = read_file(path);
        const std::size_t bad = textutil::find_invalid_utf8(doc.text);
        if (bad != std::string::npos) {
            throw IoError("invalid UTF-8 in " + path.string() + " at byte offset " +
                          std::to_string(bad));
        }
        if (doc.text.empty()) corpus.warnings.push_back("empty file: " + doc.id);
        corpus.documents.push_back(std::move(doc));
    }

    std::sort(corpus.documents.begin(), corpus.documents.end(),
              [](const RawDocument& a, const RawDocument& b) { return a.id < b.id; });
    std::sort(corpus.warnings.begin(), corpus.warnings.end());
    for (std::size_t i = 1; i < corpus.documents.size(); ++i) {
        if (corpus.documents[i].id == corpus.documents[i - 1].id)
            throw IoError("duplicate document id: " + corpus.documents[i].id);
    }
    return corpus;
}

void write_corpus(const Corpus& corpus, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
    for (const auto& doc : corpus.documents) {
        const fs::path path = dir / fs::path(doc.id);
        if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write file: " + path.string());
        out << doc.text;
        if (!out) throw IoError("write failure on file: " + path.string());
    }
}

}  // namespace plagdet
