#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "plagdet/errors.hpp"
#include "plagdet/preprocess.hpp"

using namespace plagdet;
namespace fs = std::filesystem;

TEST_CASE("normalize_case lowercases and changes nothing else") {
    CHECK(normalize_case("The CAT") == "the cat");
    CHECK(normalize_case("") == "");
    CHECK(normalize_case("abc123") == "abc123");
    CHECK(normalize_case("MiXeD CaSe!") == "mixed case!");
    CHECK(normalize_case("ÉCOLE Straße") == "école straße");
    CHECK(normalize_case("ΑΘΗΝΑ") == "αθηνα");
}

TEST_CASE("strip_delimiters replaces punctuation and symbols with spaces") {
    CHECK(strip_delimiters("end. start") == "end  start");
    CHECK(strip_delimiters("co-operate") == "co operate");
    CHECK(strip_delimiters("no_delims here") == "no delims here");
    CHECK(strip_delimiters("a+b=c") == "a b c");
    CHECK(strip_delimiters("«quoted»") == " quoted ");
    CHECK(strip_delimiters("don't") == "don t");
    CHECK(strip_delimiters("küche 12") == "küche 12");
}

TEST_CASE("tokenize splits on whitespace runs") {
    CHECK(tokenize("the cat sat") == std::vector<std::string>{"the", "cat", "sat"});
    CHECK(tokenize("  ") == std::vector<std::string>{});
    CHECK(tokenize("a\nb c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(tokenize("one\t two\r\nthree") == std::vector<std::string>{"one", "two", "three"});
}

TEST_CASE("tokenize drops tokens shorter than min_token_length") {
    CHECK(tokenize("a bb ccc", 2) == std::vector<std::string>{"bb", "ccc"});
    // length is counted in codepoints, not bytes
    CHECK(tokenize("é ab", 2) == std::vector<std::string>{"ab"});
    CHECK(tokenize("éé ab", 2) == std::vector<std::string>{"éé", "ab"});
}

TEST_CASE("remove_stopwords keeps order of survivors") {
    const StopwordSet stoplist{"the", "on"};
    CHECK(remove_stopwords({"the", "cat", "sat", "on", "the", "mat"}, stoplist) ==
          std::vector<std::string>{"cat", "sat", "mat"});
    CHECK(remove_stopwords({"the", "on", "the"}, stoplist) == std::vector<std::string>{});
    CHECK(remove_stopwords({"cat", "mat"}, StopwordSet{}) ==
          std::vector<std::string>{"cat", "mat"});
}

TEST_CASE("preprocess composes the pipeline") {
    PreprocessConfig cfg;
    cfg.stopwords = StopwordSet{"the"};

    RawDocument doc{"d", "", "The Cat, sat!"};
    CHECK(preprocess(doc, cfg).tokens == std::vector<std::string>{"cat", "sat"});

    doc.text = "";
    CHECK(preprocess(doc, cfg).tokens.empty());

    cfg.stopwords.clear();
    cfg.stemming_enabled = true;
    doc.text = "Running, runs.";
    CHECK(preprocess(doc, cfg).tokens == std::vector<std::string>{"run", "run"});
}

TEST_CASE("preprocess preserves the document id") {
    PreprocessConfig cfg;
    RawDocument doc{"sub/x.txt", "", "Hello world"};
    CHECK(preprocess(doc, cfg).id == "sub/x.txt");
}

TEST_CASE("preprocess is idempotent on its own output") {
    PreprocessConfig cfg;
    cfg.min_token_length = 2;
    const char* samples[] = {
        "The CAT, sat; on the (mat)! Again?",
        "Numbers 12 and 34 survive -- punctuation doesn't.",
        "mixed«Unicode»— dashes…andّ marks",
        "",
    };
    for (const char* sample : samples) {
        const auto once = preprocess({"d", "", sample}, cfg).tokens;
        std::string rejoined;
        for (const auto& token : once) {
            if (!rejoined.empty()) rejoined += ' ';
            rejoined += token;
        }
        const auto twice = preprocess({"d", "", rejoined}, cfg).tokens;
        CHECK(once == twice);
    }
}

TEST_CASE("normalize_case and strip_delimiters commute on ASCII") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        const int len = static_cast<int>(rng() % 60);
        for (int i = 0; i < len; ++i) text.push_back(static_cast<char>(32 + rng() % 95));
        CHECK(normalize_case(strip_delimiters(text)) == strip_delimiters(normalize_case(text)));
    }
}

TEST_CASE("default stop-word list is lowercase and delimiter-free") {
    const auto& words = default_stopwords();
    CHECK(words.size() >= 110);
    CHECK(words.size() <= 135);
    CHECK(words.contains("the"));
    CHECK(words.contains("on"));
    for (const auto& word : words) {
        CHECK(word == normalize_case(word));
        CHECK(tokenize(strip_delimiters(word)) == std::vector<std::string>{word});
    }
}

TEST_CASE("load_stopwords parses comments and blanks, lowercases entries") {
    const fs::path path = fs::temp_directory_path() / "plagdet_stopwords_test.txt";
    {
        std::ofstream out(path);
        out << "# a comment line\n"
            << "The\n"
            << "\n"
            << "  on   # trailing comment\n"
            << "mat\n";
    }
    const auto words = load_stopwords(path);
    CHECK(words == StopwordSet{"the", "on", "mat"});
    fs::remove(path);
}

TEST_CASE("load_stopwords rejects entries that are not single clean tokens") {
    const fs::path path = fs::temp_directory_path() / "plagdet_stopwords_bad.txt";
    {
        std::ofstream out(path);
        out << "well-formed\n";  // contains a delimiter
    }
    CHECK_THROWS_AS(load_stopwords(path), UsageError);
    fs::remove(path);
    CHECK_THROWS_AS(load_stopwords("/no/such/stopword/file"), IoError);
}
