#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "plagdet/errors.hpp"
#include "plagdet/stemmer.hpp"

using namespace plagdet;

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing test data file: ", path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("porter measure of whole words") {
    CHECK(porter_measure("tr") == 0);
    CHECK(porter_measure("ee") == 0);
    CHECK(porter_measure("tree") == 0);
    CHECK(porter_measure("y") == 0);
    CHECK(porter_measure("by") == 0);
    CHECK(porter_measure("trouble") == 1);
    CHECK(porter_measure("oats") == 1);
    CHECK(porter_measure("trees") == 1);
    CHECK(porter_measure("ivy") == 1);
    CHECK(porter_measure("troubles") == 2);
    CHECK(porter_measure("private") == 2);
    CHECK(porter_measure("oaten") == 2);
    CHECK_THROWS_AS(porter_measure("it's"), UsageError);
    CHECK_THROWS_AS(porter_measure(""), UsageError);
}

TEST_CASE("porter stem on classic vocabulary entries") {
    CHECK(porter_stem("caresses") == "caress");
    CHECK(porter_stem("ponies") == "poni");
    CHECK(porter_stem("ties") == "ti");
    CHECK(porter_stem("relational") == "relat");
    CHECK(porter_stem("sky") == "sky");
    CHECK(porter_stem("agreed") == "agre");
    CHECK(porter_stem("apology") == "apolog");  // the step-2 logi rule
    CHECK(porter_stem("happy") == "happi");
    CHECK(porter_stem("running") == "run");
    CHECK(porter_stem("runs") == "run");
}

TEST_CASE("short words and non-letter tokens pass through") {
    CHECK(porter_stem("") == "");
    CHECK(porter_stem("a") == "a");
    CHECK(porter_stem("is") == "is");
    CHECK(porter_stem("abc123") == "abc123");
    CHECK(porter_stem("co-op") == "co-op");
    CHECK(porter_stem("naïve") == "naïve");
}

TEST_CASE("stem_tokens is element-wise and preserves order") {
    CHECK(stem_tokens({"running", "runs"}) == std::vector<std::string>{"run", "run"});
    CHECK(stem_tokens({}) == std::vector<std::string>{});
    CHECK(stem_tokens({"cat"}) == std::vector<std::string>{"cat"});
}

TEST_CASE("porter stem never returns an empty string for letter words") {
    for (const char* word : {"a", "ax", "axe", "ies", "sses", "eeeed", "ing", "ness", "ation"})
        CHECK_FALSE(porter_stem(word).empty());
}

// Full agreement with the published sample vocabulary and its stemmed
// output. Any mismatch prints the offending word.
TEST_CASE("porter stem matches the reference vocabulary on every entry") {
    const auto vocabulary = read_lines(std::string(PLAGDET_TEST_DATA_DIR) + "/porter/voc.txt");
    const auto expected = read_lines(std::string(PLAGDET_TEST_DATA_DIR) + "/porter/output.txt");
    REQUIRE(vocabulary.size() == expected.size());
    REQUIRE(vocabulary.size() > 20000);

    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
        const std::string got = porter_stem(vocabulary[i]);
        if (got != expected[i]) {
            ++mismatches;
            if (mismatches <= 10)
                MESSAGE("mismatch: ", vocabulary[i], " -> ", got, " (expected ", expected[i], ")");
        }
    }
    CHECK(mismatches == 0);
}
