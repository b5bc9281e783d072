#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "plagdet/errors.hpp"
#include "plagdet/trigram.hpp"

using namespace plagdet;

namespace {

// Independent oracle: materializes n-gram windows as explicit token
// lists and intersects them quadratically. No hashing, no sorting.
using Window = std::vector<std::string>;

std::vector<Window> naive_windows(const std::vector<std::string>& tokens, int n) {
    std::vector<Window> windows;
    const auto width = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i + width <= tokens.size(); ++i)
        windows.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                             tokens.begin() + static_cast<std::ptrdiff_t>(i + width));
    std::vector<Window> distinct;
    for (const auto& w : windows) {
        bool seen = false;
        for (const auto& d : distinct)
            if (d == w) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(w);
    }
    return distinct;
}

std::size_t naive_overlap(const std::vector<Window>& a, const std::vector<Window>& b) {
    std::size_t count = 0;
    for (const auto& wa : a)
        for (const auto& wb : b)
            if (wa == wb) {
                ++count;
                break;
            }
    return count;
}

double naive_containment(const std::vector<Window>& a, const std::vector<Window>& b) {
    const std::size_t denom = std::min(a.size(), b.size());
    if (denom == 0) return 0.0;
    return 100.0 * static_cast<double>(naive_overlap(a, b)) / static_cast<double>(denom);
}

double naive_jaccard(const std::vector<Window>& a, const std::vector<Window>& b) {
    const std::size_t inter = naive_overlap(a, b);
    const std::size_t uni = a.size() + b.size() - inter;
    if (uni == 0) return 0.0;
    return 100.0 * static_cast<double>(inter) / static_cast<double>(uni);
}

PreprocessedDocument doc_of(std::string id, std::vector<std::string> tokens) {
    return {std::move(id), std::move(tokens)};
}

std::vector<std::string> random_tokens(std::mt19937& rng, std::size_t len,
                                       std::size_t alphabet) {
    std::vector<std::string> tokens;
    tokens.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        tokens.push_back("t" + std::to_string(rng() % alphabet));
    return tokens;
}

}  // namespace

TEST_CASE("build_trigrams slides a width-n window over the token stream") {
    const auto set = build_trigrams(doc_of("d", {"a", "b", "c", "d"}), 3);
    CHECK(set.size() == 2);
    CHECK(set.n == 3);
    CHECK(set.doc_id == "d");

    CHECK(build_trigrams(doc_of("d", {"a", "b"}), 3).size() == 0);
    CHECK(build_trigrams(doc_of("d", {}), 3).size() == 0);

    // five windows collapse to two distinct grams
    const auto repeated = build_trigrams(doc_of("d", {"x", "y", "x", "y", "x", "y", "x"}), 3);
    CHECK(repeated.size() == 2);

    CHECK_THROWS_AS(build_trigrams(doc_of("d", {"a"}), 0), UsageError);
}

TEST_CASE("overlap is the distinct-gram intersection size") {
    const auto a = build_trigrams(doc_of("a", {"a", "b", "c", "d", "e", "f", "g", "h", "i"}), 3);
    CHECK(overlap(a, a) == 7);

    const auto b = build_trigrams(doc_of("b", {"p", "q", "r", "s"}), 3);
    CHECK(overlap(a, b) == 0);

    // shared suffix: windows (d,e,f)..(g,h,i) appear in both
    const auto c = build_trigrams(doc_of("c", {"d", "e", "f", "g", "h", "i"}), 3);
    CHECK(overlap(a, c) == 4);

    const auto different_n = build_trigrams(doc_of("d", {"a", "b", "c"}), 2);
    CHECK_THROWS_AS(overlap(a, different_n), UsageError);
}

TEST_CASE("containment and jaccard percentages at the spec points") {
    const auto full = build_trigrams(doc_of("a", {"u", "v", "w", "x"}), 3);
    CHECK(containment_pct(full, full) == 100.0);
    CHECK(jaccard_pct(full, full) == 100.0);

    const auto empty = build_trigrams(doc_of("b", {"u"}), 3);
    CHECK(containment_pct(full, empty) == 0.0);
    CHECK(jaccard_pct(full, empty) == 0.0);
    CHECK(jaccard_pct(empty, empty) == 0.0);

    // size 4 vs size 8 with overlap 2 -> containment 50, jaccard 20
    // (unigram sets make the sizes explicit)
    const auto small = build_trigrams(doc_of("a", {"c1", "c2", "s1", "s2"}), 1);
    const auto large = build_trigrams(
        doc_of("b", {"c1", "c2", "x1", "x2", "x3", "x4", "x5", "x6"}), 1);
    REQUIRE(small.size() == 4);
    REQUIRE(large.size() == 8);
    CHECK(overlap(small, large) == 2);
    CHECK(containment_pct(small, large) == 50.0);
    CHECK(jaccard_pct(small, large) == 20.0);

    const auto naive_a = naive_windows({"c1", "c2", "s1", "s2"}, 1);
    const auto naive_b = naive_windows({"c1", "c2", "x1", "x2", "x3", "x4", "x5", "x6"}, 1);
    CHECK(naive_containment(naive_a, naive_b) == 50.0);
    CHECK(naive_jaccard(naive_a, naive_b) == 20.0);
}

TEST_CASE("engine percentages equal the naive oracle on random pairs") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const auto ta = random_tokens(rng, rng() % 51, 10);
        const auto tb = random_tokens(rng, rng() % 51, 10);
        const int n = 1 + static_cast<int>(rng() % 4);

        const auto sa = build_trigrams(doc_of("a", ta), n);
        const auto sb = build_trigrams(doc_of("b", tb), n);
        const auto na = naive_windows(ta, n);
        const auto nb = naive_windows(tb, n);

        REQUIRE(sa.size() == na.size());
        REQUIRE(sb.size() == nb.size());
        CHECK(overlap(sa, sb) == naive_overlap(na, nb));
        CHECK(containment_pct(sa, sb) == naive_containment(na, nb));
        CHECK(jaccard_pct(sa, sb) == naive_jaccard(na, nb));
    }
}

TEST_CASE("similarity is symmetric, self-saturating and jaccard-bounded") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto ta = random_tokens(rng, 3 + rng() % 48, 6);
        const auto tb = random_tokens(rng, 3 + rng() % 48, 6);
        const auto a = build_trigrams(doc_of("a", ta), 3);
        const auto b = build_trigrams(doc_of("b", tb), 3);

        CHECK(containment_pct(a, b) == containment_pct(b, a));
        CHECK(jaccard_pct(a, b) == jaccard_pct(b, a));
        CHECK(jaccard_pct(a, b) <= containment_pct(a, b));
        if (a.size() > 0) CHECK(containment_pct(a, a) == 100.0);
        CHECK(overlap(a, b) <= std::min(a.size(), b.size()));
    }
}

TEST_CASE("appending tokens to one document never decreases overlap") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const auto ta = random_tokens(rng, 3 + rng() % 30, 5);
        auto tb = random_tokens(rng, 3 + rng() % 30, 5);
        const auto a = build_trigrams(doc_of("a", ta), 3);
        const auto before = overlap(a, build_trigrams(doc_of("b", tb), 3));

        const auto extra = random_tokens(rng, 1 + rng() % 10, 5);
        tb.insert(tb.end(), extra.begin(), extra.end());
        const auto after = overlap(a, build_trigrams(doc_of("b", tb), 3));
        CHECK(after >= before);
    }
}

TEST_CASE("make_record orders ids and carries exact counts") {
    const auto a = build_trigrams(doc_of("z.txt", {"a", "b", "c", "d"}), 3);
    const auto b = build_trigrams(doc_of("a.txt", {"a", "b", "c", "e"}), 3);
    const auto rec = make_record(a, b);
    CHECK(rec.doc_a == "a.txt");
    CHECK(rec.doc_b == "z.txt");
    CHECK(rec.overlap == 1);
    CHECK(rec.size_a == 2);
    CHECK(rec.size_b == 2);
    CHECK(rec.containment_pct == 50.0);
    CHECK(rec.jaccard_pct == doctest::Approx(100.0 / 3.0));
}

TEST_CASE("max_similarity picks the best partner with lexicographic ties") {
    std::vector<SimilarityRecord> records;
    records.push_back({"a", "b", 0, 0, 0, 30.0, 10.0});
    records.push_back({"a", "d", 0, 0, 0, 80.0, 20.0});
    records.push_back({"a", "c", 0, 0, 0, 80.0, 20.0});

    const auto best = max_similarity("a", records);
    CHECK(best.partner == "c");
    CHECK(best.containment_pct == 80.0);

    const std::vector<SimilarityRecord> single{{"a", "b", 0, 0, 0, 55.0, 12.0}};
    CHECK(max_similarity("a", single).partner == "b");
    CHECK(max_similarity("b", single).partner == "a");

    std::vector<SimilarityRecord> zeros;
    zeros.push_back({"a", "c", 0, 0, 0, 0.0, 0.0});
    zeros.push_back({"a", "b", 0, 0, 0, 0.0, 0.0});
    CHECK(max_similarity("a", zeros).partner == "b");

    CHECK_THROWS_WITH_AS(max_similarity("zz", records), doctest::Contains("no pairs"),
                         UsageError);
}
