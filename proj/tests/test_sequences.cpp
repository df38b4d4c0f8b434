#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "sqcomp/constructors.hpp"
#include "sqcomp/counting.hpp"
#include "sqcomp/errors.hpp"
#include "sqcomp/sequence_io.hpp"
#include "sqcomp/sequences.hpp"
#include "sqcomp/verify/oracles.hpp"

using namespace sqcomp;

namespace {

ComplementCandidate range_set(u64 lo, u64 hi) {
    std::vector<u64> v;
    for (u64 x = lo; x <= hi; ++x)
        v.push_back(x);
    return ComplementCandidate(std::move(v));
}

ComplementCandidate random_set(std::mt19937_64& rng, u64 max_value, std::size_t count) {
    std::uniform_int_distribution<u64> dist(0, max_value);
    std::vector<u64> v(count);
    for (auto& x : v)
        x = dist(rng);
    return ComplementCandidate::from_unsorted(std::move(v));
}

}  // namespace

TEST_CASE("candidate construction enforces strict increase") {
    CHECK_NOTHROW(ComplementCandidate({0, 3, 5}));
    CHECK_THROWS_AS(ComplementCandidate({0, 5, 3}), PreconditionError);
    CHECK_THROWS_AS(ComplementCandidate({2, 2}), PreconditionError);

    const auto w = ComplementCandidate::from_unsorted({9, 1, 4, 1}, "sq");
    CHECK(w.size() == 3);
    CHECK(w.element(1) == 1);
    CHECK(w.element(3) == 9);
    CHECK_THROWS(w.element(0));
    CHECK_THROWS(w.element(4));
    CHECK(w.label() == "sq");
    CHECK(w.contains(4));
    CHECK_FALSE(w.contains(5));
    CHECK(w.max() == 9u);
    CHECK_FALSE(ComplementCandidate().max().has_value());
    CHECK(w == w.with_label("other"));
}

TEST_CASE("counting_function counts elements not exceeding x") {
    const ComplementCandidate w({0, 3, 5});
    CHECK(counting_function(w, 4) == 2);
    CHECK(counting_function(w, 0) == 1);
    CHECK(counting_function(w, 5) == 3);
    CHECK(counting_function(ComplementCandidate(), 100) == 0);

    std::mt19937_64 rng(11);
    const auto r = random_set(rng, 1000, 200);
    std::size_t prev = 0;
    for (u64 x = 0; x <= 1100; ++x) {
        const auto c = counting_function(r, x);
        CHECK(c >= prev);
        prev = c;
    }
    for (std::size_t i = 0; i < r.size(); ++i)
        CHECK(counting_function(r, r.elements()[i]) >= i + 1);
}

TEST_CASE("coverage of the squares alone") {
    const auto report = coverage_report(ComplementCandidate({0}), 20);
    const std::vector<u64> expected{0, 2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20};
    CHECK(report.uncovered == expected);
    CHECK_FALSE(report.threshold.has_value());
    CHECK(report.uncovered_positive() == expected.size() - 1);
}

TEST_CASE("coverage of a full interval leaves only zero") {
    const auto report = coverage_report(range_set(0, 50), 50);
    CHECK(report.uncovered == std::vector<u64>{0});
    REQUIRE(report.threshold.has_value());
    CHECK(*report.threshold == 1);
    CHECK(report.uncovered_positive() == 0);
}

TEST_CASE("threshold exceeds every uncovered value") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto w = random_set(rng, 300, 40);
        const auto rep = coverage_report(w, 300);
        CHECK(std::is_sorted(rep.uncovered.begin(), rep.uncovered.end()));
        if (rep.threshold)
            for (u64 u : rep.uncovered)
                CHECK(u < *rep.threshold);
    }
}

TEST_CASE("greedy complement of 10^4 covers [1, N] by an independent scan") {
    const auto w = greedy_complement(10'000);
    const auto scan = oracle::uncovered_by_scan(w, 10'000);
    CHECK(scan == std::vector<u64>{0});
    const auto report = coverage_report(w, 10'000);
    CHECK(report.uncovered == scan);
    CHECK(report.threshold == u64{1});
}

TEST_CASE("uncovered set and covered profile entries partition [0, N]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const u64 limit = 50 + rng() % 2000;
        const auto w = random_set(rng, limit, 1 + rng() % 80);
        const auto report = coverage_report(w, limit);
        const auto profile = representation_profile(w, limit);
        std::vector<u64> zero;
        for (u64 n = 0; n <= limit; ++n)
            if (profile.counts[n] == 0)
                zero.push_back(n);
        CHECK(zero == report.uncovered);
        CHECK(oracle::uncovered_by_scan(w, limit) == report.uncovered);
        const auto mask = coverage_mask(w, limit);
        for (u64 n = 0; n <= limit; ++n)
            CHECK((mask[n] != 0) == (profile.counts[n] != 0));
    }
}

TEST_CASE("adding an element never grows the uncovered set") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const u64 limit = 500;
        const auto w = random_set(rng, limit, 20);
        auto extended = std::vector<u64>(w.elements().begin(), w.elements().end());
        extended.push_back(rng() % (limit + 1));
        const auto w2 = ComplementCandidate::from_unsorted(std::move(extended));
        const auto before = coverage_report(w, limit).uncovered;
        const auto after = coverage_report(w2, limit).uncovered;
        CHECK(after.size() <= before.size());
        CHECK(std::includes(before.begin(), before.end(), after.begin(), after.end()));
    }
}

TEST_CASE("coverage report output formats") {
    const auto report = coverage_report(ComplementCandidate({0}), 5);
    CHECK(to_csv(report) == "uncovered\n0\n2\n3\n5\n");
    const auto text = to_text(report);
    CHECK(text.find("threshold: none") != std::string::npos);
}

TEST_CASE("sequence files round trip with a label") {
    const ComplementCandidate w({0, 1, 2, 3, 4}, "greedy 10");
    std::ostringstream out;
    write_sequence(out, w);
    CHECK(out.str() == "# greedy 10\n0\n1\n2\n3\n4\n");
    std::istringstream in(out.str());
    const auto back = read_sequence(in);
    CHECK(back == w);
    CHECK(back.label() == "greedy 10");
}

TEST_CASE("sequence files skip blank lines") {
    std::istringstream in("\n1\n\n4\n9\n");
    CHECK(read_sequence(in) == ComplementCandidate({1, 4, 9}));
}

TEST_CASE("malformed sequence files report the offending line") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_sequence(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("# x\n1\n2\nabc\n") == 4);
    CHECK(line_of("1\n-3\n") == 2);
    CHECK(line_of("1\n5\n5\n") == 3);
    CHECK(line_of("1\n5\n4\n") == 3);
    CHECK(line_of("99999999999999999999999\n") == 1);
    CHECK(line_of("1\n2 3\n") == 2);
    CHECK(line_of("1\n2\n") == 0);
}
