#include "doctest.h"

#include <cmath>
#include <random>

#include "sqcomp/constructors.hpp"
#include "sqcomp/counting.hpp"
#include "sqcomp/int_math.hpp"
#include "sqcomp/verify/oracles.hpp"

using namespace sqcomp;

namespace {

ComplementCandidate random_set(std::mt19937_64& rng, u64 max_value, std::size_t count) {
    std::uniform_int_distribution<u64> dist(0, max_value);
    std::vector<u64> v(count);
    for (auto& x : v)
        x = dist(rng);
    return ComplementCandidate::from_unsorted(std::move(v));
}

}  // namespace

TEST_CASE("profile of the squares alone") {
    const auto p = representation_profile(ComplementCandidate({0}), 10);
    for (u64 n = 0; n <= 10; ++n)
        CHECK(p.counts[n] == ((n == 1 || n == 4 || n == 9) ? 1u : 0u));
    CHECK(p.total == 3);
    CHECK(p.excess == -7);
    CHECK(p.covered() == 3);
}

TEST_CASE("profile with two elements") {
    const auto p = representation_profile(ComplementCandidate({0, 3}), 10);
    const std::vector<std::uint32_t> expected{0, 1, 0, 0, 2, 0, 0, 1, 0, 1, 0};
    CHECK(p.counts == expected);
    CHECK(p.total == 5);
    CHECK(p.excess == -5);
}

TEST_CASE("profile of a short interval") {
    const auto p = representation_profile(ComplementCandidate({0, 1, 2, 3, 4}), 10);
    CHECK(p.total == 12);
    CHECK(p.excess == 2);
    CHECK(excess(ComplementCandidate({0, 1, 2, 3, 4}), 10) == 2);
}

TEST_CASE("sieve matches both brute-force oracles on random inputs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const u64 limit = 1 + rng() % 5000;
        const auto w = random_set(rng, 5000, rng() % 300);
        const auto p = representation_profile(w, limit);
        CHECK(p.counts == oracle::profile_by_target(w, limit));
        CHECK(p.counts == oracle::profile_by_pairs(w, limit));
        u64 sum = 0;
        for (u64 n = 0; n <= limit; ++n) {
            sum += p.counts[n];
            CHECK(p.counts[n] <= isqrt(n));
        }
        CHECK(sum == p.total);
        CHECK(p.excess == static_cast<i64>(p.total) - static_cast<i64>(limit));
    }
}

TEST_CASE("sum identity examples") {
    const auto id = sum_identity(ComplementCandidate({0, 3}), 10);
    CHECK(id.profile_total == 5);
    CHECK(id.by_squares == 5);
    CHECK(id.by_elements == 5);
    CHECK(id.holds());
    for (u64 limit : {1, 2, 10, 1000})
        CHECK(sum_identity_check(ComplementCandidate(), limit));
    CHECK(sum_identity_check(greedy_complement(100'000), 100'000));
}

TEST_CASE("sum identity holds on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const u64 limit = 1 + rng() % 20'000;
        const auto w = random_set(rng, 25'000, rng() % 500);
        CHECK(sum_identity_check(w, limit));
    }
}

TEST_CASE("inserting one element adds floor(sqrt(N - w0)) to the total") {
    std::mt19937_64 rng(29);
    const u64 limit = 3000;
    for (int trial = 0; trial < 100; ++trial) {
        const auto w = random_set(rng, limit, 50);
        u64 w0 = rng() % limit;
        while (w.contains(w0))
            w0 = rng() % limit;
        std::vector<u64> v(w.elements().begin(), w.elements().end());
        v.push_back(w0);
        const auto before = representation_profile(w, limit).total;
        const auto after = representation_profile(ComplementCandidate::from_unsorted(std::move(v)), limit).total;
        CHECK(after - before == isqrt(limit - w0));
    }
}

TEST_CASE("parallel and streamed profiles equal the serial profile") {
    const auto w = greedy_complement(200'000);
    const auto serial = representation_profile(w, 200'000, 1);
    for (unsigned threads : {2u, 3u, 4u, 7u}) {
        const auto par = representation_profile(w, 200'000, threads);
        CHECK(par.counts == serial.counts);
        CHECK(par.total == serial.total);
    }
    std::vector<std::uint32_t> streamed;
    u64 expected_start = 0;
    const auto summary = stream_profile(w, 200'000, 4096, [&](u64 start, std::span<const std::uint32_t> block) {
        CHECK(start == expected_start);
        expected_start += block.size();
        streamed.insert(streamed.end(), block.begin(), block.end());
    });
    CHECK(streamed == serial.counts);
    CHECK(summary.total == serial.total);
    CHECK(summary.excess == serial.excess);
    CHECK(summary.covered == serial.covered());
}

TEST_CASE("excess margin") {
    CHECK(excess_margin(ComplementCandidate({0, 1, 2, 3, 4}), 10) ==
          doctest::Approx(2.0 - 0.193 * std::sqrt(10.0)).epsilon(1e-15));
    CHECK(excess_margin(ComplementCandidate({0, 1, 2, 3, 4}), 10) == doctest::Approx(1.38968041159).epsilon(1e-11));
    CHECK(excess_margin(ComplementCandidate(), 100) == doctest::Approx(-101.93).epsilon(1e-14));
    CHECK(excess_margin(i64{5}, 100, 0.5) == doctest::Approx(0.0));
}

TEST_CASE("Chen-Fang comparison value") {
    CHECK(chen_fang_value(0) == 0.0);
    CHECK(chen_fang_value(1) == 0.0);
    CHECK(chen_fang_value(4) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(chen_fang_value(16) == doctest::Approx(16.0).epsilon(1e-15));
    // m = W(floor(2 sqrt N)) = W(20) = 21 for N = 100.
    std::vector<u64> dense;
    for (u64 x = 0; x <= 100; ++x)
        dense.push_back(x);
    CHECK(chen_fang_bound(ComplementCandidate(dense), 100) == doctest::Approx(chen_fang_value(21)));
}

TEST_CASE("density ratio") {
    std::vector<u64> squares;
    for (u64 k = 1; k <= 40; ++k)
        squares.push_back(k * k);
    CHECK(cilleruelo_ratio(ComplementCandidate(squares), 1600) == doctest::Approx(1.0).epsilon(1e-15));
    std::vector<u64> dense;
    for (u64 x = 0; x <= 100; ++x)
        dense.push_back(x);
    CHECK(cilleruelo_ratio(ComplementCandidate(dense), 100) == doctest::Approx(10.1).epsilon(1e-15));
}

TEST_CASE("greedy complement of 10^6: margin, Chen-Fang and density") {
    const auto w = greedy_complement(1'000'000);
    const auto s = summarize(w, 1'000'000, 2);
    CHECK(s.margin > 0.0);
    CHECK(s.chen_fang < static_cast<double>(s.excess));
    CHECK(s.chen_fang < static_cast<double>(s.excess) - kExcessConstant * 1000.0);
    MESSAGE("excess=" << s.excess << " margin=" << s.margin << " chen_fang=" << s.chen_fang
                      << " ratio=" << s.cilleruelo_ratio << " (4/pi=" << kDensityConstant << ")");
    CHECK(s.cilleruelo_ratio > 0.0);
}

TEST_CASE("counting output formats") {
    const auto p = representation_profile(ComplementCandidate({0, 3}), 4);
    CHECK(counts_csv(p) == "n,count\n0,0\n1,1\n2,0\n3,0\n4,2\n");
    const auto s = summarize(ComplementCandidate({0, 1, 2, 3, 4}), 10);
    const std::vector<CountingSummary> rows{s};
    const auto csv = summary_csv(rows);
    CHECK(csv.rfind("N,total,excess,margin,chen_fang,cilleruelo_ratio\n10,12,2,1.38968041159,", 0) == 0);
}
