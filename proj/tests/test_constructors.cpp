#include "doctest.h"

#include <cmath>

#include "sqcomp/constructors.hpp"
#include "sqcomp/counting.hpp"
#include "sqcomp/errors.hpp"
#include "sqcomp/sequences.hpp"
#include "sqcomp/verify/oracles.hpp"

using namespace sqcomp;

namespace {

// First uncovered n in [1, limit] by a direct search over squares, or 0.
u64 first_gap(const ComplementCandidate& w, u64 limit) {
    std::vector<bool> member(limit + 1, false);
    for (u64 x : w.elements())
        if (x <= limit)
            member[x] = true;
    for (u64 n = 1; n <= limit; ++n) {
        bool hit = false;
        for (u64 k = 1; k * k <= n && !hit; ++k)
            hit = member[n - k * k];
        if (!hit)
            return n;
    }
    return 0;
}

}  // namespace

TEST_CASE("greedy complement hand trace") {
    CHECK(greedy_complement(10) == ComplementCandidate({0, 1, 2, 3, 4}));
    CHECK(greedy_complement(1) == ComplementCandidate({0}));
    CHECK(greedy_complement(1, GreedyStrategy::unit_square) == ComplementCandidate({0}));
}

TEST_CASE("unit-square greedy subtracts one") {
    // n=1 adds 0, n=2 adds 1, n=3 adds 2, n=7 adds 6, n=8 adds 7.
    CHECK(greedy_complement(10, GreedyStrategy::unit_square) == ComplementCandidate({0, 1, 2, 6, 7}));
    const auto w = greedy_complement(5000, GreedyStrategy::unit_square);
    CHECK(first_gap(w, 5000) == 0);
}

TEST_CASE("greedy complements cover [1, N]") {
    for (u64 limit : {2, 3, 17, 100, 1234, 50'000}) {
        const auto w = greedy_complement(limit);
        CHECK(first_gap(w, limit) == 0);
        CHECK(coverage_report(w, limit).uncovered_positive() == 0);
    }
}

TEST_CASE("greedy complement of 10^6 is a complement up to N") {
    const auto w = greedy_complement(1'000'000);
    CHECK(first_gap(w, 1'000'000) == 0);
    const auto report = coverage_report(w, 1'000'000);
    CHECK(report.uncovered == std::vector<u64>{0});
    CHECK(report.threshold == u64{1});
}

TEST_CASE("quadratic model with the critical constant") {
    CHECK(quadratic_model(4) == ComplementCandidate({1, 3, 6, 10}));
    const auto w = quadratic_model(1000);
    CHECK(w.size() == 1000);
    for (u64 n = 1; n <= 1000; ++n) {
        const long double x = kQuadraticModelConstant * n * n;
        CHECK(static_cast<long double>(w.element(n)) >= x);
        CHECK(static_cast<long double>(w.element(n)) < x + 1.0L);
    }
}

TEST_CASE("quadratic model roundings") {
    const auto squares = quadratic_model(50, 1.0L, Rounding::floor);
    for (u64 n = 1; n <= 50; ++n)
        CHECK(squares.element(n) == n * n);
    CHECK(quadratic_model(4, kQuadraticModelConstant, Rounding::floor) == ComplementCandidate({0, 2, 5, 9}));
    CHECK(quadratic_model(4, kQuadraticModelConstant, Rounding::nearest) == ComplementCandidate({1, 2, 6, 10}));
    // Rounding collisions collapse: 0.1 n^2 rounds to 0 for n = 1, 2.
    CHECK(quadratic_model(3, 0.1L, Rounding::floor) == ComplementCandidate({0}));
}

TEST_CASE("quadratic model counting function tracks sqrt(x / c)") {
    const long double c = kQuadraticModelConstant;
    const u64 n_max = 2000;
    const auto w = quadratic_model(n_max, c);
    const auto top = static_cast<u64>(c * n_max * n_max);
    for (u64 x = 0; x <= top; x += 7) {
        const auto predicted = static_cast<long long>(std::floor(std::sqrt(static_cast<long double>(x) / c)));
        const auto actual = static_cast<long long>(counting_function(w, x));
        CHECK(std::llabs(actual - predicted) <= 1);
    }
}

TEST_CASE("quadratic model preconditions and overflow") {
    CHECK_THROWS_AS(quadratic_model(0), PreconditionError);
    CHECK_THROWS_AS(quadratic_model(10, 0.0L), PreconditionError);
    CHECK_THROWS_AS(quadratic_model(10, -1.0L), PreconditionError);
    CHECK_THROWS_AS(quadratic_model(u64{1} << 33, 1.0L), OverflowError);
    CHECK_THROWS_AS(quadratic_model(u64{1} << 32, 1.0L), OverflowError);
}

TEST_CASE("repair is a fixpoint on complements and idempotent") {
    const auto g = greedy_complement(2000);
    CHECK(repair_to_complement(g, 2000) == g);

    CHECK(repair_to_complement(ComplementCandidate(), 10) == greedy_complement(10));

    const auto once = repair_to_complement(ComplementCandidate({5, 40, 41}), 3000);
    CHECK(first_gap(once, 3000) == 0);
    CHECK(repair_to_complement(once, 3000) == once);
}

TEST_CASE("repairing the quadratic model to 10^5") {
    const auto base = quadratic_model(1000);
    const auto repaired = repair_to_complement(base, 100'000);
    CHECK(first_gap(repaired, 100'000) == 0);
    CHECK(repaired.size() > base.size());
    for (u64 x : base.elements())
        CHECK(repaired.contains(x));
    MESSAGE("repair added " << repaired.size() - base.size() << " elements");
}
