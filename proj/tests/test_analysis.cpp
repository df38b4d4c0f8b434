#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "sqcomp/analysis.hpp"
#include "sqcomp/constructors.hpp"
#include "sqcomp/errors.hpp"
#include "sqcomp/int_math.hpp"
#include "sqcomp/verify/oracles.hpp"

using namespace sqcomp;

// Reference values below come from a 40-digit evaluation.

TEST_CASE("circle sums") {
    CHECK(circle_sum(1) == 0.0);
    CHECK(circle_sum(4) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(circle_sum(16) == doctest::Approx(9.982836272409762).epsilon(1e-15));
    CHECK(circle_sum(2) == doctest::Approx(1.0).epsilon(1e-15));
    // Wide accumulation agrees with a plain long double sum at moderate N.
    long double plain = 0.0L;
    for (u64 m = 1; m * m <= 1'000'000; ++m)
        plain += std::sqrt(1'000'000.0L - static_cast<long double>(m * m));
    CHECK(circle_sum(1'000'000) == doctest::Approx(static_cast<double>(plain)).epsilon(1e-15));
}

TEST_CASE("circle-sum bound margins") {
    CHECK(em_bound_margin(1) == doctest::Approx(0.28539816339744831).epsilon(1e-14));
    CHECK(em_bound_margin(4) == doctest::Approx(0.40954184602091594).epsilon(1e-14));
    CHECK(em_bound_margin(16) == doctest::Approx(0.58353434194941089).epsilon(1e-14));
    CHECK_THROWS_AS(em_bound_margin(5), DomainError);
    CHECK_THROWS_AS(em_bound_margin(0), DomainError);
    CHECK(em_bound_margin_relaxed(16) == em_bound_margin(16));
    CHECK(std::isfinite(em_bound_margin_relaxed(5)));
}

TEST_CASE("fractional integrals") {
    CHECK(fractional_integral(0, 4) == doctest::Approx(0.047197551196597746).epsilon(1e-11));
    CHECK(fractional_integral(0, 4) == doctest::Approx(std::numbers::pi / 3 - 1).epsilon(1e-11));
    CHECK(fractional_integral(1, 4) == doctest::Approx(0.36234429482431820).epsilon(1e-11));
    CHECK(fractional_integral(0, 4) + fractional_integral(1, 4) ==
          doctest::Approx(std::numbers::pi - 1 - std::sqrt(3.0)).epsilon(1e-11));
    CHECK_THROWS_AS(fractional_integral(2, 4), DomainError);
    CHECK_THROWS_AS(fractional_integral(0, 5), DomainError);
}

TEST_CASE("quadrature matches the closed-form antiderivative") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const u64 root = 1 + rng() % 1000;
        const u64 k = rng() % root;
        const u64 n = root * root;
        const double q = fractional_integral(k, n);
        const auto exact = static_cast<double>(oracle::fractional_integral_closed_form(k, n));
        CHECK(std::fabs(q - exact) <= 1e-10);
        CHECK(q >= -1e-12);
    }
    for (u64 root : {1u, 2u, 3u, 10u, 100u, 1000u}) {
        const u64 n = root * root;
        const double q = fractional_integral(root - 1, n);
        CHECK(std::fabs(q - static_cast<double>(oracle::fractional_integral_closed_form(root - 1, n))) <= 1e-10);
    }
}

TEST_CASE("adaptive Simpson on smooth integrands") {
    const auto f = [](long double t) { return std::sin(t); };
    CHECK(integrate_adaptive_simpson(f, 0.0L, std::numbers::pi_v<long double>, 1e-13L) ==
          doctest::Approx(2.0).epsilon(1e-12));
    const auto g = [](long double t) { return t * t * t; };
    CHECK(integrate_adaptive_simpson(g, 0.0L, 2.0L, 1e-13L) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("identity residuals") {
    CHECK(em_identity_residual(1) <= 1e-9);
    CHECK(em_identity_residual(4) <= 1e-9);
    CHECK(em_identity_residual(16) <= 1e-9);
    CHECK(em_identity_residual(10'000) <= 1e-7);
    CHECK_THROWS_AS(em_identity_residual(10), DomainError);
}

TEST_CASE("sweep over square N") {
    const auto rows = em_sweep(40'000, 2'500, 3);
    REQUIRE(rows.size() == 200);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const u64 root = i + 1;
        CHECK(rows[i].limit == root * root);
        CHECK(rows[i].margin >= 0.0);
        CHECK(rows[i].margin == em_bound_margin(rows[i].limit));
        CHECK(rows[i].residual.has_value() == (rows[i].limit <= 2'500));
        if (rows[i].residual) {
            CHECK(*rows[i].residual <= 1e-7);
            CHECK(*rows[i].min_integral >= -1e-12);
        }
    }
    const auto serial = em_sweep(40'000, 2'500, 1);
    CHECK(em_csv(serial) == em_csv(rows));
    CHECK(em_csv(serial).rfind("N,circle_sum,margin,residual\n1,0,0.285398163397,", 0) == 0);
}

TEST_CASE("gap functional on the quadratic model") {
    const u64 n_max = 3000;
    const auto stats = gap_statistics(quadratic_model(n_max), n_max);
    REQUIRE(stats.values.size() == n_max);
    for (u64 n = 1; n <= n_max; ++n) {
        const double g = stats.values[n - 1];
        CHECK(g <= 1e-12);
        CHECK(g > -1.0 / static_cast<double>(n) - 1e-12);
    }
    CHECK(stats.running_max.back() <= 0.0 + 1e-12);
    CHECK(stats.reference_low == doctest::Approx(0.78539816339744831).epsilon(1e-15));
    CHECK(stats.reference_high == doctest::Approx(1.0235023695737291).epsilon(1e-14));
}

TEST_CASE("gap functional on the squares decreases linearly") {
    std::vector<u64> squares;
    for (u64 n = 1; n <= 500; ++n)
        squares.push_back(n * n);
    const auto stats = gap_statistics(ComplementCandidate(squares), 500);
    const double slope = std::numbers::pi * std::numbers::pi / 16 - 1;
    for (u64 n = 1; n <= 500; ++n) {
        CHECK(stats.values[n - 1] == doctest::Approx(slope * static_cast<double>(n)).epsilon(1e-12));
        if (n > 1)
            CHECK(stats.values[n - 1] < stats.values[n - 2]);
        CHECK(stats.running_max[n - 1] == stats.values[0]);
    }
}

TEST_CASE("running maximum is an exact prefix maximum") {
    const auto w = greedy_complement(1'000'000);
    const auto stats = gap_statistics(w, 1000);
    double m = -INFINITY;
    for (std::size_t i = 0; i < stats.values.size(); ++i) {
        m = std::max(m, stats.values[i]);
        CHECK(stats.running_max[i] == m);
    }
    MESSAGE("greedy complement: running max at n=1000 is " << stats.running_max.back() << ", exceeds "
                                                           << stats.reference_high << ": "
                                                           << (stats.running_max.back() > stats.reference_high));
    CHECK_THROWS_AS(gap_statistics(ComplementCandidate({1, 2}), 3), PreconditionError);
}

TEST_CASE("gap output formats") {
    const auto stats = gap_statistics(ComplementCandidate({1, 4}), 2);
    CHECK(gap_csv(stats).rfind("n,g_n,running_max\n1,", 0) == 0);
    const auto lg = gap_long_csv(stats);
    CHECK(lg.rfind("series,n,value\n", 0) == 0);
    CHECK(lg.find("running_max,2,") != std::string::npos);
}

TEST_CASE("conditional counting bound") {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const auto model = quadratic_model(5000, pi2 / 16 + 0.01L);
    const auto r = conditional_count_bound_check(model, 1.0, 0.5, 1'000'000);
    CHECK(r.shift == doctest::Approx(6.0 / pi2).epsilon(1e-14));
    CHECK(r.hypothesis_holds_up_to_x);
    CHECK(r.bound_holds);
    CHECK(r.implication_holds());

    std::vector<u64> dense;
    for (u64 x = 0; x <= 1000; ++x)
        dense.push_back(x);
    const auto d = conditional_count_bound_check(ComplementCandidate(dense), 1.0, 0.5, 1000);
    CHECK_FALSE(d.hypothesis_holds_up_to_x);
    CHECK_FALSE(d.bound_holds);
    CHECK(d.implication_holds());
    CHECK(d.count == 1001);

    CHECK_THROWS_AS(conditional_count_bound_check(model, 0.5, 1.0, 100), PreconditionError);
    CHECK_THROWS_AS(conditional_count_bound_check(model, 1.0, 0.0, 100), PreconditionError);
    CHECK_THROWS_AS(conditional_count_bound_check(model, 1.0, 0.5, 0), PreconditionError);
}

TEST_CASE("conditional counting bound is never violated on random inputs") {
    std::mt19937_64 rng(1009);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int hypothesis_true = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double sigma = 0.01 + 5.0 * u(rng);
        const double gamma = sigma + 0.01 + 5.0 * u(rng);
        const u64 x = 1 + rng() % 200'000;
        ComplementCandidate w;
        if (trial % 2 == 0) {
            const long double c = 0.5L + static_cast<long double>(u(rng));
            w = quadratic_model(1 + rng() % 1000, c, static_cast<Rounding>(rng() % 3));
        } else {
            std::vector<u64> v(1 + rng() % 400);
            for (auto& e : v)
                e = rng() % 250'000;
            w = ComplementCandidate::from_unsorted(std::move(v));
        }
        const auto r = conditional_count_bound_check(w, gamma, sigma, x);
        CHECK(r.implication_holds());
        hypothesis_true += r.hypothesis_holds_up_to_x ? 1 : 0;
    }
    CHECK(hypothesis_true > 100);
}
