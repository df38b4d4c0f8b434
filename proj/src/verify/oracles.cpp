#include "sqcomp/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sqcomp::oracle {

std::vector<std::uint32_t> profile_by_target(const ComplementCandidate& w, u64 limit) {
    std::vector<unsigned char> member(limit + 1, 0);
    for (u64 v : w.elements())
        if (v <= limit)
            member[v] = 1;
    std::vector<std::uint32_t> counts(limit + 1, 0);
    for (u64 n = 0; n <= limit; ++n)
        for (u64 k = 1; k * k <= n; ++k)
            counts[n] += member[n - k * k];
    return counts;
}

std::vector<std::uint32_t> profile_by_pairs(const ComplementCandidate& w, u64 limit) {
    std::vector<std::uint32_t> counts(limit + 1, 0);
    u64 kmax = 0;
    while ((kmax + 1) * (kmax + 1) <= limit)
        ++kmax;
    for (u64 k = 1; k <= kmax; ++k)
        for (u64 v : w.elements())
            if (v <= limit && k * k <= limit - v)
                ++counts[k * k + v];
    return counts;
}

std::vector<u64> uncovered_by_scan(const ComplementCandidate& w, u64 limit) {
    std::vector<u64> out;
    for (u64 n = 0; n <= limit; ++n) {
        bool covered = false;
        for (u64 v : w.elements()) {
            if (v >= n)
                break;
            const auto r = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(n - v))));
            if (r >= 1 && r * r == n - v) {
                covered = true;
                break;
            }
        }
        if (!covered)
            out.push_back(n);
    }
    return out;
}

i64 surplus_by_sorting(const ComplementCandidate& d, u64 limit) {
    std::vector<u64> sums;
    for (u64 v : d.elements())
        for (u64 k = 1; v <= limit && k * k <= limit - v; ++k)
            sums.push_back(v + k * k);
    const auto pairs = static_cast<i64>(sums.size());
    std::sort(sums.begin(), sums.end());
    const auto distinct = static_cast<i64>(std::unique(sums.begin(), sums.end()) - sums.begin());
    return pairs - distinct;
}

long double fractional_integral_closed_form(u64 k, u64 limit) {
    const long double n = static_cast<long double>(limit);
    const long double r = std::sqrt(n);
    const long double shift = static_cast<long double>(k) + 0.5L;
    auto antiderivative = [&](long double theta) {
        return n * (theta / 2 - std::sin(2 * theta) / 4) + shift * r * std::cos(theta);
    };
    const long double lo = std::asin(static_cast<long double>(k) / r);
    const long double hi = std::asin(std::min(1.0L, static_cast<long double>(k + 1) / r));
    return antiderivative(hi) - antiderivative(lo);
}

double boundary_delta(double delta0) {
    return delta0 / (4.0 * std::sqrt(1.0 - delta0));
}

double boundary_value(double delta0) {
    return 4.0 / std::numbers::pi * std::sqrt(delta0) - 2.0 * delta0 / std::sqrt(1.0 - delta0);
}

BoundaryOptimum boundary_scan(double lo, double hi, int steps) {
    BoundaryOptimum best{lo, boundary_delta(lo), boundary_value(lo)};
    for (int i = 1; i <= steps; ++i) {
        const double x = lo + (hi - lo) * i / steps;
        const double v = boundary_value(x);
        if (v > best.value)
            best = {x, boundary_delta(x), v};
    }
    return best;
}

}  // namespace sqcomp::oracle
