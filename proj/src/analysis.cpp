#include "sqcomp/analysis.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sqcomp/constructors.hpp"
#include "sqcomp/optimizer.hpp"
#include "sqcomp/parallel.hpp"
#include "sqcomp/report.hpp"

namespace sqcomp {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr double kQuadratureTolerance = 1e-13;

u64 require_square(u64 limit) {
    if (limit < 1 || !is_square(limit))
        throw DomainError("N = " + std::to_string(limit) + " is not a perfect square >= 1");
    return isqrt(limit);
}

wide_real margin_wide(u64 limit) {
    const wide_real n = static_cast<wide_real>(limit);
    return M_PIq * n / 4 - sqrtq(n) / 2 - circle_sum_wide(limit);
}

long double simpson_step(const std::function<long double(long double)>& f, long double a, long double b,
                         long double fa, long double fm, long double fb, long double whole, long double tolerance,
                         int depth) {
    const long double m = (a + b) / 2;
    const long double lm = (a + m) / 2;
    const long double rm = (m + b) / 2;
    const long double flm = f(lm);
    const long double frm = f(rm);
    const long double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const long double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const long double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15 * tolerance)
        return left + right + delta / 15;
    return simpson_step(f, a, m, fa, flm, fm, left, tolerance / 2, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tolerance / 2, depth - 1);
}

}  // namespace

wide_real circle_sum_wide(u64 limit) {
    if (limit < 1)
        throw DomainError("circle_sum needs N >= 1");
    const u64 root = isqrt(limit);
    wide_real sum = 0;
    for (u64 m = 1; m <= root; ++m)
        sum += sqrtq(static_cast<wide_real>(limit - m * m));
    return sum;
}

double circle_sum(u64 limit) {
    return static_cast<double>(circle_sum_wide(limit));
}

double em_bound_margin(u64 limit) {
    require_square(limit);
    return static_cast<double>(margin_wide(limit));
}

double em_bound_margin_relaxed(u64 limit) {
    if (limit < 1)
        throw DomainError("em_bound_margin_relaxed needs N >= 1");
    return static_cast<double>(margin_wide(limit));
}

double integrate_adaptive_simpson(const std::function<long double(long double)>& f, long double a, long double b,
                                  long double tolerance) {
    const long double fa = f(a);
    const long double fb = f(b);
    const long double fm = f((a + b) / 2);
    const long double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return static_cast<double>(simpson_step(f, a, b, fa, fm, fb, whole, tolerance, 48));
}

double fractional_integral(u64 k, u64 limit) {
    const u64 root = require_square(limit);
    if (k + 1 > root)
        throw DomainError("fractional_integral: k = " + std::to_string(k) + " outside [0, " +
                          std::to_string(root - 1) + "]");
    const long double n = static_cast<long double>(limit);
    const long double kk = static_cast<long double>(k);
    if (k + 1 < root) {
        // {t} = t - k on [k, k + 1]; writing it this way keeps the right endpoint at 1.
        auto integrand = [n, kk](long double t) { return t * (t - kk - 0.5L) / std::sqrt(n - t * t); };
        return integrate_adaptive_simpson(integrand, kk, kk + 1, kQuadratureTolerance);
    }
    // t = r sin(theta): dt / sqrt(N - t^2) = d(theta), removing the endpoint singularity.
    const long double r = static_cast<long double>(root);
    auto integrand = [r, kk](long double theta) {
        const long double t = r * std::sin(theta);
        return t * (t - kk - 0.5L);
    };
    return integrate_adaptive_simpson(integrand, std::asin(kk / r), kPi / 2, kQuadratureTolerance);
}

double em_identity_residual(u64 limit) {
    const u64 root = require_square(limit);
    long double integrals = 0;
    for (u64 k = 0; k < root; ++k)
        integrals += fractional_integral(k, limit);
    const wide_real n = static_cast<wide_real>(limit);
    const wide_real rhs = M_PIq * n / 4 - static_cast<wide_real>(root) / 2 - static_cast<wide_real>(integrals);
    return static_cast<double>(fabsq(circle_sum_wide(limit) - rhs));
}

std::vector<EmRow> em_sweep(u64 max_limit, u64 residual_limit, unsigned threads) {
    const u64 roots = isqrt(max_limit);
    std::vector<EmRow> rows(roots);
    parallel_chunks(roots, threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const u64 r = i + 1;
            const u64 n = r * r;
            EmRow row;
            row.limit = n;
            row.circle_sum = circle_sum(n);
            row.margin = em_bound_margin(n);
            if (n <= residual_limit) {
                long double integrals = 0;
                double smallest = 0.0;
                for (u64 k = 0; k < r; ++k) {
                    const double v = fractional_integral(k, n);
                    integrals += v;
                    smallest = k == 0 ? v : std::min(smallest, v);
                }
                const wide_real rhs = M_PIq * static_cast<wide_real>(n) / 4 - static_cast<wide_real>(r) / 2 -
                                      static_cast<wide_real>(integrals);
                row.residual = static_cast<double>(fabsq(circle_sum_wide(n) - rhs));
                row.min_integral = smallest;
            }
            rows[i] = row;
        }
    });
    return rows;
}

std::string em_csv(std::span<const EmRow> rows) {
    CsvTable table({"N", "circle_sum", "margin", "residual"});
    for (const auto& r : rows)
        table.add_row({std::to_string(r.limit), format_real(r.circle_sum), format_real(r.margin),
                       r.residual ? format_real(*r.residual) : std::string()});
    return table.str();
}

GapStatistics gap_statistics(const ComplementCandidate& w, u64 n_max) {
    if (w.size() < n_max)
        throw PreconditionError("gap_statistics: W has " + std::to_string(w.size()) + " elements, needs " +
                                std::to_string(n_max));
    GapStatistics stats;
    stats.n_max = n_max;
    stats.values.reserve(n_max);
    stats.running_max.reserve(n_max);
    const auto el = w.elements();
    for (u64 n = 1; n <= n_max; ++n) {
        const long double nn = static_cast<long double>(n);
        // Same evaluation order as quadratic_model, so ceil-rounded models give g_n <= 0 exactly.
        const long double model = kQuadraticModelConstant * nn * nn;
        const double g = static_cast<double>((model - static_cast<long double>(el[n - 1])) / nn);
        stats.values.push_back(g);
        stats.running_max.push_back(n == 1 ? g : std::max(stats.running_max.back(), g));
    }
    stats.reference_low = gap_constant(0.0);
    stats.reference_high = gap_constant(0.193);
    return stats;
}

std::string gap_csv(const GapStatistics& stats) {
    CsvTable table({"n", "g_n", "running_max"});
    for (u64 n = 1; n <= stats.n_max; ++n)
        table.add_row({std::to_string(n), format_real(stats.values[n - 1]), format_real(stats.running_max[n - 1])});
    return table.str();
}

std::string gap_long_csv(const GapStatistics& stats) {
    CsvTable table({"series", "n", "value"});
    for (u64 n = 1; n <= stats.n_max; ++n)
        table.add_row({"g_n", std::to_string(n), format_real(stats.values[n - 1])});
    for (u64 n = 1; n <= stats.n_max; ++n)
        table.add_row({"running_max", std::to_string(n), format_real(stats.running_max[n - 1])});
    for (u64 n = 1; n <= stats.n_max; ++n)
        table.add_row({"reference_low", std::to_string(n), format_real(stats.reference_low)});
    for (u64 n = 1; n <= stats.n_max; ++n)
        table.add_row({"reference_high", std::to_string(n), format_real(stats.reference_high)});
    return table.str();
}

CountBoundReport conditional_count_bound_check(const ComplementCandidate& w, double gamma, double sigma, u64 x) {
    if (!(sigma > 0.0) || !(gamma > sigma))
        throw PreconditionError("conditional_count_bound_check needs gamma > sigma > 0");
    if (x < 1)
        throw PreconditionError("conditional_count_bound_check needs x >= 1");
    const long double pi2 = kPi * kPi;
    const long double shift = 8.0L * gamma / pi2 - 4.0L * sigma / pi2;

    CountBoundReport report;
    report.shift = static_cast<double>(shift);
    report.count = counting_function(w, x);
    report.hypothesis_holds_up_to_x = true;
    const auto el = w.elements();
    for (u64 n = 1; n <= report.count; ++n) {
        const long double d = static_cast<long double>(n) - shift;
        if (static_cast<long double>(el[n - 1]) < pi2 / 16.0L * d * d) {
            report.hypothesis_holds_up_to_x = false;
            break;
        }
    }
    const long double bound = 4.0L / kPi * std::sqrt(static_cast<long double>(x)) + shift;
    report.bound = static_cast<double>(bound);
    // 1e-9 absorbs rounding in the bound when W(x) sits exactly on it.
    report.bound_holds = static_cast<long double>(report.count) <= bound + 1e-9L;
    return report;
}

}  // namespace sqcomp
