#pragma once

// Numerical checks for the circle-sum machinery:
//
//   sum_{1<=m<=sqrt N} sqrt(N - m^2)
//       = (pi/4) N - sqrt(N)/2 - sum_{k=0}^{sqrt N - 1} I_k        (N a square)
//   I_k = int_k^{k+1} t ({t} - 1/2) / sqrt(N - t^2) dt >= 0
//
// plus the gap functional g_n = (pi^2/16 n^2 - w_n) / n and the finite-range
// form of the counting bound it implies.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqcomp/sequences.hpp"

namespace sqcomp {

// 113-bit significand; used for circle sums and the margins built on them.
using wide_real = __float128;

wide_real circle_sum_wide(u64 limit);
double circle_sum(u64 limit);

// (pi/4) N - sqrt(N)/2 - circle_sum(N). Throws DomainError unless N is a square >= 1.
double em_bound_margin(u64 limit);
// Same expression for any N >= 1. Experimental: only square N is covered by the bound.
double em_bound_margin_relaxed(u64 limit);

// Adaptive Simpson on [a, b] with Richardson correction; tolerance is absolute.
double integrate_adaptive_simpson(const std::function<long double(long double)>& f, long double a, long double b,
                                  long double tolerance);

// I_k for square N and 0 <= k <= sqrt(N) - 1. The last interval uses t = sqrt(N) sin(theta).
double fractional_integral(u64 k, u64 limit);

// |circle_sum(N) - ((pi/4) N - sqrt(N)/2 - sum_k I_k)| for square N.
double em_identity_residual(u64 limit);

struct EmRow {
    u64 limit = 0;
    double circle_sum = 0.0;
    double margin = 0.0;
    std::optional<double> residual;          // only for N <= residual limit
    std::optional<double> min_integral;      // smallest I_k, same range
};

// One row per square N <= max_limit. Residuals and integrals are computed
// for N <= residual_limit. Rows are computed in parallel but stored in order.
std::vector<EmRow> em_sweep(u64 max_limit, u64 residual_limit, unsigned threads = 1);
std::string em_csv(std::span<const EmRow> rows);

struct GapStatistics {
    u64 n_max = 0;
    std::vector<double> values;       // values[n-1] = g_n
    std::vector<double> running_max;  // prefix maxima of values
    double reference_low = 0.0;       // pi/4
    double reference_high = 0.0;      // pi/4 + 0.193 pi^2/8
};

// Throws PreconditionError if W has fewer than n_max elements.
GapStatistics gap_statistics(const ComplementCandidate& w, u64 n_max);
std::string gap_csv(const GapStatistics& stats);
// series,n,value rows for plotting: g_n, running_max and both reference lines.
std::string gap_long_csv(const GapStatistics& stats);

struct CountBoundReport {
    bool hypothesis_holds_up_to_x = false;  // w_n >= (pi^2/16)(n - a)^2 whenever w_n <= x
    bool bound_holds = false;               // W(x) <= (4/pi) sqrt(x) + a
    u64 count = 0;                          // W(x)
    double bound = 0.0;
    double shift = 0.0;                     // a = 8 gamma/pi^2 - 4 sigma/pi^2

    bool implication_holds() const noexcept { return !hypothesis_holds_up_to_x || bound_holds; }
};

// Requires gamma > sigma > 0 and x >= 1.
CountBoundReport conditional_count_bound_check(const ComplementCandidate& w, double gamma, double sigma, u64 x);

}  // namespace sqcomp
