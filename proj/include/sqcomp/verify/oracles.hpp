#pragma once

// Independent reference computations. Each one takes a different route
// from the library code it checks and is kept deliberately naive.

#include <cstdint>
#include <vector>

#include "sqcomp/sequences.hpp"

namespace sqcomp::oracle {

// R(n) by scanning n = 0..N and testing n - k^2 against a membership table.
std::vector<std::uint32_t> profile_by_target(const ComplementCandidate& w, u64 limit);

// R(n) from every (k, w) pair with 1 <= k <= sqrt(N), no early exit.
std::vector<std::uint32_t> profile_by_pairs(const ComplementCandidate& w, u64 limit);

// Uncovered n in [0, N] by a double loop over n and w.
std::vector<u64> uncovered_by_scan(const ComplementCandidate& w, u64 limit);

// sum_{R(n) >= 1} (R(n) - 1) as #pairs - #distinct sums, via sort and unique.
i64 surplus_by_sorting(const ComplementCandidate& d, u64 limit);

// int_k^{k+1} t({t} - 1/2)/sqrt(N - t^2) dt from the antiderivative in theta = asin(t / sqrt N):
// N (theta/2 - sin(2 theta)/4) + (k + 1/2) sqrt(N) cos(theta).
long double fractional_integral_closed_form(u64 k, u64 limit);

struct BoundaryOptimum {
    double delta0 = 0.0;
    double delta = 0.0;
    double value = 0.0;
};

// Substitutes delta = delta0 / (4 sqrt(1 - delta0)) into the objective and
// scans g(delta0) = (4/pi) sqrt(delta0) - 2 delta0 / sqrt(1 - delta0) on a uniform grid.
BoundaryOptimum boundary_scan(double lo, double hi, int steps);
double boundary_delta(double delta0);
double boundary_value(double delta0);

}  // namespace sqcomp::oracle
