#pragma once

#include <numbers>

#include "sqcomp/sequences.hpp"

namespace sqcomp {

// pi^2 / 16: the leading coefficient of the quadratic model w_n ~ c n^2
// whose representation average tends to 1.
inline constexpr long double kQuadraticModelConstant =
    std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 16.0L;

enum class GreedyStrategy { largest_square, unit_square };
enum class Rounding { ceil, floor, nearest };

const char* to_string(GreedyStrategy s) noexcept;
const char* to_string(Rounding r) noexcept;

// Scans n = 1..N and, whenever n is not yet a square plus an element,
// inserts n - s with s the largest square <= n (or s = 1). The result covers [1, N].
ComplementCandidate greedy_complement(u64 limit, GreedyStrategy strategy = GreedyStrategy::largest_square);

// {round(c n^2) : 1 <= n <= n_max}, deduplicated. Throws OverflowError when
// c * n_max^2 leaves the u64 range and PreconditionError for n_max < 1 or c <= 0.
ComplementCandidate quadratic_model(u64 n_max, long double c = kQuadraticModelConstant,
                                    Rounding rounding = Rounding::ceil);

// W plus a largest-square greedy fix for each uncovered n in [1, N], in ascending n.
ComplementCandidate repair_to_complement(const ComplementCandidate& w, u64 limit);

}  // namespace sqcomp
