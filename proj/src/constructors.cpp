#include "sqcomp/constructors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sqcomp {

const char* to_string(GreedyStrategy s) noexcept {
    switch (s) {
    case GreedyStrategy::largest_square: return "largest_square";
    case GreedyStrategy::unit_square: return "unit_square";
    }
    return "?";
}

const char* to_string(Rounding r) noexcept {
    switch (r) {
    case Rounding::ceil: return "ceil";
    case Rounding::floor: return "floor";
    case Rounding::nearest: return "nearest";
    }
    return "?";
}

namespace {

u64 square_to_subtract(u64 n, GreedyStrategy strategy) {
    if (strategy == GreedyStrategy::unit_square)
        return 1;
    const u64 r = isqrt(n);
    return r * r;
}

}  // namespace

ComplementCandidate greedy_complement(u64 limit, GreedyStrategy strategy) {
    if (limit < 1)
        throw PreconditionError("greedy_complement needs N >= 1");
    std::vector<unsigned char> covered(checked_add(limit, 1), 0);
    std::vector<u64> elements;
    for (u64 n = 1; n <= limit; ++n) {
        if (covered[n])
            continue;
        const u64 w = n - square_to_subtract(n, strategy);
        elements.push_back(w);
        mark_translates(covered, w, limit);
    }
    return ComplementCandidate::from_unsorted(
        std::move(elements), std::string("greedy ") + to_string(strategy) + " N=" + std::to_string(limit));
}

ComplementCandidate quadratic_model(u64 n_max, long double c, Rounding rounding) {
    if (n_max < 1)
        throw PreconditionError("quadratic_model needs n_max >= 1");
    if (!(c > 0.0L) || !std::isfinite(c))
        throw PreconditionError("quadratic_model needs a finite c > 0");
    const long double top = c * static_cast<long double>(n_max) * static_cast<long double>(n_max);
    // 2^64 is exact in long double; anything at or above it cannot be stored.
    if (!(top < 18446744073709551616.0L))
        throw OverflowError("quadratic_model: c * n_max^2 exceeds the u64 range");

    std::vector<u64> elements;
    elements.reserve(n_max);
    for (u64 n = 1; n <= n_max; ++n) {
        const long double nn = static_cast<long double>(n);
        const long double x = c * nn * nn;
        long double r = 0.0L;
        switch (rounding) {
        case Rounding::ceil: r = std::ceil(x); break;
        case Rounding::floor: r = std::floor(x); break;
        case Rounding::nearest: r = std::floor(x + 0.5L); break;
        }
        if (!(r < 18446744073709551616.0L))
            throw OverflowError("quadratic_model: rounded value exceeds the u64 range");
        elements.push_back(static_cast<u64>(r));
    }
    return ComplementCandidate::from_unsorted(std::move(elements), "quadratic c=" + std::to_string(static_cast<double>(c)) +
                                                                       " n_max=" + std::to_string(n_max) + " " +
                                                                       to_string(rounding));
}

ComplementCandidate repair_to_complement(const ComplementCandidate& w, u64 limit) {
    auto covered = coverage_mask(w, limit);
    std::vector<u64> elements(w.elements().begin(), w.elements().end());
    const std::size_t original = elements.size();
    for (u64 n = 1; n <= limit; ++n) {
        if (covered[n])
            continue;
        const u64 fix = n - square_to_subtract(n, GreedyStrategy::largest_square);
        elements.push_back(fix);
        mark_translates(covered, fix, limit);
    }
    if (elements.size() == original)
        return w;
    std::string label = w.label().empty() ? std::string("repaired") : w.label() + " repaired";
    return ComplementCandidate::from_unsorted(std::move(elements), label + " N=" + std::to_string(limit));
}

}  // namespace sqcomp
