#include "sqcomp/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sqcomp/parallel.hpp"
#include "sqcomp/report.hpp"

namespace sqcomp {

double objective(double delta, double delta0) {
    return 4.0 / std::numbers::pi * std::sqrt(delta0) - 8.0 * delta;
}

OptimizationResult evaluate_point(double delta, double delta0) {
    OptimizationResult r;
    r.delta = delta;
    r.delta0 = delta0;
    r.objective = objective(delta, delta0);
    r.constraints = constraint_values(delta, delta0);
    r.feasible = check_constraints(delta, delta0);
    r.boundary_active.first = 1.0 - r.constraints.first <= kActiveTolerance;
    r.boundary_active.second = (1.0 - kStrictSlack) - r.constraints.second <= kActiveTolerance;
    return r;
}

namespace {

struct Candidate {
    double delta = 0.0;
    double delta0 = 0.0;
    double value = -1.0;
    bool valid = false;
};

// Strict total order on valid candidates: higher objective, then smaller (delta0, delta).
bool better(const Candidate& a, const Candidate& b) {
    if (!a.valid)
        return false;
    if (!b.valid)
        return true;
    if (a.value != b.value)
        return a.value > b.value;
    if (a.delta0 != b.delta0)
        return a.delta0 < b.delta0;
    return a.delta < b.delta;
}

void consider(Candidate& best, double delta, double delta0) {
    if (!(delta > 0.0 && delta < 1.0 && delta0 > 0.0 && delta0 < 1.0))
        return;
    if (!check_constraints(delta, delta0))
        return;
    Candidate c{delta, delta0, objective(delta, delta0), true};
    if (better(c, best))
        best = c;
}

}  // namespace

double min_feasible_delta(double delta0, double feasible_delta) {
    if (!check_constraints(feasible_delta, delta0))
        throw PreconditionError("min_feasible_delta needs a feasible starting delta");
    double lo = 0.0;  // infeasible: the second constraint is unbounded as delta -> 0
    double hi = feasible_delta;
    for (int i = 0; i < 200; ++i) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi)
            break;
        if (check_constraints(mid, delta0))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

OptimizationResult optimize_at_delta0(double delta0) {
    if (!(delta0 > 0.0 && delta0 < 1.0))
        throw DomainError("optimize_at_delta0 needs 0 < delta0 < 1");
    // Feasible deltas form [lower, sqrt(1 - delta0)] since shrinking delta
    // only tightens the second constraint. The loop absorbs sqrt rounding.
    double start = std::sqrt(1.0 - delta0);
    for (int i = 0; i < 8 && !check_constraints(start, delta0); ++i)
        start = std::nextafter(start, 0.0);
    if (!check_constraints(start, delta0))
        throw DomainError("no feasible delta for delta0 = " + format_real(delta0));
    return evaluate_point(min_feasible_delta(delta0, start), delta0);
}

namespace {

// Best delta for this delta0, or an invalid candidate when none is feasible.
Candidate boundary_candidate(double delta0) {
    if (!(delta0 > 0.0 && delta0 < 1.0))
        return {};
    try {
        const auto r = optimize_at_delta0(delta0);
        return {r.delta, r.delta0, r.objective, true};
    } catch (const DomainError&) {
        return {};
    }
}

}  // namespace

OptimizationResult optimize_constants(int grid_steps, int refine_rounds, unsigned threads) {
    if (grid_steps < 100)
        throw PreconditionError("optimize_constants needs grid_steps >= 100");
    if (refine_rounds < 0)
        throw PreconditionError("optimize_constants needs refine_rounds >= 0");
    const auto steps = static_cast<std::size_t>(grid_steps);
    const double g = static_cast<double>(grid_steps);

    std::vector<Candidate> partial(chunk_count(steps - 1, threads));
    parallel_chunks(steps - 1, threads, [&](std::size_t chunk, std::size_t lo, std::size_t hi) {
        Candidate best;
        for (std::size_t j = lo + 1; j <= hi; ++j) {
            const double delta0 = static_cast<double>(j) / g;
            for (std::size_t i = 1; i < steps; ++i)
                consider(best, static_cast<double>(i) / g, delta0);
        }
        partial[chunk] = best;
    });
    Candidate best;
    for (const auto& c : partial)
        if (better(c, best))
            best = c;
    if (!best.valid)
        throw DomainError("no feasible grid point");

    // Coordinate refinement: delta snaps onto the binding constraint for each
    // sampled delta0. The first window spans 64 cells because the objective
    // is flat along the boundary and the grid optimum can sit far from it.
    double window = 64.0 / g;
    for (int round = 0; round < refine_rounds; ++round) {
        const Candidate centre = best;
        for (int b = -16; b <= 16; ++b)
            if (auto c = boundary_candidate(centre.delta0 + window * b / 16.0); better(c, best))
                best = c;
        window /= 8.0;
    }
    if (refine_rounds > 0) {
        // Golden-section polish; the objective is concave along the boundary.
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double lo = std::max(best.delta0 - 2.0 * window, 0.0);
        double hi = std::min(best.delta0 + 2.0 * window, 1.0);
        for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
            const double m1 = hi - phi * (hi - lo);
            const double m2 = lo + phi * (hi - lo);
            const auto c1 = boundary_candidate(m1);
            const auto c2 = boundary_candidate(m2);
            if (better(c1, best))
                best = c1;
            if (better(c2, best))
                best = c2;
            if (!c2.valid || (c1.valid && c1.value >= c2.value))
                hi = m2;
            else
                lo = m1;
        }
    }
    return evaluate_point(best.delta, best.delta0);
}

double gap_constant(double c) {
    return std::numbers::pi / 4.0 + c * std::numbers::pi * std::numbers::pi / 8.0;
}

std::string result_csv_header() {
    return "delta,delta0,objective,constraint1,constraint2\n";
}

std::string result_csv_row(const OptimizationResult& r) {
    return format_real(r.delta) + ',' + format_real(r.delta0) + ',' + format_real(r.objective) + ',' +
           format_real(r.constraints.first) + ',' + format_real(r.constraints.second) + '\n';
}

std::string to_text(const OptimizationResult& r) {
    StructuredText text;
    text.add("delta", r.delta);
    text.add("delta0", r.delta0);
    text.add("objective", r.objective);
    text.add("feasible", r.feasible);
    text.add("constraint1", r.constraints.first);
    text.add("constraint2", r.constraints.second);
    std::string active = r.boundary_active.first && r.boundary_active.second ? "both"
                         : r.boundary_active.first                          ? "first"
                         : r.boundary_active.second                         ? "second"
                                                                            : "none";
    text.add("boundary_active", active);
    return text.str();
}

}  // namespace sqcomp
