#pragma once

// Maximizes f(delta, delta0) = (4/pi) sqrt(delta0) - 8 delta over the
// feasible region of the residue-family lemma.

#include <string>

#include "sqcomp/lemma_engine.hpp"

namespace sqcomp {

// A known admissible pair and the lower bound on the objective it certifies.
inline constexpr double kReferenceDelta = 0.022;
inline constexpr double kReferenceDelta0 = 0.084;
inline constexpr double kReferenceObjective = 0.19302;

// A constraint counts as active when within this distance of its bound.
inline constexpr double kActiveTolerance = 1e-6;

double objective(double delta, double delta0);

struct ActiveConstraints {
    bool first = false;
    bool second = false;
};

struct OptimizationResult {
    double delta = 0.0;
    double delta0 = 0.0;
    double objective = 0.0;
    bool feasible = false;
    ConstraintValues constraints;
    ActiveConstraints boundary_active;
};

OptimizationResult evaluate_point(double delta, double delta0);

// Grid over (i/G, j/G), 1 <= i, j < G, keeping the best feasible point with
// ties going to the lexicographically smallest (delta0, delta). Each of the
// `refine_rounds` rounds then samples delta0 in a shrinking window, snapping
// delta onto the second constraint by bisection, and a golden-section pass
// polishes delta0. threads > 1 splits the grid rows; the reduction is order
// independent, so the result does not change.
OptimizationResult optimize_constants(int grid_steps = 2000, int refine_rounds = 3, unsigned threads = 1);

// Smallest feasible delta for a fixed delta0, found by bisection on
// check_constraints between 0 and `feasible_delta` (which must be feasible).
double min_feasible_delta(double delta0, double feasible_delta);

// Best point with delta0 held fixed.
OptimizationResult optimize_at_delta0(double delta0);

// pi/4 + c pi^2/8: the lower bound on limsup (pi^2/16 n^2 - w_n)/n that an
// excess bound of c sqrt(N) yields.
double gap_constant(double c);

std::string result_csv_header();
std::string result_csv_row(const OptimizationResult& r);
std::string to_text(const OptimizationResult& r);

}  // namespace sqcomp
