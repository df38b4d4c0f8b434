#pragma once

// Residue-family lemma and the decomposition of the excess it feeds.
//
// For 0 < delta, delta0 with
//     delta^2 + delta0 <= 1   and   delta0^2 / (16 delta^2) + delta0 < 1,
// K = floor(delta sqrt N) and a set D whose members are pairwise congruent
// mod 4K, the surplus sum_{n <= N, R(n) >= 1} (R(n) - 1) of S + D is at least
// D(delta0 N) - 2. Each d_s > d_1 in D with n_s = (d_s - d_1) / 4K != K gives
// the witness x = K + n_s, y = |K - n_s| with x^2 + d_1 = y^2 + d_s < N.

#include <optional>
#include <string>
#include <vector>

#include "sqcomp/sequences.hpp"

namespace sqcomp {

// Slack on the strict constraint: delta0^2 / (16 delta^2) + delta0 <= 1 - slack.
inline constexpr double kStrictSlack = 1e-9;

struct ConstraintValues {
    double first = 0.0;   // delta^2 + delta0, must be <= 1
    double second = 0.0;  // delta0^2 / (16 delta^2) + delta0, must be < 1
};

// Throws DomainError unless delta > 0 and delta0 > 0.
ConstraintValues constraint_values(double delta, double delta0);
bool check_constraints(double delta, double delta0);

class LemmaParameters {
public:
    // Throws DomainError for non-positive delta/delta0 and PreconditionError when K < 1.
    static LemmaParameters make(double delta, double delta0, u64 limit);

    double delta() const noexcept { return delta_; }
    double delta0() const noexcept { return delta0_; }
    u64 limit() const noexcept { return limit_; }
    u64 K() const noexcept { return k_; }
    u64 modulus() const noexcept { return 4 * k_; }
    bool feasible() const noexcept { return feasible_; }
    // (K / sqrt N, delta0) is feasible. Flooring K can break the second
    // constraint at finite N; only then can a witness reach N or beyond.
    bool floored_feasible() const noexcept { return floored_feasible_; }
    // floor(delta0 N): members up to here are counted by D(delta0 N).
    u64 delta0_cutoff() const noexcept { return cutoff_; }

private:
    LemmaParameters() = default;

    double delta_ = 0.0;
    double delta0_ = 0.0;
    u64 limit_ = 0;
    u64 k_ = 0;
    u64 cutoff_ = 0;
    bool feasible_ = false;
    bool floored_feasible_ = false;
};

// K = floor(delta sqrt N).
u64 lemma_k(double delta, u64 limit);

// Classes W_j = {w : w = j mod modulus} for j = 1..modulus; entry j - 1 holds
// W_j, so the last entry is residue 0.
std::vector<ComplementCandidate> residue_partition(const ComplementCandidate& w, u64 modulus);

struct LemmaSolution {
    u64 d1 = 0;
    u64 ds = 0;
    u64 n_s = 0;
    u64 x = 0;
    u64 y = 0;
    bool degenerate = false;  // n_s == K, so y = 0 and y^2 is not in S

    // The represented integer x^2 + d1 (= y^2 + ds).
    u64 value() const;
};

// Requires ds > d1, K >= 1; throws DivisibilityError when 4K does not divide ds - d1.
LemmaSolution lemma_solution(u64 d1, u64 ds, u64 K);

struct LemmaReport {
    i64 lhs = 0;  // sum over n <= N with R(n) >= 1 of R(n) - 1
    i64 rhs = 0;  // D(delta0 N) - 2
    bool holds = false;
    std::vector<LemmaSolution> witnesses;  // non-degenerate only
    u64 degenerate = 0;
    // Every witness satisfies x^2 + d1 = y^2 + ds < N. Guaranteed when
    // params.floored_feasible(); otherwise a measurement.
    bool witnesses_valid = true;
};

// Preconditions: params.feasible() and every pair of D congruent mod 4K.
// Violations throw PreconditionError naming the offending pair.
LemmaReport verify_lemma(const ComplementCandidate& d, const LemmaParameters& params);

std::string to_text(const LemmaReport& report, const LemmaParameters& params);

struct ClassRow {
    u64 j = 0;
    u64 class_size = 0;
    i64 lhs = 0;
    i64 rhs = 0;
    bool holds = false;
    bool witnesses_valid = true;
};

struct PipelineReport {
    double delta = 0.0;
    double delta0 = 0.0;
    u64 limit = 0;
    u64 K = 0;
    std::vector<ClassRow> per_class;

    u64 coverage_threshold = 0;  // N0 used in the bound
    // False when N itself is uncovered; N0 then falls back to the largest uncovered value + 1.
    bool threshold_measured = true;

    u64 count_below_cutoff = 0;  // W(delta0 N)
    i64 class_lhs_sum = 0;
    i64 class_rhs_sum = 0;
    i64 lower_bound = 0;  // W(delta0 N) - 8K - N0
    i64 measured_excess = 0;
    // ((4/pi) sqrt(delta0) - 8 delta) sqrt(N), the asymptotic form of the bound.
    double asymptotic_bound = 0.0;

    bool excess_dominates_class_sum = false;  // excess >= sum lhs_j - N0
    bool classes_hold = false;                // every lhs_j >= rhs_j
    bool rhs_sum_matches = false;             // sum rhs_j == W(delta0 N) - 8K
    bool consistent = false;                  // measured_excess >= lower_bound

    bool all_checks_pass() const noexcept {
        return excess_dominates_class_sum && classes_hold && rhs_sum_matches && consistent;
    }
};

// Throws PreconditionError for infeasible (delta, delta0) or K < 1.
PipelineReport decomposition_pipeline(const ComplementCandidate& w, double delta, double delta0, u64 limit,
                                      unsigned threads = 1);

std::string per_class_csv(const PipelineReport& report);
std::string to_text(const PipelineReport& report);

}  // namespace sqcomp
