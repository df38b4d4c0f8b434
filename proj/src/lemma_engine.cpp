#include "sqcomp/lemma_engine.hpp"

#include <cmath>
#include <numbers>

#include "sqcomp/counting.hpp"
#include "sqcomp/parallel.hpp"
#include "sqcomp/report.hpp"

namespace sqcomp {

ConstraintValues constraint_values(double delta, double delta0) {
    if (!(delta > 0.0) || !(delta0 > 0.0))
        throw DomainError("constraints need delta > 0 and delta0 > 0");
    return {delta * delta + delta0, delta0 * delta0 / (16.0 * delta * delta) + delta0};
}

bool check_constraints(double delta, double delta0) {
    const auto c = constraint_values(delta, delta0);
    return c.first <= 1.0 && c.second <= 1.0 - kStrictSlack;
}

u64 lemma_k(double delta, u64 limit) {
    const double k = std::floor(delta * std::sqrt(static_cast<double>(limit)));
    return k < 1.0 ? 0 : static_cast<u64>(k);
}

LemmaParameters LemmaParameters::make(double delta, double delta0, u64 limit) {
    LemmaParameters p;
    p.feasible_ = check_constraints(delta, delta0);
    p.delta_ = delta;
    p.delta0_ = delta0;
    p.limit_ = limit;
    p.k_ = lemma_k(delta, limit);
    if (p.k_ < 1)
        throw PreconditionError("K = floor(delta sqrt N) is 0 for delta=" + format_real(delta) +
                                ", N=" + std::to_string(limit));
    p.cutoff_ = static_cast<u64>(std::floor(delta0 * static_cast<double>(limit)));
    p.floored_feasible_ = check_constraints(static_cast<double>(p.k_) / std::sqrt(static_cast<double>(limit)), delta0);
    return p;
}

std::vector<ComplementCandidate> residue_partition(const ComplementCandidate& w, u64 modulus) {
    if (modulus < 1)
        throw PreconditionError("residue modulus must be >= 1");
    std::vector<std::vector<u64>> buckets(modulus);
    for (u64 v : w.elements()) {
        const u64 r = v % modulus;
        buckets[(r == 0 ? modulus : r) - 1].push_back(v);
    }
    std::vector<ComplementCandidate> classes;
    classes.reserve(modulus);
    for (u64 j = 0; j < modulus; ++j)
        classes.emplace_back(std::move(buckets[j]), "class " + std::to_string(j + 1) + " mod " + std::to_string(modulus));
    return classes;
}

u64 LemmaSolution::value() const {
    return checked_add(checked_mul(x, x), d1);
}

LemmaSolution lemma_solution(u64 d1, u64 ds, u64 K) {
    if (K < 1)
        throw PreconditionError("lemma_solution needs K >= 1");
    if (ds <= d1)
        throw PreconditionError("lemma_solution needs ds > d1 (got d1=" + std::to_string(d1) +
                                ", ds=" + std::to_string(ds) + ")");
    const u64 modulus = checked_mul(4, K);
    const u64 diff = ds - d1;
    if (diff % modulus != 0)
        throw DivisibilityError(std::to_string(modulus) + " does not divide " + std::to_string(ds) + " - " +
                                std::to_string(d1));
    LemmaSolution s;
    s.d1 = d1;
    s.ds = ds;
    s.n_s = diff / modulus;
    s.x = checked_add(K, s.n_s);
    s.y = K > s.n_s ? K - s.n_s : s.n_s - K;
    s.degenerate = (s.n_s == K);
    return s;
}

LemmaReport verify_lemma(const ComplementCandidate& d, const LemmaParameters& params) {
    if (!params.feasible())
        throw PreconditionError("verify_lemma: (delta, delta0) = (" + format_real(params.delta()) + ", " +
                                format_real(params.delta0()) + ") is infeasible");
    const u64 modulus = params.modulus();
    const auto el = d.elements();
    for (std::size_t i = 1; i < el.size(); ++i) {
        if ((el[i] - el[0]) % modulus != 0)
            throw PreconditionError("verify_lemma: " + std::to_string(modulus) + " does not divide " +
                                    std::to_string(el[i]) + " - " + std::to_string(el[0]));
    }

    LemmaReport report;
    const u64 limit = params.limit();
    if (!d.empty() && el.front() < limit) {
        const auto profile = representation_profile(d, limit);
        report.lhs = checked_signed(profile.total) - checked_signed(profile.covered());
    }
    const u64 ell = counting_function(d, params.delta0_cutoff());
    report.rhs = static_cast<i64>(ell) - 2;
    report.holds = report.lhs >= report.rhs;

    for (std::size_t s = 1; s < ell; ++s) {
        const auto sol = lemma_solution(el[0], el[s], params.K());
        if (sol.degenerate) {
            ++report.degenerate;
            continue;
        }
        const u64 left = sol.value();
        const u64 right = checked_add(checked_mul(sol.y, sol.y), sol.ds);
        if (left != right || left >= limit)
            report.witnesses_valid = false;
        report.witnesses.push_back(sol);
    }
    return report;
}

std::string to_text(const LemmaReport& report, const LemmaParameters& params) {
    StructuredText text;
    text.add("delta", params.delta());
    text.add("delta0", params.delta0());
    text.add("N", params.limit());
    text.add("K", params.K());
    text.add("floored_feasible", params.floored_feasible());
    text.add("lhs", report.lhs);
    text.add("rhs", report.rhs);
    text.add("holds", report.holds);
    text.add("degenerate", report.degenerate);
    text.add("witnesses_valid", report.witnesses_valid);
    std::vector<std::string> ws;
    for (const auto& s : report.witnesses)
        ws.push_back("(" + std::to_string(s.x) + " " + std::to_string(s.y) + " " + std::to_string(s.value()) + ")");
    text.add_array("witnesses", ws);
    return text.str();
}

PipelineReport decomposition_pipeline(const ComplementCandidate& w, double delta, double delta0, u64 limit,
                                      unsigned threads) {
    if (!check_constraints(delta, delta0))
        throw PreconditionError("decomposition_pipeline: (delta, delta0) = (" + format_real(delta) + ", " +
                                format_real(delta0) + ") is infeasible");
    const auto params = LemmaParameters::make(delta, delta0, limit);

    PipelineReport report;
    report.delta = delta;
    report.delta0 = delta0;
    report.limit = limit;
    report.K = params.K();

    const auto classes = residue_partition(w, params.modulus());
    report.per_class.resize(classes.size());
    parallel_chunks(classes.size(), threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const auto lemma = verify_lemma(classes[i], params);
            report.per_class[i] = {i + 1, classes[i].size(), lemma.lhs, lemma.rhs, lemma.holds, lemma.witnesses_valid};
        }
    });

    const auto coverage = coverage_report(w, limit);
    if (coverage.threshold) {
        report.coverage_threshold = *coverage.threshold;
    } else {
        report.coverage_threshold = coverage.uncovered.back() + 1;
        report.threshold_measured = false;
    }

    report.count_below_cutoff = counting_function(w, params.delta0_cutoff());
    report.classes_hold = true;
    for (const auto& row : report.per_class) {
        report.class_lhs_sum += row.lhs;
        report.class_rhs_sum += row.rhs;
        report.classes_hold = report.classes_hold && row.holds && row.witnesses_valid;
    }
    const i64 n0 = checked_signed(report.coverage_threshold);
    const i64 k8 = checked_signed(checked_mul(8, report.K));
    report.lower_bound = static_cast<i64>(report.count_below_cutoff) - k8 - n0;
    report.measured_excess = representation_profile(w, limit, threads).excess;
    report.asymptotic_bound = (4.0 / std::numbers::pi * std::sqrt(delta0) - 8.0 * delta) *
                              std::sqrt(static_cast<double>(limit));

    report.excess_dominates_class_sum = report.measured_excess >= report.class_lhs_sum - n0;
    report.rhs_sum_matches = report.class_rhs_sum == static_cast<i64>(report.count_below_cutoff) - k8;
    report.consistent = report.measured_excess >= report.lower_bound;
    return report;
}

std::string per_class_csv(const PipelineReport& report) {
    CsvTable table({"j", "class_size", "lhs", "rhs", "holds"});
    for (const auto& r : report.per_class)
        table.add_row({std::to_string(r.j), std::to_string(r.class_size), std::to_string(r.lhs), std::to_string(r.rhs),
                       r.holds ? "true" : "false"});
    return table.str();
}

std::string to_text(const PipelineReport& r) {
    StructuredText text;
    text.add("delta", r.delta);
    text.add("delta0", r.delta0);
    text.add("N", r.limit);
    text.add("K", r.K);
    text.add("classes", static_cast<u64>(r.per_class.size()));
    text.add("N0", r.coverage_threshold);
    text.add("N0_measured", r.threshold_measured);
    text.add("W_delta0_N", r.count_below_cutoff);
    text.add("class_lhs_sum", r.class_lhs_sum);
    text.add("class_rhs_sum", r.class_rhs_sum);
    text.add("lower_bound", r.lower_bound);
    text.add("measured_excess", r.measured_excess);
    text.add("asymptotic_bound", r.asymptotic_bound);
    text.add("excess_dominates_class_sum", r.excess_dominates_class_sum);
    text.add("classes_hold", r.classes_hold);
    text.add("rhs_sum_matches", r.rhs_sum_matches);
    text.add("consistent", r.consistent);
    return text.str();
}

}  // namespace sqcomp
