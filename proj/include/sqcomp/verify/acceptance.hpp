#pragma once

// Acceptance criteria as runnable checks. Each criterion produces a CSV
// artifact that is independent of timing and thread count; criterion 8
// compares those artifacts across thread counts.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sqcomp::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
    unsigned threads = 1;
    std::uint64_t seed = kDefaultSeed;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0;  // 0 = no limit
    std::string csv;
};

CriterionResult constant_reproduction(const Options& opts);
CriterionResult gap_constant_values(const Options& opts);
CriterionResult oracle_equivalence(const Options& opts);
CriterionResult lemma_verification(const Options& opts);
CriterionResult euler_maclaurin_suite(const Options& opts);
CriterionResult quadratic_model_average(const Options& opts);
CriterionResult complement_margin_scan(const Options& opts);

// Criteria 1-7 at opts.threads.
std::vector<CriterionResult> run_core(const Options& opts);

// Compares the CSV artifacts of `first` with a rerun of 1-7 at `other_threads`.
CriterionResult determinism(const std::vector<CriterionResult>& first, const Options& opts, unsigned other_threads);

// Everything, one line per criterion on `out`. Returns true when all pass.
bool run_all(const Options& opts, std::ostream& out, std::vector<CriterionResult>* results = nullptr);

std::string format_line(const CriterionResult& r);

}  // namespace sqcomp::acceptance
