#pragma once

// Complement candidates W and their coverage of [0, N] by S + W, where
// S = {1^2, 2^2, 3^2, ...}. Zero may belong to W but never to S.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqcomp/int_math.hpp"

namespace sqcomp {

// A finite, strictly increasing set of non-negative integers. Storage is
// 0-based storage; element(n) gives w_n for n >= 1, i.e. elements()[n-1].
class ComplementCandidate {
public:
    ComplementCandidate() = default;

    // Throws PreconditionError unless `elements` is strictly increasing.
    explicit ComplementCandidate(std::vector<u64> elements, std::string label = {});

    // Sorts and deduplicates.
    static ComplementCandidate from_unsorted(std::vector<u64> elements, std::string label = {});

    std::span<const u64> elements() const noexcept { return elements_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    // 1-based: element(1) is the smallest member.
    u64 element(std::size_t n) const;

    bool contains(u64 value) const noexcept;

    // Largest element, or nothing for the empty set.
    std::optional<u64> max() const noexcept;

    ComplementCandidate with_label(std::string label) const;

    friend bool operator==(const ComplementCandidate& a, const ComplementCandidate& b) {
        return a.elements_ == b.elements_;
    }

private:
    std::vector<u64> elements_;
    std::string label_;
};

// #{w in W : w <= x}.
std::size_t counting_function(const ComplementCandidate& w, u64 x) noexcept;

struct CoverageReport {
    u64 limit = 0;
    // Every n in [0, limit] with no representation n = k^2 + w, k >= 1.
    std::vector<u64> uncovered;
    // Smallest M with [M, limit] fully covered; empty when limit itself is uncovered.
    std::optional<u64> threshold;

    // Uncovered values inside [1, limit].
    std::size_t uncovered_positive() const noexcept;
};

// Scans [0, N]; N >= 1. Work is sum over w < N of floor(sqrt(N - w)).
CoverageReport coverage_report(const ComplementCandidate& w, u64 limit);

// Covered/uncovered flags for [0, limit] as a byte mask (1 = covered).
std::vector<unsigned char> coverage_mask(const ComplementCandidate& w, u64 limit);

// `limit`, `threshold` (or "none") and the uncovered list.
std::string to_text(const CoverageReport& report);
// Header `uncovered`, one value per row.
std::string to_csv(const CoverageReport& report);

// Marks every w + k^2 <= limit (k >= 1) in `mask`, which must have limit + 1 entries.
void mark_translates(std::vector<unsigned char>& mask, u64 w, u64 limit);

}  // namespace sqcomp
