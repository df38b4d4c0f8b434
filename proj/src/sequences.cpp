#include "sqcomp/sequences.hpp"

#include <algorithm>

#include "sqcomp/report.hpp"

namespace sqcomp {

ComplementCandidate::ComplementCandidate(std::vector<u64> elements, std::string label)
    : elements_(std::move(elements)), label_(std::move(label)) {
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i] <= elements_[i - 1])
            throw PreconditionError("complement candidate not strictly increasing at index " +
                                    std::to_string(i) + " (" + std::to_string(elements_[i - 1]) +
                                    " then " + std::to_string(elements_[i]) + ")");
    }
}

ComplementCandidate ComplementCandidate::from_unsorted(std::vector<u64> elements, std::string label) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return ComplementCandidate(std::move(elements), std::move(label));
}

u64 ComplementCandidate::element(std::size_t n) const {
    if (n == 0 || n > elements_.size())
        throw PreconditionError("element index " + std::to_string(n) + " outside [1, " +
                                std::to_string(elements_.size()) + "]");
    return elements_[n - 1];
}

bool ComplementCandidate::contains(u64 value) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::optional<u64> ComplementCandidate::max() const noexcept {
    if (elements_.empty())
        return std::nullopt;
    return elements_.back();
}

ComplementCandidate ComplementCandidate::with_label(std::string label) const {
    ComplementCandidate copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

std::size_t counting_function(const ComplementCandidate& w, u64 x) noexcept {
    auto el = w.elements();
    return static_cast<std::size_t>(std::upper_bound(el.begin(), el.end(), x) - el.begin());
}

std::size_t CoverageReport::uncovered_positive() const noexcept {
    if (!uncovered.empty() && uncovered.front() == 0)
        return uncovered.size() - 1;
    return uncovered.size();
}

void mark_translates(std::vector<unsigned char>& mask, u64 w, u64 limit) {
    if (w >= limit)
        return;
    const u64 kmax = isqrt(limit - w);
    for (u64 k = 1; k <= kmax; ++k)
        mask[checked_add(w, k * k)] = 1;
}

std::vector<unsigned char> coverage_mask(const ComplementCandidate& w, u64 limit) {
    if (limit < 1)
        throw PreconditionError("coverage limit must be >= 1");
    std::vector<unsigned char> mask(checked_add(limit, 1), 0);
    for (u64 v : w.elements()) {
        if (v >= limit)
            break;
        mark_translates(mask, v, limit);
    }
    return mask;
}

CoverageReport coverage_report(const ComplementCandidate& w, u64 limit) {
    const auto mask = coverage_mask(w, limit);
    CoverageReport report;
    report.limit = limit;
    for (u64 n = 0; n <= limit; ++n)
        if (!mask[n])
            report.uncovered.push_back(n);
    if (report.uncovered.empty())
        report.threshold = 0;
    else if (report.uncovered.back() < limit)
        report.threshold = report.uncovered.back() + 1;
    return report;
}

std::string to_text(const CoverageReport& report) {
    StructuredText text;
    text.add("limit", report.limit);
    text.add("threshold", report.threshold ? std::to_string(*report.threshold) : std::string("none"));
    text.add("uncovered_count", static_cast<u64>(report.uncovered.size()));
    text.add_array("uncovered", report.uncovered);
    return text.str();
}

std::string to_csv(const CoverageReport& report) {
    CsvTable table({"uncovered"});
    for (u64 n : report.uncovered)
        table.add_row({std::to_string(n)});
    return table.str();
}

}  // namespace sqcomp
