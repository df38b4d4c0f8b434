#include "sqcomp/counting.hpp"

#include <algorithm>
#include <cmath>

#include "sqcomp/parallel.hpp"
#include "sqcomp/report.hpp"

namespace sqcomp {

namespace {

// Adds one at every w + k^2 (k >= 1) inside [lo, hi) for each w, into block[0, hi - lo).
void sieve_block(std::span<const u64> elements, u64 lo, u64 hi, std::span<std::uint32_t> block) {
    for (u64 w : elements) {
        if (w >= hi - 1)  // w + 1 is the smallest reachable value
            break;
        u64 k = 1;
        if (lo > w)
            k = std::max<u64>(1, ceil_sqrt(lo - w));
        const u64 kmax = isqrt(hi - 1 - w);
        for (; k <= kmax; ++k)
            ++block[checked_add(w, k * k) - lo];
    }
}

void require_limit(u64 limit) {
    if (limit < 1)
        throw PreconditionError("representation limit must be >= 1");
}

}  // namespace

u64 RepresentationProfile::covered() const noexcept {
    return static_cast<u64>(std::count_if(counts.begin(), counts.end(), [](std::uint32_t c) { return c != 0; }));
}

RepresentationProfile representation_profile(const ComplementCandidate& w, u64 limit, unsigned threads) {
    require_limit(limit);
    if (limit > kMaxMaterializedLimit)
        throw PreconditionError("limit " + std::to_string(limit) + " above 2^30; use stream_profile");
    RepresentationProfile profile;
    profile.limit = limit;
    profile.counts.assign(limit + 1, 0);
    const auto elements = w.elements();
    std::span<std::uint32_t> all(profile.counts);
    parallel_chunks(limit + 1, threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
        sieve_block(elements, lo, hi, all.subspan(lo, hi - lo));
    });
    u64 total = 0;
    for (auto c : profile.counts)
        total += c;
    profile.total = total;
    profile.excess = checked_signed(total) - checked_signed(limit);
    return profile;
}

ProfileSummary stream_profile(const ComplementCandidate& w, u64 limit, u64 block_size, const ProfileBlockSink& sink) {
    require_limit(limit);
    if (block_size < 1)
        throw PreconditionError("stream block size must be >= 1");
    ProfileSummary summary;
    summary.limit = limit;
    std::vector<std::uint32_t> block;
    for (u64 lo = 0; lo <= limit;) {
        const u64 hi = (limit - lo < block_size) ? limit + 1 : lo + block_size;
        block.assign(hi - lo, 0);
        sieve_block(w.elements(), lo, hi, block);
        for (auto c : block) {
            summary.total += c;
            summary.covered += (c != 0);
        }
        if (sink)
            sink(lo, block);
        lo = hi;
    }
    summary.excess = checked_signed(summary.total) - checked_signed(limit);
    return summary;
}

SumIdentity sum_identity(const ComplementCandidate& w, u64 limit) {
    require_limit(limit);
    SumIdentity id;
    id.profile_total = limit <= kMaxMaterializedLimit ? representation_profile(w, limit).total
                                                      : stream_profile(w, limit).total;
    const u64 root = isqrt(limit);
    for (u64 m = 1; m <= root; ++m)
        id.by_squares += counting_function(w, limit - m * m);
    for (u64 v : w.elements()) {
        if (v >= limit)
            break;
        id.by_elements += isqrt(limit - v);
    }
    return id;
}

bool sum_identity_check(const ComplementCandidate& w, u64 limit) {
    return sum_identity(w, limit).holds();
}

i64 excess(const ComplementCandidate& w, u64 limit) {
    return representation_profile(w, limit).excess;
}

double excess_margin(i64 excess_value, u64 limit, double c) {
    return static_cast<double>(excess_value) - c * std::sqrt(static_cast<double>(limit));
}

double excess_margin(const ComplementCandidate& w, u64 limit, double c) {
    return excess_margin(excess(w, limit), limit, c);
}

double chen_fang_value(u64 m) {
    if (m <= 1)
        return 0.0;
    const double md = static_cast<double>(m);
    return md * std::log(md) / (2.0 * std::log(4.0));
}

double chen_fang_bound(const ComplementCandidate& w, u64 limit) {
    require_limit(limit);
    // floor(2 sqrt N) = floor(sqrt(4N))
    return chen_fang_value(counting_function(w, isqrt(checked_mul(limit, 4))));
}

double cilleruelo_ratio(const ComplementCandidate& w, u64 limit) {
    require_limit(limit);
    return static_cast<double>(counting_function(w, limit)) / std::sqrt(static_cast<double>(limit));
}

CountingSummary summarize(const ComplementCandidate& w, u64 limit, unsigned threads) {
    const auto profile = representation_profile(w, limit, threads);
    CountingSummary s;
    s.limit = limit;
    s.total = profile.total;
    s.excess = profile.excess;
    s.margin = excess_margin(profile.excess, limit);
    s.chen_fang = chen_fang_bound(w, limit);
    s.cilleruelo_ratio = cilleruelo_ratio(w, limit);
    s.excess_density = static_cast<double>(profile.excess) / static_cast<double>(limit);
    return s;
}

std::string counts_csv(const RepresentationProfile& profile) {
    std::string out = "n,count\n";
    for (u64 n = 0; n < profile.counts.size(); ++n)
        out += std::to_string(n) + ',' + std::to_string(profile.counts[n]) + '\n';
    return out;
}

std::string summary_csv(std::span<const CountingSummary> rows) {
    CsvTable table({"N", "total", "excess", "margin", "chen_fang", "cilleruelo_ratio"});
    for (const auto& r : rows)
        table.add_row({std::to_string(r.limit), std::to_string(r.total), std::to_string(r.excess),
                       format_real(r.margin), format_real(r.chen_fang), format_real(r.cilleruelo_ratio)});
    return table.str();
}

std::string to_text(const CountingSummary& s) {
    StructuredText text;
    text.add("N", s.limit);
    text.add("total", s.total);
    text.add("excess", s.excess);
    text.add("margin", s.margin);
    text.add("chen_fang", s.chen_fang);
    text.add("cilleruelo_ratio", s.cilleruelo_ratio);
    text.add("density_reference", kDensityConstant);
    text.add("excess_density", s.excess_density);
    return text.str();
}

}  // namespace sqcomp
