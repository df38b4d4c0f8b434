#pragma once

// Exact representation counts R(n) = #{(k, w) : n = k^2 + w, k >= 1, w in W}
// and the aggregate quantities built on them.

#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "sqcomp/sequences.hpp"

namespace sqcomp {

// Coefficient of sqrt(N) in the excess lower bound for genuine complements.
inline constexpr double kExcessConstant = 0.193;
// liminf W(N)/sqrt(N) >= 4/pi for every complement of the squares.
inline constexpr double kDensityConstant = 4.0 / std::numbers::pi;

// Profiles are materialized only up to this limit; beyond it use stream_profile.
inline constexpr u64 kMaxMaterializedLimit = u64{1} << 30;
inline constexpr u64 kDefaultStreamBlock = u64{1} << 24;

struct RepresentationProfile {
    u64 limit = 0;
    std::vector<std::uint32_t> counts;  // counts[n] = R(n), 0 <= n <= limit
    u64 total = 0;                      // sum of counts
    i64 excess = 0;                     // total - limit

    // #{n <= limit : R(n) >= 1}.
    u64 covered() const noexcept;
};

// Sieve over W: for each w < N add one at w + k^2 for 1 <= k <= floor(sqrt(N - w)).
// With threads > 1 the output range is split into disjoint blocks, one per
// worker; results are identical to the serial run.
RepresentationProfile representation_profile(const ComplementCandidate& w, u64 limit, unsigned threads = 1);

struct ProfileSummary {
    u64 limit = 0;
    u64 total = 0;
    i64 excess = 0;
    u64 covered = 0;
};

// Same counts as representation_profile, produced block by block. `sink`
// receives (first n of the block, counts for the block) in ascending order.
using ProfileBlockSink = std::function<void(u64, std::span<const std::uint32_t>)>;
ProfileSummary stream_profile(const ComplementCandidate& w, u64 limit, u64 block_size = kDefaultStreamBlock,
                              const ProfileBlockSink& sink = {});

// The three routes to sum_{n<=N} R(n).
struct SumIdentity {
    u64 profile_total = 0;  // from the sieve
    u64 by_squares = 0;     // sum_{1<=m<=sqrt N} W(N - m^2)
    u64 by_elements = 0;    // sum_{w in W, w < N} floor(sqrt(N - w))

    bool holds() const noexcept { return profile_total == by_squares && by_squares == by_elements; }
};

SumIdentity sum_identity(const ComplementCandidate& w, u64 limit);
bool sum_identity_check(const ComplementCandidate& w, u64 limit);

// total - N, from the sieve.
i64 excess(const ComplementCandidate& w, u64 limit);

// excess - c sqrt(N). Positive means the run is consistent with the
// c sqrt(N) lower bound at this N; the bound is only claimed for large N.
double excess_margin(const ComplementCandidate& w, u64 limit, double c = kExcessConstant);
double excess_margin(i64 excess_value, u64 limit, double c = kExcessConstant);

// (1 / (2 log 4)) m log m with m = W(floor(2 sqrt N)); zero when m <= 1.
double chen_fang_bound(const ComplementCandidate& w, u64 limit);
double chen_fang_value(u64 m);

// W(N) / sqrt(N), to be read against 4/pi.
double cilleruelo_ratio(const ComplementCandidate& w, u64 limit);

// One summary row: N,total,excess,margin,chen_fang,cilleruelo_ratio.
struct CountingSummary {
    u64 limit = 0;
    u64 total = 0;
    i64 excess = 0;
    double margin = 0.0;
    double chen_fang = 0.0;
    double cilleruelo_ratio = 0.0;
    // excess / N, the quantity a conjectured bound of N + o(N) concerns.
    double excess_density = 0.0;
};

CountingSummary summarize(const ComplementCandidate& w, u64 limit, unsigned threads = 1);

std::string counts_csv(const RepresentationProfile& profile);
std::string summary_csv(std::span<const CountingSummary> rows);
std::string to_text(const CountingSummary& summary);

}  // namespace sqcomp
