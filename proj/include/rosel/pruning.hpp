#pragma once

#include "rosel/input.hpp"
#include "rosel/workspace.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rosel {

/// Two filter elements bracketing the answer. An element is active when it
/// lies strictly between them; a missing side is an infinite sentinel.
struct FilterPair {
    std::optional<OrderedKey> low;
    std::optional<OrderedKey> high;

    /// Strictly inside the filters. Up to two comparisons.
    bool admits(const ReadOnlyArray& a, Index i) const {
        if (low && !a.less(*low, i)) return false;
        if (high && !a.less(i, *high)) return false;
        return true;
    }

    friend bool operator==(const FilterPair&, const FilterPair&) = default;
};

/// Filters plus the answer's rank among the active elements.
struct PruneState {
    FilterPair filters;
    std::uint64_t k = 1;
    std::uint64_t active = 0;
    /// Set when a pass identified the answer itself.
    std::optional<Index> found;
};

struct PruneStats {
    std::uint64_t scans = 0;            // full input scans
    std::uint64_t sampling_passes = 0;  // sample-and-filter passes (each costs two scans)
    std::uint64_t quantile_passes = 0;  // passes with d < s
    std::uint64_t max_levels = 0;       // most sample levels alive at one time
    std::vector<std::uint64_t> active_after_pass;
};

struct PruneHooks {
    /// Called after every pass with the updated state.
    std::function<void(const PruneState&)> after_pass;
};

/// Parameters derived from a bit budget S: s_w = S / lg N words, and the
/// sample size s = 2 * ceil(s_w / (2 lg N)), at least 4.
struct SamplingPlan {
    std::uint64_t s = 4;
    std::uint64_t words = 0;
};
SamplingPlan plan_sampling(std::uint64_t n, std::uint64_t budget_bits);

/// Elements strictly inside the filters; one scan, no workspace.
std::uint64_t count_active(const ReadOnlyArray& a, const FilterPair& f);

/// Outcome of one pass; `endgame` means the active count was already <= s and
/// the state is returned unchanged.
struct PassResult {
    PruneState state;
    bool endgame = false;
    std::uint64_t final_level = 0;
    std::uint64_t low_rank = 0;   // 1-based rank in the final sample of the new low candidate
    std::uint64_t high_rank = 0;  // ... and of the new high candidate
};

/// Sample rank pair for the Munro-Paterson final sample at level r:
/// max(1, ceil(k / 2^r) - r) and min(s, ceil(k / 2^r)).
std::pair<std::uint64_t, std::uint64_t> mp_filter_ranks(std::uint64_t k, std::uint64_t r, std::uint64_t s);

/// One sampling pass with d-quantiles of each size-s set (d == s sorts the sets,
/// which is the Munro-Paterson pass), followed by a counting scan that verifies
/// the candidate filters and adjusts k.
PassResult sampling_pass(const ReadOnlyArray& a, const PruneState& state, std::uint64_t s, std::uint64_t d,
                         WorkspaceMeter& meter, PruneStats* stats = nullptr);

/// Munro-Paterson pass: sorted level-0 samples, thinning above level 0.
PassResult mp_pass(const ReadOnlyArray& a, const PruneState& state, std::uint64_t s, WorkspaceMeter& meter,
                   PruneStats* stats = nullptr);

/// A Frederickson phase: quantile passes with parameter d until the active
/// count drops to `target` or below (or the answer is found).
PruneState fred_phase(const ReadOnlyArray& a, const PruneState& state, std::uint64_t s, std::uint64_t d,
                      std::uint64_t target, WorkspaceMeter& meter, PruneStats* stats = nullptr,
                      const PruneHooks& hooks = {});

/// Reduces the active count to at most `limit` with Frederickson phases,
/// switching to Munro-Paterson passes once d >= min(s, n / s). The sample
/// size is derived from `budget_bits`.
PruneState prune_until(const ReadOnlyArray& a, std::uint64_t k, std::uint64_t budget_bits, std::uint64_t limit,
                       WorkspaceMeter& meter, PruneStats* stats = nullptr, const PruneHooks& hooks = {});

/// prune_until with limit S: at most S active elements remain.
PruneState reduce_to_s(const ReadOnlyArray& a, std::uint64_t k, std::uint64_t budget_bits, WorkspaceMeter& meter,
                       PruneStats* stats = nullptr, const PruneHooks& hooks = {});

}  // namespace rosel
