#pragma once

#include "rosel/input.hpp"
#include "rosel/packed_array.hpp"
#include "rosel/workspace.hpp"

#include <cstdint>

namespace rosel {

/// Words charged per recursion frame of the in-workspace routines below.
inline constexpr std::uint64_t kBaselineFrameWords = 4;

/// Deterministic linear-time selection (median of medians, groups of 5) over
/// input indices stored in `indices[lo, hi)`. Returns the 0-based offset in
/// `indices` of the k-th smallest (1-based k) referenced element; afterwards
/// the range is partitioned around it. Uses O(hi - lo) comparisons.
std::uint64_t baseline_select_at(PackedArray& indices, std::uint64_t lo, std::uint64_t hi, std::uint64_t k,
                                 const ReadOnlyArray& a, WorkspaceMeter& meter);

/// Whole-array form: returns the input index of the k-th smallest.
Index baseline_select(PackedArray& indices, std::uint64_t k, const ReadOnlyArray& a, WorkspaceMeter& meter);

/// In-place heap sort of `indices[lo, hi)` in tie-broken element order.
void heap_sort(PackedArray& indices, std::uint64_t lo, std::uint64_t hi, const ReadOnlyArray& a);

/// Places the elements of the given 1-based ranks (ascending, within
/// [1, hi - lo]) at their sorted positions using O((hi - lo) lg count)
/// comparisons. `rank_of(j)` yields the j-th rank for j in [0, count).
template <typename RankFn>
void baseline_multiselect(PackedArray& indices, std::uint64_t lo, std::uint64_t hi, std::uint64_t first,
                          std::uint64_t count, RankFn&& rank_of, std::uint64_t rank_base, const ReadOnlyArray& a,
                          WorkspaceMeter& meter) {
    // rank_of(j) - rank_base is the rank relative to `lo`.
    if (count == 0 || lo >= hi) return;
    ScopedRegion frame(meter, kBaselineFrameWords * kWordBits, "baseline/frames");
    const std::uint64_t mid = first + count / 2;
    const std::uint64_t rank = rank_of(mid) - rank_base;
    const std::uint64_t pos = baseline_select_at(indices, lo, hi, rank, a, meter);
    baseline_multiselect(indices, lo, pos, first, mid - first, rank_of, rank_base, a, meter);
    baseline_multiselect(indices, pos + 1, hi, mid + 1, first + count - mid - 1, rank_of, rank_base + rank, a,
                         meter);
}

}  // namespace rosel
