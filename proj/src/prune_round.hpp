#pragma once

#include "rosel/baseline_select.hpp"
#include "rosel/math.hpp"
#include "rosel/packed_array.hpp"
#include "rosel/selection.hpp"
#include "rosel/wavelet_stack.hpp"

#include <optional>

namespace rosel::detail {

/// One median-of-medians pruning round over the active elements of `stack`.
/// `for_each_active(f)` must call f(input index) for every active element in
/// left-to-right order. Actives are cut into ceil(n / cap) groups of near
/// equal size (each at most `cap`); the median of the group medians splits
/// them. Returns the answer if it is that median, otherwise pushes the
/// survivor mask, narrows `filters` to the survivors and adjusts k.
template <typename ForEachActive>
std::optional<Index> prune_round(const ReadOnlyArray& a, WaveletStack& stack, FilterPair& filters, std::uint64_t& k,
                                 std::uint64_t cap, ForEachActive&& for_each_active, WorkspaceMeter& meter,
                                 SelectionResult& result, const SelectionHooks& hooks) {
    const std::uint64_t n = stack.active_count();
    const unsigned width = bits_for(a.size());
    const std::uint64_t groups = ceil_div(n, cap);
    const std::uint64_t base = n / groups;
    const std::uint64_t longer = n % groups;  // the first `longer` groups hold base + 1

    Index pivot = 0;
    {
        PackedArray medians(meter, groups, width, "prune/medians");
        {
            // Sized for a full group so the charge does not depend on how n splits.
            PackedArray group(meter, cap, width, "prune/group");
            std::uint64_t g = 0;
            std::uint64_t filled = 0;
            for_each_active([&](Index i) {
                group.set(filled++, i);
                const std::uint64_t size = base + (g < longer ? 1 : 0);
                if (filled == size) {
                    const std::uint64_t at = baseline_select_at(group, 0, size, (size + 1) / 2, a, meter);
                    medians.set(g++, group.get(at));
                    filled = 0;
                }
            });
            ++result.stats.passes;
        }
        pivot = baseline_select(medians, (groups + 1) / 2, a, meter);
    }
    const OrderedKey pivot_key = a.get(pivot);

    // One scan marks actives below the pivot and counts them.
    BitBuffer mask = stack.mask_buffer();
    std::uint64_t smaller = 0;
    std::uint64_t pivot_rank = 0;
    for_each_active([&](Index i) {
        const bool below = a.less(i, pivot_key);
        smaller += below ? 1 : 0;
        mask.append(below);
        if (i == pivot) pivot_rank = mask.written();
    });
    ++result.stats.passes;

    if (k == smaller + 1) {
        return pivot;
    }
    RoundRecord round{n, 0};
    if (k <= smaller) {
        filters.high = pivot_key;
        round.survivors = smaller;
    } else {
        filters.low = pivot_key;
        mask.invert();
        mask.clear_bit(pivot_rank);
        k -= smaller + 1;
        round.survivors = n - smaller - 1;
    }
    stack.push_level(std::move(mask));
    result.trace.rounds.push_back(round);
    if (hooks.after_round) hooks.after_round(round);
    return std::nullopt;
}

}  // namespace rosel::detail
