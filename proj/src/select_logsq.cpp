#include "rosel/selection.hpp"

#include "rosel/packed_array.hpp"
#include "run_scope.hpp"

#include <algorithm>
#include <array>

namespace rosel {

namespace {

constexpr std::uint64_t kZones = 16;
constexpr std::uint64_t kBaseCase = 64;

class ZoneSelector {
public:
    ZoneSelector(const ReadOnlyArray& a, WorkspaceMeter& meter, SelectionResult& result)
        : a_(a), meter_(meter), result_(result),
          // segment bounds and k as indices, both filters as (value, index), one call-phase bit
          frame_bits_(3 * bits_for(a.size()) + 4 * kWordBits + 1) {}

    /// k-th smallest among the active elements of [first, last].
    Index solve(Index first, Index last, FilterPair filters, std::uint64_t k) {
        ScopedRegion frame(meter_, frame_bits_, "logsq/frames");
        ++depth_;
        result_.trace.max_frames = std::max(result_.trace.max_frames, depth_);
        Index answer = run(first, last, filters, k);
        --depth_;
        return answer;
    }

private:
    Index run(Index first, Index last, FilterPair filters, std::uint64_t k) {
        const std::uint64_t segment = last - first + 1;
        const std::uint64_t zone = (segment + kZones - 1) / kZones;
        for (;;) {
            std::array<std::uint64_t, kZones> counts{};
            std::uint64_t active = 0;
            for (Index i = first; i <= last; ++i) {
                if (filters.admits(a_, i)) {
                    ++counts[(i - first) / zone];
                    ++active;
                }
            }
            ++result_.stats.passes;
            if (active < kBaseCase) {
                return scan_select(first, last, filters, k);
            }

            const auto heavy = static_cast<std::uint64_t>(
                std::max_element(counts.begin(), counts.end()) - counts.begin());
            const Index zone_first = first + heavy * zone;
            const Index zone_last = std::min(last, zone_first + zone - 1);
            const Index median = solve(zone_first, zone_last, filters, (counts[heavy] + 1) / 2);
            const OrderedKey median_key = a_.get(median);

            std::uint64_t smaller = 0;
            for (Index i = first; i <= last; ++i) {
                if (filters.admits(a_, i) && a_.less(i, median_key)) ++smaller;
            }
            ++result_.stats.passes;
            if (k == smaller + 1) {
                return median;
            }
            std::uint64_t survivors = 0;
            if (k <= smaller) {
                filters.high = median_key;
                survivors = smaller;
            } else {
                filters.low = median_key;
                k -= smaller + 1;
                survivors = active - smaller - 1;
            }
            result_.trace.rounds.push_back(RoundRecord{active, survivors});
        }
    }

    /// Base case: k successive minimum scans, each skipping what the previous found.
    Index scan_select(Index first, Index last, const FilterPair& filters, std::uint64_t k) {
        FilterPair window = filters;
        Index found = 0;
        for (std::uint64_t step = 0; step < k; ++step) {
            std::optional<OrderedKey> best;
            for (Index i = first; i <= last; ++i) {
                if (!window.admits(a_, i)) continue;
                if (!best || a_.less(i, *best)) best = a_.get(i);
            }
            ++result_.stats.passes;
            found = best->index;
            window.low = best;
        }
        return found;
    }

    const ReadOnlyArray& a_;
    WorkspaceMeter& meter_;
    SelectionResult& result_;
    std::uint64_t frame_bits_;
    std::uint64_t depth_ = 0;
};

}  // namespace

SelectionResult select_logsq(const ReadOnlyArray& a, std::uint64_t k, WorkspaceMeter& meter) {
    detail::check_rank(a, k);
    detail::RunScope scope(a, meter);
    SelectionResult result;
    result.trace.path = "logsq";
    const std::uint64_t n = a.size();

    if (n == 1) {
        result.answer = 1;
    } else {
        Index lo = 1;
        Index hi = 1;
        for (Index i = 2; i <= n; ++i) {
            if (a.less(i, lo)) lo = i;
            if (a.less(hi, i)) hi = i;
        }
        ++result.stats.passes;
        if (k == 1) {
            result.answer = lo;
        } else if (k == n) {
            result.answer = hi;
        } else {
            ZoneSelector selector(a, meter, result);
            result.answer = selector.solve(1, n, FilterPair{a.get(lo), a.get(hi)}, k - 1);
        }
    }
    scope.finish(result);
    return result;
}

}  // namespace rosel
