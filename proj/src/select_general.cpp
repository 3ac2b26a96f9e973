#include "rosel/selection.hpp"

#include "rosel/count_vector.hpp"
#include "prune_round.hpp"
#include "run_scope.hpp"

#include <cmath>
#include <string>

namespace rosel {

namespace {

/// Maps positions among the filtered elements to input indices. Consecutive
/// requests in the same bucket continue the previous scan, so one left to
/// right sweep reads each touched bucket at most once.
class BucketCursor {
public:
    BucketCursor(const ReadOnlyArray& a, const FilterPair& filters, const CountVector& counts,
                 std::uint64_t& scanned)
        : a_(a), filters_(filters), counts_(counts), scanned_(scanned) {}

    Index find(std::uint64_t p) {
        const CountVector::Location loc = counts_.locate(p);
        std::uint64_t need = 0;
        Index i = 0;
        if (loc.bucket == bucket_ && p > position_) {
            need = p - position_;
            i = index_;
        } else {
            need = loc.offset;
            i = counts_.bucket_first(loc.bucket) - 1;
        }
        while (need > 0) {
            ++i;
            ++scanned_;
            if (filters_.admits(a_, i)) --need;
        }
        bucket_ = loc.bucket;
        position_ = p;
        index_ = i;
        return i;
    }

private:
    const ReadOnlyArray& a_;
    const FilterPair& filters_;
    const CountVector& counts_;
    std::uint64_t& scanned_;
    std::uint64_t bucket_ = 0;
    std::uint64_t position_ = 0;
    Index index_ = 0;
};

/// Copies the active elements into workspace and finishes with the baseline selector.
template <typename ForEachActive>
Index finish_in_workspace(const ReadOnlyArray& a, std::uint64_t count, std::uint64_t k,
                          ForEachActive&& for_each_active, WorkspaceMeter& meter, SelectionResult& result) {
    PackedArray rest(meter, count, bits_for(a.size()), "general/endgame");
    std::uint64_t at = 0;
    for_each_active([&](Index i) { rest.set(at++, i); });
    ++result.stats.passes;
    return baseline_select(rest, k, a, meter);
}

}  // namespace

SelectionResult select_general(const ReadOnlyArray& a, std::uint64_t k, std::uint64_t budget_bits,
                               WorkspaceMeter& meter, const SelectionHooks& hooks, GeneralOptions options) {
    detail::check_rank(a, k);
    const std::uint64_t n = a.size();
    if (budget_bits < min_budget_bits(n)) {
        throw ParameterError("budget of " + std::to_string(budget_bits) + " bits is below ceil(lg N)^3 = " +
                             std::to_string(min_budget_bits(n)));
    }
    detail::RunScope scope(a, meter);
    SelectionResult result;
    const std::uint64_t budget = std::min(budget_bits, n);
    const unsigned width = bits_for(n);
    const auto pure_limit =
        static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n) * std::log2(static_cast<double>(n)))));

    if (options.pruning_only || budget <= pure_limit) {
        result.trace.path = "general/pruning";
        const std::uint64_t s = plan_sampling(n, budget).s;
        PruneState state = prune_until(a, k, budget, std::max<std::uint64_t>(s, budget / width), meter,
                                       &result.trace.pruning, hooks.pruning);
        result.stats.passes += result.trace.pruning.scans;
        if (state.found) {
            result.answer = *state.found;
        } else {
            auto scan = [&](auto&& visit) {
                for (Index i = 1; i <= n; ++i) {
                    if (state.filters.admits(a, i)) visit(i);
                }
            };
            result.answer = finish_in_workspace(a, state.active, state.k, scan, meter, result);
        }
        scope.finish(result);
        return result;
    }

    result.trace.path = "general/buckets";
    const std::uint64_t reads_before = a.reads();
    PruneState state = reduce_to_s(a, k, budget, meter, &result.trace.pruning, hooks.pruning);
    result.stats.passes += result.trace.pruning.scans;
    result.trace.reduction_reads = a.reads() - reads_before;
    if (state.found) {
        result.answer = *state.found;
        scope.finish(result);
        return result;
    }

    std::optional<CountVector> counts;
    counts.emplace(a, state.filters, state.active, budget, meter);
    ++result.stats.passes;
    std::optional<WaveletStack> stack;
    stack.emplace(state.active, meter);
    const std::uint64_t cap = ceil_div(budget, ceil_lg(n));
    k = state.k;
    FilterPair filters = state.filters;

    auto for_each_active = [&](auto&& visit) {
        BucketCursor cursor(a, state.filters, *counts, result.trace.bucket_scan_elements);
        const std::uint64_t count = stack->active_count();
        for (std::uint64_t j = 1; j <= count; ++j) visit(cursor.find(stack->index(j)));
    };
    auto single_bucket = [&] {
        const std::uint64_t first = counts->locate(stack->index(1)).bucket;
        const std::uint64_t last = counts->locate(stack->index(stack->active_count())).bucket;
        return first == last;
    };

    while (stack->active_count() > cap && !single_bucket()) {
        if (auto found = detail::prune_round(a, *stack, filters, k, cap, for_each_active, meter, result, hooks)) {
            result.answer = *found;
            break;
        }
    }

    result.trace.stack_height = stack->height();
    result.trace.stack_bits = stack->total_bits();
    result.trace.stack_shrink_violations = stack->shrink_violations();
    if (result.answer == 0) {
        // Either few actives remain or they all share one bucket of at most
        // ceil(N / S) elements; both fit in the budget. The survivors are the
        // elements inside the narrowed filters, so the stack goes first.
        const std::uint64_t count = stack->active_count();
        stack.reset();
        counts.reset();
        auto scan = [&](auto&& visit) {
            for (Index i = 1; i <= n; ++i) {
                if (filters.admits(a, i)) visit(i);
            }
        };
        result.answer = finish_in_workspace(a, count, k, scan, meter, result);
    }
    scope.finish(result);
    return result;
}

}  // namespace rosel
