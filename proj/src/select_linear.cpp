#include "rosel/selection.hpp"

#include "prune_round.hpp"
#include "run_scope.hpp"

namespace rosel {

SelectionResult select_linear_bits(const ReadOnlyArray& a, std::uint64_t k, WorkspaceMeter& meter,
                                   const SelectionHooks& hooks) {
    detail::check_rank(a, k);
    detail::RunScope scope(a, meter);
    SelectionResult result;
    result.trace.path = "linear-bits";

    const std::uint64_t n = a.size();
    const std::uint64_t cap = ceil_div(n, ceil_lg(n));
    std::optional<WaveletStack> stack;
    stack.emplace(n, meter);
    FilterPair filters;

    auto for_each_active = [&](auto&& visit) {
        const std::uint64_t count = stack->active_count();
        for (std::uint64_t j = 1; j <= count; ++j) visit(stack->index(j));
    };

    while (stack->active_count() > cap) {
        if (auto found = detail::prune_round(a, *stack, filters, k, cap, for_each_active, meter, result, hooks)) {
            result.answer = *found;
            break;
        }
    }

    result.trace.stack_height = stack->height();
    result.trace.stack_bits = stack->total_bits();
    result.trace.stack_shrink_violations = stack->shrink_violations();
    if (result.answer == 0) {
        // The survivors are exactly the elements inside the filters, so the
        // stack can go before they are gathered with one input scan.
        const std::uint64_t count = stack->active_count();
        stack.reset();
        PackedArray rest(meter, count, bits_for(n), "linear/endgame");
        std::uint64_t at = 0;
        for (Index i = 1; i <= n; ++i) {
            if (filters.admits(a, i)) rest.set(at++, i);
        }
        ++result.stats.passes;
        result.answer = baseline_select(rest, k, a, meter);
    }
    scope.finish(result);
    return result;
}

SelectionResult select_baseline(const ReadOnlyArray& a, std::uint64_t k, WorkspaceMeter& meter) {
    detail::check_rank(a, k);
    detail::RunScope scope(a, meter);
    SelectionResult result;
    result.trace.path = "baseline";
    PackedArray all(meter, a.size(), bits_for(a.size()), "baseline/indices");
    for (Index i = 1; i <= a.size(); ++i) all.set(i - 1, i);
    ++result.stats.passes;
    result.answer = baseline_select(all, k, a, meter);
    scope.finish(result);
    return result;
}

}  // namespace rosel
