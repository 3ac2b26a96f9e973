#pragma once

#include "rosel/errors.hpp"
#include "rosel/input.hpp"
#include "rosel/selection.hpp"
#include "rosel/workspace.hpp"

#include <chrono>
#include <string>

namespace rosel::detail {

/// Captures counter baselines at the start of a run and fills SelectionStats at the end.
class RunScope {
public:
    RunScope(const ReadOnlyArray& a, WorkspaceMeter& meter)
        : a_(a), meter_(meter), reads0_(a.reads()), comparisons0_(a.comparisons()),
          start_(std::chrono::steady_clock::now()) {}

    void finish(SelectionResult& result) const {
        result.stats.reads = a_.reads() - reads0_;
        result.stats.comparisons = a_.comparisons() - comparisons0_;
        result.stats.peak_workspace_bits = meter_.peak();
        result.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    const ReadOnlyArray& a_;
    WorkspaceMeter& meter_;
    std::uint64_t reads0_;
    std::uint64_t comparisons0_;
    std::chrono::steady_clock::time_point start_;
};

inline void check_rank(const ReadOnlyArray& a, std::uint64_t k) {
    if (k == 0 || k > a.size()) {
        throw BoundsError("rank " + std::to_string(k) + " outside [1, " + std::to_string(a.size()) + "]");
    }
}

}  // namespace rosel::detail
