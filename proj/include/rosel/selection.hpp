#pragma once

#include "rosel/input.hpp"
#include "rosel/pruning.hpp"
#include "rosel/workspace.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rosel {

struct SelectionStats {
    std::uint64_t comparisons = 0;
    std::uint64_t reads = 0;
    std::uint64_t passes = 0;
    std::uint64_t peak_workspace_bits = 0;
    double elapsed_ms = 0.0;
};

/// One median-of-medians pruning round: active count before and after.
struct RoundRecord {
    std::uint64_t before = 0;
    std::uint64_t survivors = 0;
};

/// Algorithm-internal measurements, exposed for the scaling tests.
struct SelectionTrace {
    std::string path;
    std::vector<RoundRecord> rounds;  // pruning rounds, or zone steps for the zone algorithm
    PruneStats pruning;
    std::uint64_t reduction_reads = 0;       // reads spent before the bucket phase
    std::uint64_t bucket_scan_elements = 0;  // elements examined while locating actives in buckets
    std::uint64_t stack_shrink_violations = 0;
    std::uint64_t stack_height = 0;
    std::uint64_t stack_bits = 0;
    std::uint64_t max_frames = 0;
};

struct SelectionResult {
    Index answer = 0;
    SelectionStats stats;
    SelectionTrace trace;
};

struct SelectionHooks {
    std::function<void(const RoundRecord&)> after_round;
    PruneHooks pruning;
};

/// Copies all N indices into workspace and runs the baseline selector:
/// Theta(N lg N) bits, linear time. Reference point for the other algorithms.
SelectionResult select_baseline(const ReadOnlyArray& a, std::uint64_t k, WorkspaceMeter& meter);

/// Zone-based recursive selection in O(lg^2 N) bits.
SelectionResult select_logsq(const ReadOnlyArray& a, std::uint64_t k, WorkspaceMeter& meter);

/// Prune-and-search over a wavelet stack: Theta(N) time, Theta(N) bits.
SelectionResult select_linear_bits(const ReadOnlyArray& a, std::uint64_t k, WorkspaceMeter& meter,
                                   const SelectionHooks& hooks = {});

struct GeneralOptions {
    /// Use the pruning engine to the end regardless of S.
    bool pruning_only = false;
};

/// Selection in Theta(S) bits for lg^3 N <= S. Budgets above N behave as S = N.
/// Throws ParameterError for S < lg^3 N.
SelectionResult select_general(const ReadOnlyArray& a, std::uint64_t k, std::uint64_t budget_bits,
                               WorkspaceMeter& meter, const SelectionHooks& hooks = {},
                               GeneralOptions options = {});

/// Smallest supported budget, ceil(lg N)^3.
std::uint64_t min_budget_bits(std::uint64_t n);

/// No budget, or a budget of at least kAutoLinearFactor * N bits, runs
/// select_linear_bits; budgets in [lg^3 N, that) run select_general.
SelectionResult select_auto(const ReadOnlyArray& a, std::uint64_t k, std::optional<std::uint64_t> budget_bits,
                            WorkspaceMeter& meter);

/// Sorting oracle: input index of the k-th smallest in tie-broken order.
Index oracle_select(std::span<const Value> values, std::uint64_t k);

/// Input indices in tie-broken sorted order.
std::vector<Index> oracle_order(std::span<const Value> values);

}  // namespace rosel
