#pragma once

#include "rosel/input.hpp"
#include "rosel/workspace.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rosel::cli {

enum class Algorithm { Auto, LinearBits, General, LogSq, Baseline, Oracle };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm alg);

enum class InputKind { Text, Binary, Generated };

struct RunConfig {
    InputKind input_kind = InputKind::Generated;
    std::string input;                 // path, or generator spec "N:seed=X[,dist=D]"
    std::optional<std::uint64_t> k;    // empty means every rank ("all")
    Algorithm algorithm = Algorithm::Auto;
    std::optional<std::uint64_t> budget_bits;
    bool json = false;
    bool verify = false;
    std::string bench_file;           // when set, run a sweep instead of a single selection
};

/// Exit statuses of the front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBudget = 3;

/// One selection's report; `verified` is empty without --verify.
struct RunReport {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::string algorithm;
    std::optional<std::uint64_t> budget_bits;
    Index answer_index = 0;
    Value answer_value = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t reads = 0;
    std::uint64_t passes = 0;
    std::uint64_t peak_workspace_bits = 0;
    double elapsed_ms = 0.0;
    std::optional<bool> verified;
};

/// Meter budget for a declared budget S: the documented space factor times S.
std::optional<std::uint64_t> meter_budget_for(std::optional<std::uint64_t> budget_bits);

/// Runs one algorithm on a loaded array, charging `meter`. Throws the algorithm's errors.
RunReport run_once(const ReadOnlyArray& a, std::uint64_t k, Algorithm alg, std::optional<std::uint64_t> budget_bits,
                   bool verify, WorkspaceMeter& meter);

/// Single-selection mode. Writes the report to `out` and diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// One sweep cell, "N S ALG"; S may be "-" for no budget.
struct BenchCell {
    std::uint64_t n = 0;
    std::optional<std::uint64_t> budget_bits;
    std::string algorithm;
};
std::vector<BenchCell> parse_bench(const std::string& text);

/// Sweep mode: each cell runs on a seeded permutation at k = ceil(N / 2).
/// Errors are recorded per row and the sweep continues.
int bench(const std::vector<BenchCell>& cells, bool json, std::ostream& out);

/// Full command-line entry point, used by the rosel binary and the tests.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rosel::cli
