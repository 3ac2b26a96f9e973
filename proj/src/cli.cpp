#include "rosel/cli.hpp"

#include "rosel/bounds.hpp"
#include "rosel/errors.hpp"
#include "rosel/math.hpp"
#include "rosel/selection.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace rosel::cli {

namespace {

using nlohmann::ordered_json;

struct NamedAlgorithm {
    const char* name;
    Algorithm alg;
};

constexpr NamedAlgorithm kAlgorithms[] = {
    {"auto", Algorithm::Auto},   {"linear-bits", Algorithm::LinearBits}, {"general", Algorithm::General},
    {"logsq", Algorithm::LogSq}, {"baseline", Algorithm::Baseline},      {"oracle", Algorithm::Oracle},
};

ordered_json to_json(const RunReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["algorithm"] = r.algorithm;
    j["budget_bits"] = r.budget_bits ? ordered_json(*r.budget_bits) : ordered_json(nullptr);
    j["answer_index"] = r.answer_index;
    j["answer_value"] = r.answer_value;
    j["comparisons"] = r.comparisons;
    j["reads"] = r.reads;
    j["passes"] = r.passes;
    j["peak_workspace_bits"] = r.peak_workspace_bits;
    j["elapsed_ms"] = r.elapsed_ms;
    j["verified"] = r.verified ? ordered_json(*r.verified) : ordered_json(nullptr);
    return j;
}

void print_plain(const RunReport& r, std::ostream& out) {
    out << "n: " << r.n << "\n"
        << "k: " << r.k << "\n"
        << "algorithm: " << r.algorithm << "\n"
        << "budget_bits: " << (r.budget_bits ? std::to_string(*r.budget_bits) : "none") << "\n"
        << "answer_index: " << r.answer_index << "\n"
        << "answer_value: " << r.answer_value << "\n"
        << "comparisons: " << r.comparisons << "\n"
        << "reads: " << r.reads << "\n"
        << "passes: " << r.passes << "\n"
        << "peak_workspace_bits: " << r.peak_workspace_bits << "\n"
        << "elapsed_ms: " << std::fixed << std::setprecision(3) << r.elapsed_ms << std::defaultfloat << "\n";
    if (r.verified) out << (*r.verified ? "MATCH" : "MISMATCH") << "\n";
}

std::vector<Value> load_input(const RunConfig& cfg) {
    switch (cfg.input_kind) {
    case InputKind::Text:
        return load_text(cfg.input);
    case InputKind::Binary:
        return load_binary(cfg.input);
    case InputKind::Generated:
        return generate(parse_generator(cfg.input));
    }
    throw UsageError("unknown input kind");
}

void print_report(const WorkspaceMeter& meter, std::ostream& err) {
    const WorkspaceReport report = meter.report();
    err << "workspace peak " << report.peak << " bits";
    if (report.budget) err << " of budget " << *report.budget;
    err << "\n";
    for (const auto& [label, bits] : report.label_peaks) {
        err << "  " << label << ": " << bits << " bits\n";
    }
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
    for (const auto& entry : kAlgorithms) {
        if (name == entry.name) return entry.alg;
    }
    throw UsageError("unknown algorithm '" + name +
                     "' (expected auto, linear-bits, general, logsq, baseline or oracle)");
}

std::string to_string(Algorithm alg) {
    for (const auto& entry : kAlgorithms) {
        if (alg == entry.alg) return entry.name;
    }
    return "unknown";
}

std::optional<std::uint64_t> meter_budget_for(std::optional<std::uint64_t> budget_bits) {
    if (!budget_bits) return std::nullopt;
    return static_cast<std::uint64_t>(std::ceil(bounds::kGeneralFactor * static_cast<double>(*budget_bits)));
}

RunReport run_once(const ReadOnlyArray& a, std::uint64_t k, Algorithm alg, std::optional<std::uint64_t> budget_bits,
                   bool verify, WorkspaceMeter& meter) {
    RunReport report;
    report.n = a.size();
    report.k = k;
    report.algorithm = to_string(alg);
    report.budget_bits = budget_bits;

    if (alg == Algorithm::Oracle) {
        const auto start = std::chrono::steady_clock::now();
        report.answer_index = oracle_select(a.raw(), k);
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.reads = a.size();
        report.peak_workspace_bits = a.size() * kWordBits;
    } else {
        SelectionResult result;
        switch (alg) {
        case Algorithm::Auto:
            result = select_auto(a, k, budget_bits, meter);
            break;
        case Algorithm::LinearBits:
            result = select_linear_bits(a, k, meter);
            break;
        case Algorithm::General:
            if (!budget_bits) throw UsageError("--alg general needs --budget-bits");
            result = select_general(a, k, *budget_bits, meter);
            break;
        case Algorithm::LogSq:
            result = select_logsq(a, k, meter);
            break;
        case Algorithm::Baseline:
            result = select_baseline(a, k, meter);
            break;
        case Algorithm::Oracle:
            break;
        }
        report.answer_index = result.answer;
        report.comparisons = result.stats.comparisons;
        report.reads = result.stats.reads;
        report.passes = result.stats.passes;
        report.peak_workspace_bits = result.stats.peak_workspace_bits;
        report.elapsed_ms = result.stats.elapsed_ms;
    }
    report.answer_value = a.raw()[report.answer_index - 1];
    if (verify) {
        report.verified = report.answer_index == oracle_select(a.raw(), k);
    }
    return report;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<Value> values;
    try {
        values = load_input(cfg);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    const ReadOnlyArray a(std::move(values));
    if (cfg.k && (*cfg.k == 0 || *cfg.k > a.size())) {
        err << "error: k = " << *cfg.k << " outside [1, " << a.size() << "]\n";
        return kExitConfig;
    }

    std::vector<std::uint64_t> ranks;
    if (cfg.k) {
        ranks.push_back(*cfg.k);
    } else {
        for (std::uint64_t k = 1; k <= a.size(); ++k) ranks.push_back(k);
    }

    ordered_json rows = ordered_json::array();
    bool all_match = true;
    for (const std::uint64_t k : ranks) {
        RunReport report;
        WorkspaceMeter meter(meter_budget_for(cfg.budget_bits));
        try {
            report = run_once(a, k, cfg.algorithm, cfg.budget_bits, cfg.verify, meter);
        } catch (const BudgetExceeded& e) {
            err << "error: " << e.what() << "\n";
            print_report(meter, err);
            return kExitBudget;
        } catch (const ParameterError& e) {
            err << "error: " << e.what() << "\n";
            return kExitBudget;
        } catch (const UsageError& e) {
            err << "error: " << e.what() << "\n";
            return kExitConfig;
        }
        if (report.verified && !*report.verified) all_match = false;
        if (cfg.json) {
            if (cfg.k) {
                out << to_json(report).dump(2) << "\n";
            } else {
                rows.push_back(to_json(report));
            }
        } else {
            if (ranks.size() > 1) out << "--- k = " << k << "\n";
            print_plain(report, out);
        }
    }
    if (cfg.json && !cfg.k) out << rows.dump(2) << "\n";
    return all_match ? kExitOk : kExitMismatch;
}

std::vector<BenchCell> parse_bench(const std::string& text) {
    std::vector<BenchCell> cells;
    std::istringstream lines(text);
    std::string line;
    std::uint64_t number = 0;
    while (std::getline(lines, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string n;
        std::string s;
        std::string alg;
        if (!(fields >> n)) continue;
        std::string extra;
        if (!(fields >> s >> alg) || (fields >> extra)) {
            throw ParseError("bench line " + std::to_string(number) + ": expected \"N S ALG\"");
        }
        BenchCell cell;
        try {
            std::size_t used = 0;
            cell.n = std::stoull(n, &used);
            if (used != n.size()) throw std::invalid_argument(n);
            if (s != "-") {
                cell.budget_bits = std::stoull(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
            }
        } catch (const std::logic_error&) {
            throw ParseError("bench line " + std::to_string(number) + ": bad number");
        }
        cell.algorithm = alg;
        cells.push_back(std::move(cell));
    }
    return cells;
}

int bench(const std::vector<BenchCell>& cells, bool json, std::ostream& out) {
    ordered_json rows = ordered_json::array();
    if (!json) {
        out << std::left << std::setw(10) << "N" << std::setw(12) << "S" << std::setw(13) << "ALG" << std::setw(14)
            << "comparisons" << std::setw(14) << "reads" << std::setw(8) << "passes" << std::setw(14) << "peak_bits"
            << "ms\n";
    }
    for (const BenchCell& cell : cells) {
        ordered_json row;
        row["n"] = cell.n;
        row["s"] = cell.budget_bits ? ordered_json(*cell.budget_bits) : ordered_json(nullptr);
        row["algorithm"] = cell.algorithm;
        std::string error;
        RunReport report;
        try {
            if (cell.n == 0) throw ParameterError("N must be positive");
            const ReadOnlyArray a(generate(GeneratorSpec{cell.n, 1, Distribution::Permutation}));
            WorkspaceMeter meter(meter_budget_for(cell.budget_bits));
            report = run_once(a, ceil_div(cell.n, 2), parse_algorithm(cell.algorithm), cell.budget_bits, false, meter);
            row["comparisons"] = report.comparisons;
            row["reads"] = report.reads;
            row["passes"] = report.passes;
            row["peak_workspace_bits"] = report.peak_workspace_bits;
            row["elapsed_ms"] = report.elapsed_ms;
        } catch (const Error& e) {
            error = e.what();
            row["error"] = error;
        }
        if (json) {
            rows.push_back(std::move(row));
            continue;
        }
        out << std::left << std::setw(10) << cell.n << std::setw(12)
            << (cell.budget_bits ? std::to_string(*cell.budget_bits) : "-") << std::setw(13) << cell.algorithm;
        if (!error.empty()) {
            out << "error: " << error << "\n";
        } else {
            out << std::setw(14) << report.comparisons << std::setw(14) << report.reads << std::setw(8)
                << report.passes << std::setw(14) << report.peak_workspace_bits << std::fixed
                << std::setprecision(3) << report.elapsed_ms << std::defaultfloat << "\n";
        }
    }
    if (json) out << rows.dump(2) << "\n";
    return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Selection on read-only input under a workspace bit budget"};
    RunConfig cfg;
    std::string text_path;
    std::string binary_path;
    std::string gen_spec;
    std::string k_text;
    std::string alg_name = "auto";
    std::optional<std::uint64_t> budget;

    auto* text_opt = app.add_option("--input", text_path, "Text file of integers, one per line");
    auto* binary_opt = app.add_option("--input-binary", binary_path, "Little-endian int64 file");
    auto* gen_opt = app.add_option("--gen", gen_spec, "Generated input N:seed=X[,dist=D]");
    text_opt->excludes(binary_opt)->excludes(gen_opt);
    binary_opt->excludes(gen_opt);
    app.add_option("--k", k_text, "Rank to select, or 'all'");
    app.add_option("--alg", alg_name, "auto, linear-bits, general, logsq, baseline or oracle");
    app.add_option("--budget-bits", budget, "Workspace budget S in bits");
    app.add_flag("--json", cfg.json, "Emit JSON");
    app.add_flag("--verify", cfg.verify, "Check the answer against the sorting oracle");
    app.add_option("--bench", cfg.bench_file, "Sweep file, one \"N S ALG\" cell per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (!cfg.bench_file.empty()) {
            std::ifstream in(cfg.bench_file);
            if (!in) throw UsageError("cannot open bench file '" + cfg.bench_file + "'");
            std::stringstream text;
            text << in.rdbuf();
            return bench(parse_bench(text.str()), cfg.json, out);
        }
        if (!text_path.empty()) {
            cfg.input_kind = InputKind::Text;
            cfg.input = text_path;
        } else if (!binary_path.empty()) {
            cfg.input_kind = InputKind::Binary;
            cfg.input = binary_path;
        } else if (!gen_spec.empty()) {
            cfg.input_kind = InputKind::Generated;
            cfg.input = gen_spec;
        } else {
            throw UsageError("one of --input, --input-binary or --gen is required");
        }
        if (k_text.empty()) throw UsageError("--k is required");
        if (k_text != "all") {
            std::size_t used = 0;
            try {
                cfg.k = std::stoull(k_text, &used);
            } catch (const std::logic_error&) {
                used = 0;
            }
            if (used != k_text.size() || k_text.front() == '-') {
                throw UsageError("--k expects a positive integer or 'all'");
            }
        }
        cfg.algorithm = parse_algorithm(alg_name);
        cfg.budget_bits = budget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitConfig;
    }
    return run(cfg, out, err);
}

}  // namespace rosel::cli
