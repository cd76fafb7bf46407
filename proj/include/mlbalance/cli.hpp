#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "mlbalance/dataset.hpp"
#include "mlbalance/error.hpp"
#include "mlbalance/optimizer.hpp"

namespace mlbalance::cli {

struct RunConfig {
    std::filesystem::path input;
    InputFormat format = InputFormat::csv;
    double lambda = 70.0;
    double max_factor = 10.0;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    Strategy strategy = Strategy::hill;
    std::filesystem::path out = ".";

    /// Throws ParameterError for lambda < 0, max_factor <= 1 or budget < 1.
    void validate() const;
};

// Each command writes its files into config.out (created if missing) and throws mlbalance::Error on failure.

/// distribution.csv, distribution.txt
void cmd_stats(const RunConfig& config);
/// plan.json, trace.csv
void cmd_balance(const RunConfig& config);
/// manifest.csv, manifest.json, merged_distribution.csv, merged_distribution.txt
void cmd_plan(const RunConfig& config, const std::filesystem::path& plan_path);
/// plan.json tagged "lp-ros"
void cmd_baseline(const RunConfig& config);
/// metrics.json, metrics.txt. `config.input` and `config.format` describe the ground truth file.
void cmd_metrics(const RunConfig& config, const std::filesystem::path& pred_path, double threshold);

/// Parses arguments, runs one subcommand and maps failures to exit codes. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mlbalance::cli
