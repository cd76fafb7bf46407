#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlbalance/dataset.hpp"
#include "mlbalance/metrics.hpp"
#include "mlbalance/optimizer.hpp"
#include "mlbalance/planner.hpp"

namespace mlbalance {

inline constexpr const char* kToolName = "mlbalance";
inline constexpr const char* kToolVersion = "0.1.0";

/// Provenance written at the top of every output file: `# key: value` lines in CSV/text files
/// and a "meta" object in JSON files.
struct OutputHeader {
    std::string command;
    /// Ordered (key, value) pairs of the effective configuration.
    std::vector<std::pair<std::string, std::string>> config;

    void write_comment_block(std::ostream& out) const;
    [[nodiscard]] nlohmann::json to_json() const;
};

// Distribution tables (per class, per source, plus totals)
void write_distribution_csv(std::ostream& out, const DistributionReport& rep);
void write_distribution_text(std::ostream& out, const DistributionReport& rep);

void write_merged_csv(std::ostream& out, const MergedDistribution& merged);
void write_merged_text(std::ostream& out, const MergedDistribution& merged);

/// Key-sorted JSON with full precision values.
nlohmann::json metrics_to_json(const MetricsReport& rep);
/// One row per class, then F1 macro, Acc and AWC; values rounded half-up to 2 decimals.
void write_metrics_text(std::ostream& out, const MetricsReport& rep);

/// Serializes a plan with each row's labelset inline so a later load can detect dataset drift.
nlohmann::json plan_to_json(const OccurrencePlan& plan, const LabelsetTable& table, const BalanceParams& params);

struct StoredPlan {
    OccurrencePlan plan;
    BalanceParams params;
};

/// Parses a plan written by plan_to_json and checks it against `table`. Throws ParseError for malformed
/// documents and ConsistencyError when classes, labelsets or original counts differ from the table.
StoredPlan plan_from_json(const nlohmann::json& doc, const LabelsetTable& table);

} // namespace mlbalance
