#include "mlbalance/report.hpp"

#include <algorithm>
#include <iomanip>

#include "mlbalance/csv.hpp"
#include "mlbalance/error.hpp"
#include "mlbalance/format.hpp"

namespace mlbalance {

using nlohmann::json;

void OutputHeader::write_comment_block(std::ostream& out) const {
    out << "# " << kToolName << ' ' << kToolVersion << '\n';
    out << "# command: " << command << '\n';
    for (const auto& [key, value] : config) {
        out << "# " << key << ": " << value << '\n';
    }
}

json OutputHeader::to_json() const {
    json cfg = json::object();
    for (const auto& [key, value] : config) {
        cfg[key] = value;
    }
    return json{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"config", cfg}};
}

namespace {

// Left-aligned first column, right-aligned rest; a rule precedes every row index in `rules_before`.
void write_text_table(std::ostream& out, const std::vector<std::vector<std::string>>& cells,
                      const std::vector<std::size_t>& rules_before) {
    std::vector<std::size_t> width;
    for (const auto& row : cells) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::size_t total = 0;
    for (const auto w : width) {
        total += w + 2;
    }
    const std::string rule(total > 2 ? total - 2 : total, '-');
    for (std::size_t r = 0; r < cells.size(); ++r) {
        if (std::find(rules_before.begin(), rules_before.end(), r) != rules_before.end()) {
            out << rule << '\n';
        }
        const auto& row = cells[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i == 0) {
                out << std::left << std::setw(static_cast<int>(width[i])) << row[i];
            } else {
                out << "  " << std::right << std::setw(static_cast<int>(width[i])) << row[i];
            }
        }
        out << '\n';
    }
}

} // namespace

void write_distribution_csv(std::ostream& out, const DistributionReport& rep) {
    out << "class";
    for (const auto& s : rep.sources) {
        out << ',' << csv::escape(s);
    }
    out << ",total\n";
    for (std::size_t c = 0; c < rep.class_names.size(); ++c) {
        out << csv::escape(rep.class_names[c]);
        for (const auto v : rep.counts[c]) {
            out << ',' << v;
        }
        out << ',' << rep.totals[c] << '\n';
    }
    out << "total_images";
    for (const auto v : rep.images) {
        out << ',' << v;
    }
    out << ',' << rep.total_images << '\n';
}

void write_distribution_text(std::ostream& out, const DistributionReport& rep) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"class"};
    head.insert(head.end(), rep.sources.begin(), rep.sources.end());
    head.emplace_back("total");
    cells.push_back(std::move(head));
    for (std::size_t c = 0; c < rep.class_names.size(); ++c) {
        std::vector<std::string> row{rep.class_names[c]};
        for (const auto v : rep.counts[c]) {
            row.push_back(std::to_string(v));
        }
        row.push_back(std::to_string(rep.totals[c]));
        cells.push_back(std::move(row));
    }
    std::vector<std::string> last{"total images"};
    for (const auto v : rep.images) {
        last.push_back(std::to_string(v));
    }
    last.push_back(std::to_string(rep.total_images));
    cells.push_back(std::move(last));
    write_text_table(out, cells, {1, cells.size() - 1});
}

void write_merged_csv(std::ostream& out, const MergedDistribution& merged) {
    out << "class,before,after\n";
    for (std::size_t c = 0; c < merged.class_names.size(); ++c) {
        out << csv::escape(merged.class_names[c]) << ',' << merged.before[c] << ',' << merged.after[c] << '\n';
    }
    out << "total_images," << merged.images_before << ',' << merged.images_after << '\n';
}

void write_merged_text(std::ostream& out, const MergedDistribution& merged) {
    std::vector<std::vector<std::string>> cells{{"class", "before", "after"}};
    for (std::size_t c = 0; c < merged.class_names.size(); ++c) {
        cells.push_back({merged.class_names[c], std::to_string(merged.before[c]), std::to_string(merged.after[c])});
    }
    cells.push_back({"total images", std::to_string(merged.images_before), std::to_string(merged.images_after)});
    write_text_table(out, cells, {1, cells.size() - 1});
}

json metrics_to_json(const MetricsReport& rep) {
    json classes = json::array();
    for (const auto& cm : rep.per_class) {
        classes.push_back(json{{"name", cm.name},
                               {"tp", cm.counts.tp},
                               {"fp", cm.counts.fp},
                               {"fn", cm.counts.fn},
                               {"tn", cm.counts.tn},
                               {"f1", cm.f1}});
    }
    return json{{"per_class", classes}, {"f1_macro", rep.f1_macro}, {"accuracy", rep.accuracy}, {"awc", rep.awc}};
}

void write_metrics_text(std::ostream& out, const MetricsReport& rep) {
    std::vector<std::vector<std::string>> cells{{"", "F1"}};
    for (const auto& cm : rep.per_class) {
        cells.push_back({cm.name, round_half_up(cm.f1)});
    }
    const std::size_t summary_start = cells.size();
    cells.push_back({"F1 macro", round_half_up(rep.f1_macro)});
    cells.push_back({"Acc", round_half_up(rep.accuracy)});
    cells.push_back({"AWC", round_half_up(rep.awc)});
    write_text_table(out, cells, {1, summary_start});
}

json plan_to_json(const OccurrencePlan& plan, const LabelsetTable& table, const BalanceParams& params) {
    if (plan.n_u.size() != table.num_rows()) {
        throw DimensionError("plan and table row counts differ");
    }
    json rows = json::array();
    for (std::size_t r = 0; r < table.num_rows(); ++r) {
        const auto& ls = table.rows()[r].labelset;
        json bits = json::array();
        for (const auto b : ls) {
            bits.push_back(static_cast<int>(b));
        }
        rows.push_back(json{{"labelset", bits},
                            {"n_o", table.rows()[r].count()},
                            {"n_u", plan.n_u[r]},
                            {"lower", plan.bounds.lower[r]},
                            {"upper", plan.bounds.upper[r]}});
    }
    return json{{"class_names", table.class_names()},
                {"strategy", to_string(plan.strategy)},
                {"seed", plan.seed},
                {"lambda", params.lambda},
                {"max_factor", params.max_factor},
                {"objective_value", plan.objective_value},
                {"rows", rows}};
}

namespace {

template <typename T>
T field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ParseError(std::string("plan is missing field '") + key + "'", 0);
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("plan field '") + key + "' has the wrong type: " + e.what(), 0);
    }
}

} // namespace

StoredPlan plan_from_json(const json& doc, const LabelsetTable& table) {
    StoredPlan out;
    const auto classes = field<std::vector<std::string>>(doc, "class_names");
    if (classes != table.class_names()) {
        throw ConsistencyError("plan classes differ from the dataset classes");
    }
    try {
        out.plan.strategy = parse_strategy(field<std::string>(doc, "strategy"));
    } catch (const ParameterError& e) {
        throw ParseError(std::string("plan ") + e.what(), 0);
    }
    out.plan.seed = field<std::uint64_t>(doc, "seed");
    out.params.lambda = field<double>(doc, "lambda");
    out.params.max_factor = field<double>(doc, "max_factor");
    out.plan.objective_value = field<double>(doc, "objective_value");

    const auto rows = field<json>(doc, "rows");
    if (!rows.is_array()) {
        throw ParseError("plan field 'rows' must be an array", 0);
    }
    if (rows.size() != table.num_rows()) {
        throw ConsistencyError("plan has " + std::to_string(rows.size()) + " labelset rows, dataset has " +
                               std::to_string(table.num_rows()));
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const auto bits = field<std::vector<int>>(row, "labelset");
        Labelset ls;
        for (const auto b : bits) {
            if (b != 0 && b != 1) {
                throw ParseError("plan labelset values must be 0 or 1", 0);
            }
            ls.push_back(static_cast<std::uint8_t>(b));
        }
        if (ls != table.rows()[r].labelset) {
            throw ConsistencyError("plan row " + std::to_string(r) + " labelset differs from the dataset");
        }
        if (field<Count>(row, "n_o") != table.rows()[r].count()) {
            throw ConsistencyError("plan row " + std::to_string(r) + " original count differs from the dataset");
        }
        out.plan.n_u.push_back(field<Count>(row, "n_u"));
        out.plan.bounds.lower.push_back(field<Count>(row, "lower"));
        out.plan.bounds.upper.push_back(field<Count>(row, "upper"));
    }
    if (!out.plan.bounds.contains(out.plan.n_u)) {
        throw ConsistencyError("plan occurrences lie outside their recorded bounds");
    }
    for (std::size_t r = 0; r < out.plan.n_u.size(); ++r) {
        if (out.plan.n_u[r] < table.rows()[r].count()) {
            throw ConsistencyError("plan row " + std::to_string(r) + " shrinks below its original count");
        }
    }
    return out;
}

} // namespace mlbalance
