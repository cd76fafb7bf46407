#include "mlbalance/cli.hpp"

#include <fstream>
#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlbalance/balance.hpp"
#include "mlbalance/format.hpp"
#include "mlbalance/metrics.hpp"
#include "mlbalance/planner.hpp"
#include "mlbalance/report.hpp"

namespace mlbalance::cli {

using nlohmann::json;

void RunConfig::validate() const {
    BalanceParams{lambda, max_factor}.validate();
    if (budget < 1) {
        throw ParameterError("budget must be >= 1");
    }
}

namespace {

std::string format_name(InputFormat f) { return f == InputFormat::csv ? "csv" : "jsonl"; }

OutputHeader make_header(const std::string& command, const RunConfig& config) {
    OutputHeader h;
    h.command = command;
    h.config = {
        {"input", config.input.generic_string()},
        {"format", format_name(config.format)},
        {"lambda", format_double(config.lambda)},
        {"max_factor", format_double(config.max_factor)},
        {"seed", std::to_string(config.seed)},
        {"budget", std::to_string(config.budget)},
        {"strategy", to_string(config.strategy)},
    };
    return h;
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'", ExitCode::validation);
    }
    body(out);
    out.flush();
    if (!out) {
        throw Error("write to '" + path.string() + "' failed", ExitCode::validation);
    }
}

void write_text_file(const std::filesystem::path& path, const OutputHeader& header,
                     const std::function<void(std::ostream&)>& body) {
    write_file(path, [&](std::ostream& out) {
        header.write_comment_block(out);
        body(out);
    });
}

void write_json_file(const std::filesystem::path& path, const OutputHeader& header, json doc) {
    doc["meta"] = header.to_json();
    write_file(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

void prepare_output(const RunConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out, ec);
    if (ec) {
        throw Error("cannot create output directory '" + config.out.string() + "': " + ec.message(),
                    ExitCode::validation);
    }
}

BalanceParams params_of(const RunConfig& config) { return BalanceParams{config.lambda, config.max_factor}; }

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'", 0);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what(), 0);
    }
}

} // namespace

void cmd_stats(const RunConfig& config) {
    const auto matrix = load_label_matrix(config.input, config.format);
    const auto rep = distribution_report(matrix, true);
    prepare_output(config);
    const auto header = make_header("stats", config);
    write_text_file(config.out / "distribution.csv", header, [&](std::ostream& o) { write_distribution_csv(o, rep); });
    write_text_file(config.out / "distribution.txt", header, [&](std::ostream& o) { write_distribution_text(o, rep); });
}

void cmd_balance(const RunConfig& config) {
    config.validate();
    const auto params = params_of(config);
    const auto matrix = load_label_matrix(config.input, config.format);
    const auto table = group_labelsets(matrix);
    OptimizeOptions options;
    options.seed = config.seed;
    options.budget = config.budget;
    options.strategy = config.strategy;
    if (config.strategy == Strategy::lp_ros) {
        throw ParameterError("use the 'baseline' command for lp-ros");
    }
    auto [plan, trace] = optimize(table, params, options);
    if (!plan.bounds.contains(plan.n_u)) {
        throw InfeasibleError("optimizer returned a plan outside its bounds");
    }
    prepare_output(config);
    const auto header = make_header("balance", config);
    write_json_file(config.out / "plan.json", header, plan_to_json(plan, table, params));
    write_text_file(config.out / "trace.csv", header, [&](std::ostream& o) { write_trace_csv(o, trace); });
}

void cmd_plan(const RunConfig& config, const std::filesystem::path& plan_path) {
    const auto matrix = load_label_matrix(config.input, config.format);
    const auto table = group_labelsets(matrix);
    const auto stored = plan_from_json(read_json_file(plan_path), table);
    const auto manifest = plan_augmentations(table, stored.plan, config.seed);
    const auto merged = merged_distribution(matrix, table, stored.plan);

    prepare_output(config);
    auto header = make_header("plan", config);
    header.config.emplace_back("plan", plan_path.generic_string());
    write_text_file(config.out / "manifest.csv", header, [&](std::ostream& o) { write_manifest_csv(o, manifest); });
    json sidecar{
        {"seed", manifest.seed},
        {"strategy", to_string(stored.plan.strategy)},
        {"lambda", stored.params.lambda},
        {"max_factor", stored.params.max_factor},
        {"entries", manifest.entries.size()},
    };
    write_json_file(config.out / "manifest.json", header, sidecar);
    write_text_file(config.out / "merged_distribution.csv", header,
                    [&](std::ostream& o) { write_merged_csv(o, merged); });
    write_text_file(config.out / "merged_distribution.txt", header,
                    [&](std::ostream& o) { write_merged_text(o, merged); });
}

void cmd_baseline(const RunConfig& config) {
    config.validate();
    const auto params = params_of(config);
    const auto matrix = load_label_matrix(config.input, config.format);
    const auto table = group_labelsets(matrix);
    const auto plan = lp_ros_baseline(table, params);
    prepare_output(config);
    auto cfg = config;
    cfg.strategy = Strategy::lp_ros;
    write_json_file(config.out / "plan.json", make_header("baseline", cfg), plan_to_json(plan, table, params));
}

void cmd_metrics(const RunConfig& config, const std::filesystem::path& pred_path, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw ParameterError("threshold must lie in [0, 1]");
    }
    const auto truth = load_label_matrix(config.input, config.format);
    const auto pred = load_predictions(pred_path);
    const auto scores = align_predictions(pred, truth);
    const auto report = metrics_report(binarize(scores, threshold), labels_of(truth), truth.class_names());

    prepare_output(config);
    OutputHeader header;
    header.command = "metrics";
    header.config = {
        {"truth", config.input.generic_string()},
        {"format", format_name(config.format)},
        {"pred", pred_path.generic_string()},
        {"threshold", format_double(threshold)},
    };
    write_json_file(config.out / "metrics.json", header, metrics_to_json(report));
    write_text_file(config.out / "metrics.txt", header, [&](std::ostream& o) { write_metrics_text(o, report); });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multi-label dataset balancing by integer optimization over labelset occurrences", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    RunConfig config;
    std::string format = "csv";
    std::string strategy = "hill";
    std::string plan_path;
    std::string pred_path;
    double threshold = kDetectionThreshold;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", config.input, "Label manifest (ground truth for 'metrics')")->required();
        sub->add_option("--format", format, "Input format: csv or jsonl")->capture_default_str();
        sub->add_option("--out", config.out, "Output directory")->capture_default_str();
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--lambda", config.lambda, "Weight of the growth-ratio variance term")->capture_default_str();
        sub->add_option("--max-factor", config.max_factor, "Upper bound factor on labelset growth")
            ->capture_default_str();
        sub->add_option("--seed", config.seed, "Random seed")->capture_default_str();
        sub->add_option("--budget", config.budget, "Maximum objective evaluations")->capture_default_str();
        sub->add_option("--strategy", strategy, "hill, anneal or exhaustive")->capture_default_str();
    };

    auto* stats = app.add_subcommand("stats", "Per-source, per-class label distribution");
    add_common(stats);
    auto* balance = app.add_subcommand("balance", "Optimize labelset occurrence counts");
    add_common(balance);
    add_search(balance);
    auto* plan = app.add_subcommand("plan", "Expand an occurrence plan into an augmentation manifest");
    add_common(plan);
    plan->add_option("--plan", plan_path, "plan.json written by 'balance' or 'baseline'")->required();
    plan->add_option("--seed", config.seed, "Seed for augmentation parameters")->capture_default_str();
    auto* baseline = app.add_subcommand("baseline", "LP-ROS baseline plan");
    add_common(baseline);
    baseline->add_option("--lambda", config.lambda, "Weight used when reporting the objective")->capture_default_str();
    baseline->add_option("--max-factor", config.max_factor, "Growth factor used when reporting")->capture_default_str();
    auto* metrics = app.add_subcommand("metrics", "F1, accuracy and AWC of predictions");
    add_common(metrics);
    metrics->add_option("--pred", pred_path, "Prediction scores CSV")->required();
    metrics->add_option("--threshold", threshold, "Positive detection threshold")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::ok);
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return static_cast<int>(ExitCode::ok);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }

    try {
        config.format = parse_input_format(format);
        config.strategy = parse_strategy(strategy);
        if (*stats) {
            cmd_stats(config);
        } else if (*balance) {
            cmd_balance(config);
        } else if (*plan) {
            cmd_plan(config, plan_path);
        } else if (*baseline) {
            cmd_baseline(config);
        } else if (*metrics) {
            cmd_metrics(config, pred_path, threshold);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(e.exit_code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::validation);
    }
    return static_cast<int>(ExitCode::ok);
}

} // namespace mlbalance::cli
