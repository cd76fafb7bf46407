#include "mlbalance/planner.hpp"

#include <json.hpp>

#include "mlbalance/csv.hpp"
#include "mlbalance/error.hpp"

namespace mlbalance {

std::string to_string(AugOpKind kind) {
    switch (kind) {
    case AugOpKind::flip_lr:
        return "flip_lr";
    case AugOpKind::gaussian_blur:
        return "gaussian_blur";
    case AugOpKind::linear_contrast:
        return "linear_contrast";
    case AugOpKind::additive_gaussian_noise:
        return "additive_gaussian_noise";
    case AugOpKind::multiply:
        return "multiply";
    case AugOpKind::perspective_transform:
        return "perspective_transform";
    }
    return "unknown";
}

std::vector<ParamRange> param_ranges(AugOpKind kind) {
    switch (kind) {
    case AugOpKind::flip_lr:
        return {};
    case AugOpKind::gaussian_blur:
        return {{"sigma", 0.5, 1.5}};
    case AugOpKind::linear_contrast:
        return {{"factor", 0.8, 1.2}};
    case AugOpKind::additive_gaussian_noise:
        return {{"scale", 0.01, 0.05}};
    case AugOpKind::multiply:
        return {{"factor", 0.8, 1.2}};
    case AugOpKind::perspective_transform:
        return {{"scale", 0.02, 0.08}};
    }
    return {};
}

std::string AugOp::params_json() const {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [key, value] : params) {
        obj[key] = value;
    }
    return obj.dump();
}

AugOp sample_op(Rng& rng) {
    AugOp op;
    op.kind = kAllAugOps[static_cast<std::size_t>(rng.uniform_int(0, kAllAugOps.size() - 1))];
    for (const auto& range : param_ranges(op.kind)) {
        op.params[range.name] = rng.uniform_real(range.lo, range.hi);
    }
    return op;
}

AugmentationManifest plan_augmentations(const LabelsetTable& table, const OccurrencePlan& plan, std::uint64_t seed) {
    if (plan.n_u.size() != table.num_rows()) {
        throw DimensionError("plan has " + std::to_string(plan.n_u.size()) + " rows, table has " +
                             std::to_string(table.num_rows()));
    }
    AugmentationManifest manifest;
    manifest.seed = seed;
    Rng rng(seed);
    for (std::size_t r = 0; r < table.num_rows(); ++r) {
        const auto& members = table.rows()[r].members;
        const Count extra = plan.n_u[r] - table.rows()[r].count();
        if (extra < 0) {
            throw DomainError("plan shrinks labelset row " + std::to_string(r));
        }
        const auto m = static_cast<Count>(members.size());
        for (Count j = 0; j < extra; ++j) {
            manifest.entries.push_back(ManifestEntry{
                members[static_cast<std::size_t>(j % m)],
                static_cast<std::uint32_t>(j / m + 1),
                sample_op(rng),
            });
        }
    }
    return manifest;
}

OccurrencePlan lp_ros_baseline(const LabelsetTable& table, const BalanceParams& params) {
    const auto n_o = table.original_counts();
    const auto R = static_cast<Count>(n_o.size());
    Count total = 0;
    for (const auto n : n_o) {
        total += n;
    }
    // round-half-up of total / R in integer arithmetic
    const Count target = (2 * total + R) / (2 * R);

    OccurrencePlan plan;
    plan.n_u = n_o;
    for (std::size_t r = 0; r < n_o.size(); ++r) {
        if (n_o[r] * R < total && target > n_o[r]) {
            plan.n_u[r] = target;
        }
    }
    plan.bounds.lower = n_o;
    plan.bounds.upper = plan.n_u;
    plan.objective_value = objective(plan.n_u, table, n_o, params);
    plan.seed = 0;
    plan.strategy = Strategy::lp_ros;
    return plan;
}

MergedDistribution merged_distribution(const LabelMatrix& matrix, const LabelsetTable& table,
                                       const OccurrencePlan& plan) {
    if (matrix.class_names() != table.class_names()) {
        throw ConsistencyError("label matrix and labelset table have different classes");
    }
    const auto n_o = table.original_counts();
    MergedDistribution out;
    out.class_names = table.class_names();
    out.before = class_occurrences(n_o, table);
    out.after = class_occurrences(plan.n_u, table);
    for (std::size_t r = 0; r < n_o.size(); ++r) {
        out.images_before += n_o[r];
        out.images_after += plan.n_u[r];
    }
    if (out.images_before != static_cast<Count>(matrix.num_samples())) {
        throw ConsistencyError("labelset table does not partition the label matrix");
    }
    return out;
}

void write_manifest_csv(std::ostream& out, const AugmentationManifest& manifest) {
    out << "sample_id,clone_index,op,params_json\n";
    for (const auto& e : manifest.entries) {
        out << csv::escape(e.sample_id) << ',' << e.clone_index << ',' << to_string(e.op.kind) << ','
            << csv::escape(e.op.params_json()) << '\n';
    }
}

} // namespace mlbalance
