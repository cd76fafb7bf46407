#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "mlbalance/optimizer.hpp"
#include "mlbalance/random.hpp"

namespace mlbalance {

enum class AugOpKind {
    flip_lr,
    gaussian_blur,
    linear_contrast,
    additive_gaussian_noise,
    multiply,
    perspective_transform,
};

inline constexpr std::array<AugOpKind, 6> kAllAugOps{
    AugOpKind::flip_lr,  AugOpKind::gaussian_blur, AugOpKind::linear_contrast,
    AugOpKind::additive_gaussian_noise, AugOpKind::multiply, AugOpKind::perspective_transform,
};

std::string to_string(AugOpKind kind);

struct ParamRange {
    std::string name;
    double lo;
    double hi;
};

/// Parameter ranges of an op. flip_lr has none.
///   gaussian_blur            sigma  [0.5, 1.5]
///   linear_contrast          factor [0.8, 1.2]
///   additive_gaussian_noise  scale  [0.01, 0.05] (fraction of the value range)
///   multiply                 factor [0.8, 1.2]
///   perspective_transform    scale  [0.02, 0.08]
std::vector<ParamRange> param_ranges(AugOpKind kind);

/// One label-preserving augmentation with its parameters, keyed by name.
struct AugOp {
    AugOpKind kind = AugOpKind::flip_lr;
    std::map<std::string, double> params;

    /// Canonical key-sorted JSON object, e.g. {"sigma":0.73}.
    [[nodiscard]] std::string params_json() const;
};

/// Draws an op uniformly over the six kinds, then each parameter uniformly within its range.
AugOp sample_op(Rng& rng);

struct ManifestEntry {
    std::string sample_id;
    /// 1-based count of clones of this sample.
    std::uint32_t clone_index;
    AugOp op;
};

struct AugmentationManifest {
    std::vector<ManifestEntry> entries;
    std::uint64_t seed = 0;
};

/// Assigns n_u[r] - n_o[r] clones to the members of each row round-robin, starting at the first member.
/// Entries are ordered by row, then by assignment order. Ops come from one generator seeded with `seed`.
AugmentationManifest plan_augmentations(const LabelsetTable& table, const OccurrencePlan& plan, std::uint64_t seed);

/// LP-ROS baseline: rows with fewer members than the mean row size are raised to the mean, rounded half-up.
/// The plan's bounds span [n_o, n_u] since the baseline ignores the growth cap; its objective is reported
/// under `params`.
OccurrencePlan lp_ros_baseline(const LabelsetTable& table, const BalanceParams& params = {});

struct MergedDistribution {
    std::vector<std::string> class_names;
    CountVector before;
    CountVector after;
    Count images_before = 0;
    Count images_after = 0;
};

MergedDistribution merged_distribution(const LabelMatrix& matrix, const LabelsetTable& table,
                                       const OccurrencePlan& plan);

/// `sample_id,clone_index,op,params_json` rows with a header line.
void write_manifest_csv(std::ostream& out, const AugmentationManifest& manifest);

} // namespace mlbalance
