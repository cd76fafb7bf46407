#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mlbalance/dataset.hpp"

namespace fixtures {

// Per-source, per-class label counts of the merged AU training data (AffWild, 10% Emotionet, CK+, Actor
// study) and the number of images per source.
inline const std::vector<std::string> kAuTrainingClasses{"AU01", "AU02", "AU04", "AU06", "AU12", "AU15", "AU20", "AU25"};
inline const std::vector<std::string> kAuTrainingSources{"affwild", "emotionet", "ckplus", "actorstudy"};
inline const std::array<std::array<mlbalance::Count, 4>, 8> kAuTrainingCounts{{
    {47548, 589, 2964, 11079},
    {2271, 0, 1875, 8553},
    {32387, 676, 3753, 11393},
    {9290, 0, 2174, 6991},
    {22964, 0, 2475, 7798},
    {1537, 0, 1654, 2115},
    {3490, 0, 1406, 4704},
    {7463, 1780, 5359, 13573},
}};
inline const std::array<mlbalance::Count, 4> kAuTrainingImages{232842, 20160, 10724, 58825};

/// A label matrix reproducing those marginals: within a source, class c is set on the first
/// counts[c][s] images.
inline mlbalance::LabelMatrix au_training_matrix() {
    std::vector<mlbalance::Sample> samples;
    for (std::size_t s = 0; s < kAuTrainingSources.size(); ++s) {
        for (mlbalance::Count i = 0; i < kAuTrainingImages[s]; ++i) {
            mlbalance::Sample sample{kAuTrainingSources[s] + "_" + std::to_string(i), kAuTrainingSources[s],
                                     mlbalance::Labelset(kAuTrainingClasses.size())};
            for (std::size_t c = 0; c < kAuTrainingClasses.size(); ++c) {
                sample.labels[c] = i < kAuTrainingCounts[c][s] ? 1 : 0;
            }
            samples.push_back(std::move(sample));
        }
    }
    return mlbalance::LabelMatrix(kAuTrainingClasses, std::move(samples));
}

inline void write_matrix_csv(const std::filesystem::path& path, const mlbalance::LabelMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    out << "id,source";
    for (const auto& c : m.class_names()) {
        out << ',' << c;
    }
    out << '\n';
    for (const auto& s : m.samples()) {
        out << s.id << ',' << s.source.value_or("");
        for (const auto b : s.labels) {
            out << ',' << static_cast<int>(b);
        }
        out << '\n';
    }
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("mlbalance_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace fixtures
