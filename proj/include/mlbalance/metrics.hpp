#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mlbalance/dataset.hpp"

namespace mlbalance {

inline constexpr double kDetectionThreshold = 0.5;

/// Row-major N x L matrix.
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, T fill = T{}) : m_Rows(rows), m_Cols(cols), m_Data(rows * cols, fill) {}

    [[nodiscard]] std::size_t rows() const noexcept { return m_Rows; }
    [[nodiscard]] std::size_t cols() const noexcept { return m_Cols; }
    T& operator()(std::size_t r, std::size_t c) { return m_Data[r * m_Cols + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return m_Data[r * m_Cols + c]; }
    [[nodiscard]] bool same_shape(const auto& other) const noexcept {
        return m_Rows == other.rows() && m_Cols == other.cols();
    }

private:
    std::size_t m_Rows = 0;
    std::size_t m_Cols = 0;
    std::vector<T> m_Data;
};

using ScoreGrid = Grid<double>;
using BinaryGrid = Grid<std::uint8_t>;

BinaryGrid labels_of(const LabelMatrix& matrix);

/// 1 where score >= threshold. Throws DomainError for scores outside [0, 1].
BinaryGrid binarize(const ScoreGrid& scores, double threshold = kDetectionThreshold);

struct ClassCounts {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;
};

std::vector<ClassCounts> confusion_counts(const BinaryGrid& pred, const BinaryGrid& truth);

/// F1 from one class's counts; 0 whenever precision, recall or F1 has a zero denominator.
double f1_score(const ClassCounts& counts);

std::vector<double> f1_per_class(const BinaryGrid& pred, const BinaryGrid& truth);

/// Fraction of matching label slots over all N * L slots.
double accuracy(const BinaryGrid& pred, const BinaryGrid& truth);

/// Mean of macro F1 and accuracy. Throws DomainError outside [0, 1].
double awc(double f1_macro, double acc);

struct ClassMetrics {
    std::string name;
    ClassCounts counts;
    double f1 = 0.0;
};

struct MetricsReport {
    std::vector<ClassMetrics> per_class;
    double f1_macro = 0.0;
    double accuracy = 0.0;
    double awc = 0.0;
};

MetricsReport metrics_report(const BinaryGrid& pred, const BinaryGrid& truth, const std::vector<std::string>& class_names);

/// Prediction file in the label manifest CSV schema, with cells allowed to be reals in [0, 1].
struct PredictionFile {
    std::vector<std::string> class_names;
    std::vector<std::string> ids;
    ScoreGrid scores;
};

PredictionFile load_predictions(const std::filesystem::path& path);

/// Reorders `pred` to the sample order of `truth`. Throws AlignmentError when ids or classes differ.
ScoreGrid align_predictions(const PredictionFile& pred, const LabelMatrix& truth);

} // namespace mlbalance
