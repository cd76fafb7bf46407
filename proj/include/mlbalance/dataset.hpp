#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace mlbalance {

using Count = std::int64_t;
using CountVector = std::vector<Count>;

/// Binary label row. One byte per class, each 0 or 1.
using Labelset = std::vector<std::uint8_t>;

enum class InputFormat { csv, jsonl };

InputFormat parse_input_format(const std::string& name);

struct Sample {
    std::string id;
    std::optional<std::string> source;
    Labelset labels;
};

/// N samples by L binary classes. Validated on construction and immutable afterwards.
class LabelMatrix {
public:
    /// Throws EmptyInputError for zero classes or zero samples, DuplicateIdError for repeated ids,
    /// DimensionError / DomainError for malformed label rows.
    LabelMatrix(std::vector<std::string> class_names, std::vector<Sample> samples);

    [[nodiscard]] const std::vector<std::string>& class_names() const noexcept { return m_ClassNames; }
    [[nodiscard]] const std::vector<Sample>& samples() const noexcept { return m_Samples; }
    [[nodiscard]] std::size_t num_classes() const noexcept { return m_ClassNames.size(); }
    [[nodiscard]] std::size_t num_samples() const noexcept { return m_Samples.size(); }

private:
    std::vector<std::string> m_ClassNames;
    std::vector<Sample> m_Samples;
};

LabelMatrix load_label_matrix(const std::filesystem::path& path, InputFormat format);
LabelMatrix read_label_matrix(std::istream& in, InputFormat format);

struct LabelsetRow {
    Labelset labelset;
    std::vector<std::string> members;

    [[nodiscard]] Count count() const noexcept { return static_cast<Count>(members.size()); }
};

/// Samples grouped by distinct label vector. Rows appear in order of first occurrence.
class LabelsetTable {
public:
    LabelsetTable(std::vector<std::string> class_names, std::vector<LabelsetRow> rows);

    [[nodiscard]] const std::vector<std::string>& class_names() const noexcept { return m_ClassNames; }
    [[nodiscard]] const std::vector<LabelsetRow>& rows() const noexcept { return m_Rows; }
    [[nodiscard]] std::size_t num_rows() const noexcept { return m_Rows.size(); }
    [[nodiscard]] std::size_t num_classes() const noexcept { return m_ClassNames.size(); }

    /// The n_o vector: member count of every row.
    [[nodiscard]] CountVector original_counts() const;

private:
    std::vector<std::string> m_ClassNames;
    std::vector<LabelsetRow> m_Rows;
};

LabelsetTable group_labelsets(const LabelMatrix& matrix);

/// Per-class occurrences induced by giving row r `counts[r]` samples: z[c] = sum_r counts[r] * labelset_r[c].
CountVector class_occurrences(const CountVector& counts, const LabelsetTable& table);

inline constexpr const char* kDefaultSource = "default";

struct DistributionReport {
    std::vector<std::string> class_names;
    std::vector<std::string> sources;
    /// counts[c][s]: samples of source s with class c set.
    std::vector<CountVector> counts;
    /// Per class, summed over sources.
    CountVector totals;
    /// Samples per source.
    CountVector images;
    Count total_images = 0;
};

/// Per-class label counts. With `group_by_source` false every sample is reported under one column.
DistributionReport distribution_report(const LabelMatrix& matrix, bool group_by_source = true);

} // namespace mlbalance
