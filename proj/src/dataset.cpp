#include "mlbalance/dataset.hpp"

#include <fstream>
#include <map>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "mlbalance/csv.hpp"
#include "mlbalance/error.hpp"

namespace mlbalance {

InputFormat parse_input_format(const std::string& name) {
    if (name == "csv") {
        return InputFormat::csv;
    }
    if (name == "jsonl") {
        return InputFormat::jsonl;
    }
    throw ParameterError("unknown input format '" + name + "' (expected csv or jsonl)");
}

LabelMatrix::LabelMatrix(std::vector<std::string> class_names, std::vector<Sample> samples)
    : m_ClassNames(std::move(class_names)), m_Samples(std::move(samples)) {
    if (m_ClassNames.empty()) {
        throw EmptyInputError("no label classes");
    }
    if (m_Samples.empty()) {
        throw EmptyInputError("no samples");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < m_Samples.size(); ++i) {
        const auto& s = m_Samples[i];
        if (s.labels.size() != m_ClassNames.size()) {
            throw DimensionError("sample '" + s.id + "' has " + std::to_string(s.labels.size()) +
                                 " labels, expected " + std::to_string(m_ClassNames.size()));
        }
        for (const auto v : s.labels) {
            if (v > 1) {
                throw DomainError("sample '" + s.id + "' has a non-binary label");
            }
        }
        if (!seen.insert(s.id).second) {
            throw DuplicateIdError(s.id, i + 1);
        }
    }
}

namespace {

std::uint8_t parse_binary_cell(const std::string& cell, std::size_t line) {
    if (cell == "0") {
        return 0;
    }
    if (cell == "1") {
        return 1;
    }
    throw ParseError("non-binary label cell '" + cell + "'", line);
}

LabelMatrix read_csv(std::istream& in) {
    auto doc = csv::read(in);
    const auto& header = doc.header.fields;
    if (header.empty() || header.front() != "id") {
        throw ParseError("first header column must be 'id'", doc.header.line);
    }
    const bool has_source = header.size() > 1 && header[1] == "source";
    const std::size_t first_label = has_source ? 2 : 1;
    std::vector<std::string> classes(header.begin() + static_cast<std::ptrdiff_t>(first_label), header.end());
    if (classes.empty()) {
        throw EmptyInputError("header declares no label columns");
    }
    std::set<std::string> unique_classes(classes.begin(), classes.end());
    if (unique_classes.size() != classes.size()) {
        throw ParseError("duplicate class column", doc.header.line);
    }

    std::vector<Sample> samples;
    samples.reserve(doc.rows.size());
    std::unordered_set<std::string> seen;
    for (auto& rec : doc.rows) {
        if (rec.fields.size() != header.size()) {
            throw ParseError("expected " + std::to_string(header.size()) + " columns, found " +
                                 std::to_string(rec.fields.size()),
                             rec.line);
        }
        Sample s;
        s.id = std::move(rec.fields[0]);
        if (s.id.empty()) {
            throw ParseError("empty sample id", rec.line);
        }
        if (!seen.insert(s.id).second) {
            throw DuplicateIdError(s.id, rec.line);
        }
        if (has_source && !rec.fields[1].empty()) {
            s.source = std::move(rec.fields[1]);
        }
        s.labels.reserve(classes.size());
        for (std::size_t c = first_label; c < rec.fields.size(); ++c) {
            s.labels.push_back(parse_binary_cell(rec.fields[c], rec.line));
        }
        samples.push_back(std::move(s));
    }
    if (samples.empty()) {
        throw EmptyInputError("no samples");
    }
    return LabelMatrix(std::move(classes), std::move(samples));
}

LabelMatrix read_jsonl(std::istream& in) {
    using nlohmann::json;
    std::vector<std::string> classes;
    bool have_classes = false;
    std::vector<Sample> samples;
    std::unordered_set<std::string> seen;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
        }
        if (!obj.is_object()) {
            throw ParseError("expected a JSON object", line_no);
        }
        if (!have_classes) {
            if (!obj.contains("#classes") || !obj["#classes"].is_array()) {
                throw ParseError("first line must be a {\"#classes\": [...]} header", line_no);
            }
            for (const auto& c : obj["#classes"]) {
                if (!c.is_string()) {
                    throw ParseError("class names must be strings", line_no);
                }
                classes.push_back(c.get<std::string>());
            }
            if (classes.empty()) {
                throw EmptyInputError("header declares no label classes");
            }
            have_classes = true;
            continue;
        }

        Sample s;
        if (!obj.contains("id") || !obj["id"].is_string()) {
            throw ParseError("missing string field 'id'", line_no);
        }
        s.id = obj["id"].get<std::string>();
        if (!seen.insert(s.id).second) {
            throw DuplicateIdError(s.id, line_no);
        }
        if (obj.contains("source") && !obj["source"].is_null()) {
            if (!obj["source"].is_string()) {
                throw ParseError("field 'source' must be a string", line_no);
            }
            s.source = obj["source"].get<std::string>();
        }
        if (!obj.contains("labels") || !obj["labels"].is_array()) {
            throw ParseError("missing array field 'labels'", line_no);
        }
        const auto& labels = obj["labels"];
        if (labels.size() != classes.size()) {
            throw ParseError("expected " + std::to_string(classes.size()) + " labels, found " +
                                 std::to_string(labels.size()),
                             line_no);
        }
        for (const auto& v : labels) {
            if (!v.is_number_integer() || (v.get<long long>() != 0 && v.get<long long>() != 1)) {
                throw ParseError("non-binary label value " + v.dump(), line_no);
            }
            s.labels.push_back(static_cast<std::uint8_t>(v.get<long long>()));
        }
        samples.push_back(std::move(s));
    }
    if (!have_classes) {
        throw EmptyInputError("missing #classes header line");
    }
    if (samples.empty()) {
        throw EmptyInputError("no samples");
    }
    return LabelMatrix(std::move(classes), std::move(samples));
}

} // namespace

LabelMatrix read_label_matrix(std::istream& in, InputFormat format) {
    return format == InputFormat::csv ? read_csv(in) : read_jsonl(in);
}

LabelMatrix load_label_matrix(const std::filesystem::path& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'", 0);
    }
    return read_label_matrix(in, format);
}

LabelsetTable::LabelsetTable(std::vector<std::string> class_names, std::vector<LabelsetRow> rows)
    : m_ClassNames(std::move(class_names)), m_Rows(std::move(rows)) {
    if (m_ClassNames.empty() || m_Rows.empty()) {
        throw EmptyInputError("labelset table needs at least one class and one row");
    }
    std::set<Labelset> distinct;
    for (const auto& row : m_Rows) {
        if (row.labelset.size() != m_ClassNames.size()) {
            throw DimensionError("labelset length does not match class count");
        }
        if (row.members.empty()) {
            throw DomainError("labelset row without members");
        }
        if (!distinct.insert(row.labelset).second) {
            throw DomainError("labelset rows must be pairwise distinct");
        }
    }
}

CountVector LabelsetTable::original_counts() const {
    CountVector n_o;
    n_o.reserve(m_Rows.size());
    for (const auto& row : m_Rows) {
        n_o.push_back(row.count());
    }
    return n_o;
}

LabelsetTable group_labelsets(const LabelMatrix& matrix) {
    std::map<Labelset, std::size_t> index;
    std::vector<LabelsetRow> rows;
    for (const auto& sample : matrix.samples()) {
        auto [it, inserted] = index.try_emplace(sample.labels, rows.size());
        if (inserted) {
            rows.push_back(LabelsetRow{sample.labels, {}});
        }
        rows[it->second].members.push_back(sample.id);
    }
    return LabelsetTable(matrix.class_names(), std::move(rows));
}

CountVector class_occurrences(const CountVector& counts, const LabelsetTable& table) {
    if (counts.size() != table.num_rows()) {
        throw DimensionError("count vector has " + std::to_string(counts.size()) + " entries for " +
                             std::to_string(table.num_rows()) + " labelset rows");
    }
    CountVector z(table.num_classes(), 0);
    for (std::size_t r = 0; r < counts.size(); ++r) {
        const auto& ls = table.rows()[r].labelset;
        for (std::size_t c = 0; c < z.size(); ++c) {
            z[c] += counts[r] * ls[c];
        }
    }
    return z;
}

DistributionReport distribution_report(const LabelMatrix& matrix, bool group_by_source) {
    DistributionReport rep;
    rep.class_names = matrix.class_names();
    std::map<std::string, std::size_t> source_index;
    std::vector<std::size_t> sample_source;
    sample_source.reserve(matrix.num_samples());
    for (const auto& s : matrix.samples()) {
        const std::string name = group_by_source ? s.source.value_or(kDefaultSource) : kDefaultSource;
        auto [it, inserted] = source_index.try_emplace(name, rep.sources.size());
        if (inserted) {
            rep.sources.push_back(name);
        }
        sample_source.push_back(it->second);
    }

    const std::size_t L = matrix.num_classes();
    const std::size_t S = rep.sources.size();
    rep.counts.assign(L, CountVector(S, 0));
    rep.images.assign(S, 0);
    for (std::size_t i = 0; i < matrix.num_samples(); ++i) {
        const auto src = sample_source[i];
        const auto& labels = matrix.samples()[i].labels;
        ++rep.images[src];
        for (std::size_t c = 0; c < L; ++c) {
            rep.counts[c][src] += labels[c];
        }
    }
    rep.totals.assign(L, 0);
    for (std::size_t c = 0; c < L; ++c) {
        for (std::size_t s = 0; s < S; ++s) {
            rep.totals[c] += rep.counts[c][s];
        }
    }
    for (const auto n : rep.images) {
        rep.total_images += n;
    }
    return rep;
}

} // namespace mlbalance
