#include "mlbalance/metrics.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_map>

#include "mlbalance/csv.hpp"
#include "mlbalance/error.hpp"

namespace mlbalance {

namespace {

void require_same_shape(const BinaryGrid& pred, const BinaryGrid& truth) {
    if (!pred.same_shape(truth)) {
        throw DimensionError("prediction is " + std::to_string(pred.rows()) + "x" + std::to_string(pred.cols()) +
                             ", truth is " + std::to_string(truth.rows()) + "x" + std::to_string(truth.cols()));
    }
}

void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0, 1]");
    }
}

} // namespace

BinaryGrid labels_of(const LabelMatrix& matrix) {
    BinaryGrid g(matrix.num_samples(), matrix.num_classes());
    for (std::size_t i = 0; i < matrix.num_samples(); ++i) {
        const auto& labels = matrix.samples()[i].labels;
        for (std::size_t c = 0; c < labels.size(); ++c) {
            g(i, c) = labels[c];
        }
    }
    return g;
}

BinaryGrid binarize(const ScoreGrid& scores, double threshold) {
    BinaryGrid out(scores.rows(), scores.cols());
    for (std::size_t i = 0; i < scores.rows(); ++i) {
        for (std::size_t c = 0; c < scores.cols(); ++c) {
            const double s = scores(i, c);
            require_unit(s, "score");
            out(i, c) = s >= threshold ? 1 : 0;
        }
    }
    return out;
}

std::vector<ClassCounts> confusion_counts(const BinaryGrid& pred, const BinaryGrid& truth) {
    require_same_shape(pred, truth);
    std::vector<ClassCounts> counts(truth.cols());
    for (std::size_t i = 0; i < truth.rows(); ++i) {
        for (std::size_t c = 0; c < truth.cols(); ++c) {
            const bool p = pred(i, c) != 0;
            const bool t = truth(i, c) != 0;
            auto& cc = counts[c];
            if (p && t) {
                ++cc.tp;
            } else if (p) {
                ++cc.fp;
            } else if (t) {
                ++cc.fn;
            } else {
                ++cc.tn;
            }
        }
    }
    return counts;
}

double f1_score(const ClassCounts& counts) {
    // 2PR/(P+R) reduces to 2tp/(2tp+fp+fn); both are 0 exactly when tp == 0
    if (counts.tp == 0) {
        return 0.0;
    }
    return static_cast<double>(2 * counts.tp) / static_cast<double>(2 * counts.tp + counts.fp + counts.fn);
}

std::vector<double> f1_per_class(const BinaryGrid& pred, const BinaryGrid& truth) {
    std::vector<double> out;
    for (const auto& cc : confusion_counts(pred, truth)) {
        out.push_back(f1_score(cc));
    }
    return out;
}

double accuracy(const BinaryGrid& pred, const BinaryGrid& truth) {
    require_same_shape(pred, truth);
    const std::size_t slots = truth.rows() * truth.cols();
    if (slots == 0) {
        throw DimensionError("accuracy of an empty prediction set");
    }
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.rows(); ++i) {
        for (std::size_t c = 0; c < truth.cols(); ++c) {
            correct += (pred(i, c) != 0) == (truth(i, c) != 0) ? 1 : 0;
        }
    }
    return static_cast<double>(correct) / static_cast<double>(slots);
}

double awc(double f1_macro, double acc) {
    require_unit(f1_macro, "macro F1");
    require_unit(acc, "accuracy");
    return (f1_macro + acc) / 2.0;
}

MetricsReport metrics_report(const BinaryGrid& pred, const BinaryGrid& truth,
                             const std::vector<std::string>& class_names) {
    require_same_shape(pred, truth);
    if (class_names.size() != truth.cols()) {
        throw DimensionError("class name count does not match label columns");
    }
    MetricsReport rep;
    const auto counts = confusion_counts(pred, truth);
    double f1_sum = 0.0;
    for (std::size_t c = 0; c < counts.size(); ++c) {
        const double f1 = f1_score(counts[c]);
        rep.per_class.push_back(ClassMetrics{class_names[c], counts[c], f1});
        f1_sum += f1;
    }
    rep.f1_macro = f1_sum / static_cast<double>(counts.size());
    rep.accuracy = accuracy(pred, truth);
    rep.awc = awc(rep.f1_macro, rep.accuracy);
    return rep;
}

PredictionFile load_predictions(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'", 0);
    }
    const auto doc = csv::read(in);
    const auto& header = doc.header.fields;
    if (header.empty() || header.front() != "id") {
        throw ParseError("first header column must be 'id'", doc.header.line);
    }
    const std::size_t first = header.size() > 1 && header[1] == "source" ? 2 : 1;
    PredictionFile out;
    out.class_names.assign(header.begin() + static_cast<std::ptrdiff_t>(first), header.end());
    if (out.class_names.empty()) {
        throw EmptyInputError("prediction file declares no label columns");
    }
    if (doc.rows.empty()) {
        throw EmptyInputError("prediction file has no rows");
    }
    out.scores = ScoreGrid(doc.rows.size(), out.class_names.size());
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        const auto& rec = doc.rows[i];
        if (rec.fields.size() != header.size()) {
            throw ParseError("expected " + std::to_string(header.size()) + " columns, found " +
                                 std::to_string(rec.fields.size()),
                             rec.line);
        }
        out.ids.push_back(rec.fields[0]);
        for (std::size_t c = first; c < rec.fields.size(); ++c) {
            const auto& cell = rec.fields[c];
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
                throw ParseError("invalid score '" + cell + "'", rec.line);
            }
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ParseError("score '" + cell + "' outside [0, 1]", rec.line);
            }
            out.scores(i, c - first) = v;
        }
    }
    return out;
}

ScoreGrid align_predictions(const PredictionFile& pred, const LabelMatrix& truth) {
    if (pred.class_names != truth.class_names()) {
        throw AlignmentError("prediction and truth files have different class columns");
    }
    if (pred.ids.size() != truth.num_samples()) {
        throw AlignmentError("prediction file has " + std::to_string(pred.ids.size()) + " rows, truth has " +
                             std::to_string(truth.num_samples()));
    }
    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < pred.ids.size(); ++i) {
        if (!row_of.emplace(pred.ids[i], i).second) {
            throw AlignmentError("duplicate prediction id '" + pred.ids[i] + "'");
        }
    }
    ScoreGrid out(truth.num_samples(), truth.num_classes());
    for (std::size_t i = 0; i < truth.num_samples(); ++i) {
        const auto it = row_of.find(truth.samples()[i].id);
        if (it == row_of.end()) {
            throw AlignmentError("no prediction for sample '" + truth.samples()[i].id + "'");
        }
        for (std::size_t c = 0; c < truth.num_classes(); ++c) {
            out(i, c) = pred.scores(it->second, c);
        }
    }
    return out;
}

} // namespace mlbalance
