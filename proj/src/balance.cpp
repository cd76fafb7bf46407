#include "mlbalance/balance.hpp"

#include <cmath>
#include <limits>

#include "mlbalance/error.hpp"

namespace mlbalance {

void BalanceParams::validate() const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw ParameterError("lambda must be a finite value >= 0");
    }
    if (!(max_factor > 1.0) || !std::isfinite(max_factor)) {
        throw ParameterError("max_factor must be a finite value > 1");
    }
}

bool Bounds::contains(const CountVector& n_u) const noexcept {
    if (n_u.size() != lower.size() || n_u.size() != upper.size()) {
        return false;
    }
    for (std::size_t r = 0; r < n_u.size(); ++r) {
        if (n_u[r] < lower[r] || n_u[r] > upper[r]) {
            return false;
        }
    }
    return true;
}

std::uint64_t Bounds::domain_size(std::uint64_t cap) const noexcept {
    std::uint64_t total = 1;
    for (std::size_t r = 0; r < lower.size(); ++r) {
        const auto width = static_cast<std::uint64_t>(upper[r] - lower[r] + 1);
        if (total > (cap + 1) / width) {
            return cap + 1;
        }
        total *= width;
        if (total > cap) {
            return cap + 1;
        }
    }
    return total;
}

Bounds make_bounds(const CountVector& n_o, const BalanceParams& params) {
    params.validate();
    Bounds b;
    b.lower.reserve(n_o.size());
    b.upper.reserve(n_o.size());
    for (const auto n : n_o) {
        if (n < 1) {
            throw DomainError("original occurrence counts must be >= 1");
        }
        const double scaled = std::floor(params.max_factor * static_cast<double>(n));
        if (scaled >= static_cast<double>(std::numeric_limits<Count>::max() / 2)) {
            throw DomainError("upper bound overflows the count type");
        }
        b.lower.push_back(n);
        b.upper.push_back(static_cast<Count>(scaled));
    }
    return b;
}

double ratio_variance(const CountVector& n_u, const CountVector& n_o) {
    if (n_u.size() != n_o.size()) {
        throw DimensionError("n_u and n_o lengths differ");
    }
    if (n_u.empty()) {
        throw DimensionError("ratio variance of an empty vector");
    }
    const auto R = static_cast<double>(n_u.size());
    double sum = 0.0;
    for (std::size_t r = 0; r < n_u.size(); ++r) {
        if (n_o[r] == 0) {
            throw DomainError("n_o contains a zero entry");
        }
        sum += static_cast<double>(n_u[r]) / static_cast<double>(n_o[r]);
    }
    const double mean = sum / R;
    double ss = 0.0;
    for (std::size_t r = 0; r < n_u.size(); ++r) {
        const double d = static_cast<double>(n_u[r]) / static_cast<double>(n_o[r]) - mean;
        ss += d * d;
    }
    return ss / R;
}

double class_deviation(const CountVector& z) {
    if (z.empty()) {
        throw DimensionError("class occurrence vector is empty");
    }
    const auto L = static_cast<Count>(z.size());
    Count total = 0;
    for (const auto v : z) {
        total += v;
    }
    Count numerator = 0;
    for (const auto v : z) {
        const Count d = L * v - total;
        numerator += d < 0 ? -d : d;
    }
    return static_cast<double>(numerator) / static_cast<double>(L);
}

double objective_from_occurrences(const CountVector& z, const CountVector& n_u, const CountVector& n_o,
                                  double lambda) {
    return class_deviation(z) + lambda * ratio_variance(n_u, n_o);
}

double objective(const CountVector& n_u, const LabelsetTable& table, const CountVector& n_o,
                 const BalanceParams& params) {
    if (n_o.size() != table.num_rows()) {
        throw DimensionError("n_o has " + std::to_string(n_o.size()) + " entries for " +
                             std::to_string(table.num_rows()) + " labelset rows");
    }
    const auto z = class_occurrences(n_u, table);
    return objective_from_occurrences(z, n_u, n_o, params.lambda);
}

} // namespace mlbalance
