#pragma once

#include "mlbalance/dataset.hpp"

namespace mlbalance {

struct BalanceParams {
    /// Weight of the growth-ratio variance penalty.
    double lambda = 70.0;
    /// Each labelset may grow to at most floor(max_factor * n_o).
    double max_factor = 10.0;

    /// Throws ParameterError unless lambda >= 0 and max_factor > 1.
    void validate() const;
};

/// Inclusive per-row search box n_o <= n_u <= floor(max_factor * n_o).
struct Bounds {
    CountVector lower;
    CountVector upper;

    [[nodiscard]] std::size_t size() const noexcept { return lower.size(); }
    [[nodiscard]] bool contains(const CountVector& n_u) const noexcept;
    /// Number of integer points in the box, saturating at `cap + 1`.
    [[nodiscard]] std::uint64_t domain_size(std::uint64_t cap) const noexcept;
};

Bounds make_bounds(const CountVector& n_o, const BalanceParams& params);

/// Population variance of n_u[r] / n_o[r].
double ratio_variance(const CountVector& n_u, const CountVector& n_o);

/// sum_c |z[c] - mean(z)|, with the mean over the class components of z.
/// Evaluated as sum_c |L * z[c] - sum(z)| / L so only the final division rounds.
double class_deviation(const CountVector& z);

/// Balancing objective: class_deviation(z(n_u)) + lambda * ratio_variance(n_u, n_o).
double objective(const CountVector& n_u, const LabelsetTable& table, const CountVector& n_o,
                 const BalanceParams& params);

/// Same objective from a precomputed class occurrence vector z = class_occurrences(n_u, table).
double objective_from_occurrences(const CountVector& z, const CountVector& n_u, const CountVector& n_o,
                                  double lambda);

} // namespace mlbalance
