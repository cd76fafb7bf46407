#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mlbalance/balance.hpp"

namespace mlbalance {

enum class Strategy { hill, anneal, exhaustive, lp_ros };

std::string to_string(Strategy s);
/// Accepts "hill", "anneal", "exhaustive" and "lp-ros".
Strategy parse_strategy(const std::string& name);

inline constexpr std::uint64_t kDefaultBudget = 20000;
inline constexpr std::uint64_t kDefaultExhaustiveCap = 1'000'000;

struct OccurrencePlan {
    CountVector n_u;
    Bounds bounds;
    double objective_value = 0.0;
    std::uint64_t seed = 0;
    Strategy strategy = Strategy::hill;
};

struct TraceStep {
    std::uint64_t iteration;
    double candidate_objective;
    double best_objective;
};

struct ConvergenceTrace {
    std::vector<TraceStep> steps;

    /// True when best_objective never increases from one step to the next.
    [[nodiscard]] bool is_monotone() const noexcept;
};

struct OptimizeOptions {
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    Strategy strategy = Strategy::hill;
    /// Largest box the exhaustive strategy will enumerate.
    std::uint64_t exhaustive_cap = kDefaultExhaustiveCap;
};

/// Searches the inclusive box [n_o, floor(max_factor * n_o)] for an occurrence vector with minimal
/// objective. The start point n_o is always the first evaluated candidate, and every evaluation
/// appends one trace step.
///
/// hill: random-restart hill climbing. Each step replaces one uniformly chosen row by a uniformly
/// chosen different feasible value and keeps it iff the objective strictly drops. Every budget/10
/// evaluations the walk restarts from a uniformly random feasible point.
///
/// anneal: same move with Metropolis acceptance at temperature T_k = T_0 * 0.999^k, T_0 = f(n_o)/10.
///
/// exhaustive: full enumeration in lexicographic order (ignores budget, bounded by exhaustive_cap).
///
/// Ties on the objective resolve to the lexicographically smallest vector.
std::pair<OccurrencePlan, ConvergenceTrace> optimize(const LabelsetTable& table, const BalanceParams& params,
                                                     const OptimizeOptions& options);

/// Global minimum over the full box. Throws OracleTooLargeError when the box holds more than `cap` points.
OccurrencePlan exhaustive_optimum(const LabelsetTable& table, const BalanceParams& params,
                                  std::uint64_t cap = kDefaultExhaustiveCap);

/// Writes `iteration,candidate_objective,best_objective` rows with a header line.
void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace);

} // namespace mlbalance
