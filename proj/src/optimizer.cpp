#include "mlbalance/optimizer.hpp"

#include <cmath>
#include <stdexcept>

#include "mlbalance/error.hpp"
#include "mlbalance/format.hpp"
#include "mlbalance/random.hpp"

namespace mlbalance {

std::string to_string(Strategy s) {
    switch (s) {
    case Strategy::hill:
        return "hill";
    case Strategy::anneal:
        return "anneal";
    case Strategy::exhaustive:
        return "exhaustive";
    case Strategy::lp_ros:
        return "lp-ros";
    }
    return "unknown";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "hill") {
        return Strategy::hill;
    }
    if (name == "anneal") {
        return Strategy::anneal;
    }
    if (name == "exhaustive") {
        return Strategy::exhaustive;
    }
    if (name == "lp-ros") {
        return Strategy::lp_ros;
    }
    throw ParameterError("unknown strategy '" + name + "' (expected hill, anneal, exhaustive or lp-ros)");
}

bool ConvergenceTrace::is_monotone() const noexcept {
    for (std::size_t i = 1; i < steps.size(); ++i) {
        if (steps[i].best_objective > steps[i - 1].best_objective) {
            return false;
        }
    }
    return true;
}

namespace {

// Current point of a search with its class occurrences kept in sync incrementally (exact integers).
class SearchState {
public:
    SearchState(const LabelsetTable& table, const CountVector& n_o, double lambda, CountVector start)
        : m_Table(table), m_Original(n_o), m_Lambda(lambda), m_Point(std::move(start)),
          m_Occurrences(class_occurrences(m_Point, table)) {}

    [[nodiscard]] const CountVector& point() const noexcept { return m_Point; }
    [[nodiscard]] double value() const { return objective_from_occurrences(m_Occurrences, m_Point, m_Original, m_Lambda); }

    void set(std::size_t row, Count v) {
        const Count delta = v - m_Point[row];
        const auto& ls = m_Table.rows()[row].labelset;
        for (std::size_t c = 0; c < m_Occurrences.size(); ++c) {
            m_Occurrences[c] += delta * ls[c];
        }
        m_Point[row] = v;
    }

    void reset(CountVector point) {
        m_Point = std::move(point);
        m_Occurrences = class_occurrences(m_Point, m_Table);
    }

private:
    const LabelsetTable& m_Table;
    const CountVector& m_Original;
    double m_Lambda;
    CountVector m_Point;
    CountVector m_Occurrences;
};

class BestTracker {
public:
    void offer(const CountVector& point, double value) {
        if (!m_Set || value < m_Value || (value == m_Value && point < m_Point)) {
            m_Point = point;
            m_Value = value;
            m_Set = true;
        }
    }
    [[nodiscard]] const CountVector& point() const noexcept { return m_Point; }
    [[nodiscard]] double value() const noexcept { return m_Value; }

private:
    CountVector m_Point;
    double m_Value = 0.0;
    bool m_Set = false;
};

void require_feasible(const Bounds& bounds, const CountVector& point) {
    if (!bounds.contains(point)) {
        throw std::logic_error("optimizer visited a point outside the search box");
    }
}

void record(ConvergenceTrace& trace, BestTracker& best, const Bounds& bounds, const CountVector& point,
            double value) {
    require_feasible(bounds, point);
    best.offer(point, value);
    trace.steps.push_back(TraceStep{trace.steps.size(), value, best.value()});
}

CountVector random_point(const Bounds& bounds, Rng& rng) {
    CountVector p(bounds.size());
    for (std::size_t r = 0; r < p.size(); ++r) {
        p[r] = rng.uniform_int(bounds.lower[r], bounds.upper[r]);
    }
    return p;
}

std::vector<std::size_t> movable_rows(const Bounds& bounds) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < bounds.size(); ++r) {
        if (bounds.upper[r] > bounds.lower[r]) {
            rows.push_back(r);
        }
    }
    return rows;
}

// Picks a row and a different feasible value for it.
std::pair<std::size_t, Count> propose_move(const std::vector<std::size_t>& rows, const Bounds& bounds,
                                           const CountVector& current, Rng& rng) {
    const auto row = rows[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(rows.size()) - 1))];
    Count v = rng.uniform_int(bounds.lower[row], bounds.upper[row] - 1);
    if (v >= current[row]) {
        ++v;
    }
    return {row, v};
}

void run_hill(SearchState& state, const Bounds& bounds, std::uint64_t budget, Rng& rng, ConvergenceTrace& trace,
              BestTracker& best) {
    const auto rows = movable_rows(bounds);
    double current = state.value();
    record(trace, best, bounds, state.point(), current);
    if (rows.empty()) {
        return;
    }
    const std::uint64_t restart_period = std::max<std::uint64_t>(1, budget / 10);
    for (std::uint64_t k = 1; k < budget; ++k) {
        if (k % restart_period == 0) {
            state.reset(random_point(bounds, rng));
            current = state.value();
            record(trace, best, bounds, state.point(), current);
            continue;
        }
        const auto [row, v] = propose_move(rows, bounds, state.point(), rng);
        const Count old = state.point()[row];
        state.set(row, v);
        const double candidate = state.value();
        record(trace, best, bounds, state.point(), candidate);
        if (candidate < current) {
            current = candidate;
        } else {
            state.set(row, old);
        }
    }
}

void run_anneal(SearchState& state, const Bounds& bounds, std::uint64_t budget, Rng& rng,
                ConvergenceTrace& trace, BestTracker& best) {
    const auto rows = movable_rows(bounds);
    double current = state.value();
    record(trace, best, bounds, state.point(), current);
    if (rows.empty()) {
        return;
    }
    const double t0 = current / 10.0;
    for (std::uint64_t k = 1; k < budget; ++k) {
        const double temperature = t0 * std::pow(0.999, static_cast<double>(k));
        const auto [row, v] = propose_move(rows, bounds, state.point(), rng);
        const Count old = state.point()[row];
        state.set(row, v);
        const double candidate = state.value();
        record(trace, best, bounds, state.point(), candidate);
        const double delta = candidate - current;
        bool accept = delta <= 0.0;
        if (!accept && temperature > 0.0) {
            accept = rng.uniform01() < std::exp(-delta / temperature);
        }
        if (accept) {
            current = candidate;
        } else {
            state.set(row, old);
        }
    }
}

void run_exhaustive(SearchState& state, const Bounds& bounds, std::uint64_t cap, ConvergenceTrace* trace,
                    BestTracker& best) {
    const auto size = bounds.domain_size(cap);
    if (size > cap) {
        throw OracleTooLargeError("search box exceeds the exhaustive limit of " + std::to_string(cap) + " points");
    }
    state.reset(bounds.lower);
    const std::size_t R = bounds.size();
    while (true) {
        const double value = state.value();
        if (trace != nullptr) {
            record(*trace, best, bounds, state.point(), value);
        } else {
            best.offer(state.point(), value);
        }
        // odometer with the last row fastest, which visits points in lexicographic order
        std::size_t r = R;
        while (r > 0) {
            --r;
            if (state.point()[r] < bounds.upper[r]) {
                state.set(r, state.point()[r] + 1);
                break;
            }
            state.set(r, bounds.lower[r]);
            if (r == 0) {
                return;
            }
        }
    }
}

OccurrencePlan finish(const LabelsetTable& table, const BalanceParams& params, const CountVector& n_o, Bounds bounds,
                      const BestTracker& best, std::uint64_t seed, Strategy strategy) {
    OccurrencePlan plan;
    plan.n_u = best.point();
    plan.bounds = std::move(bounds);
    plan.objective_value = objective(plan.n_u, table, n_o, params);
    plan.seed = seed;
    plan.strategy = strategy;
    return plan;
}

} // namespace

std::pair<OccurrencePlan, ConvergenceTrace> optimize(const LabelsetTable& table, const BalanceParams& params,
                                                     const OptimizeOptions& options) {
    if (options.budget < 1) {
        throw ParameterError("budget must be >= 1");
    }
    if (options.strategy == Strategy::lp_ros) {
        throw ParameterError("lp-ros is a baseline, not a search strategy");
    }
    const auto n_o = table.original_counts();
    auto bounds = make_bounds(n_o, params);
    SearchState state(table, n_o, params.lambda, n_o);
    ConvergenceTrace trace;
    BestTracker best;
    Rng rng(options.seed);

    switch (options.strategy) {
    case Strategy::hill:
        run_hill(state, bounds, options.budget, rng, trace, best);
        break;
    case Strategy::anneal:
        run_anneal(state, bounds, options.budget, rng, trace, best);
        break;
    case Strategy::exhaustive:
        run_exhaustive(state, bounds, options.exhaustive_cap, &trace, best);
        break;
    case Strategy::lp_ros:
        break;
    }
    auto plan = finish(table, params, n_o, std::move(bounds), best, options.seed, options.strategy);
    return {std::move(plan), std::move(trace)};
}

OccurrencePlan exhaustive_optimum(const LabelsetTable& table, const BalanceParams& params, std::uint64_t cap) {
    const auto n_o = table.original_counts();
    auto bounds = make_bounds(n_o, params);
    SearchState state(table, n_o, params.lambda, n_o);
    BestTracker best;
    run_exhaustive(state, bounds, cap, nullptr, best);
    return finish(table, params, n_o, std::move(bounds), best, 0, Strategy::exhaustive);
}

void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace) {
    out << "iteration,candidate_objective,best_objective\n";
    for (const auto& s : trace.steps) {
        out << s.iteration << ',' << format_double(s.candidate_objective) << ',' << format_double(s.best_objective)
            << '\n';
    }
}

} // namespace mlbalance
