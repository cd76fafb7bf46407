#pragma once

// Test-only reference computations. They follow the textbook definitions directly and share no code
// with the library's evaluation paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mlbalance/dataset.hpp"
#include "mlbalance/random.hpp"

namespace oracle {

using mlbalance::Count;
using mlbalance::CountVector;
using mlbalance::Labelset;

inline mlbalance::LabelsetTable make_table(const std::vector<Labelset>& labelsets, const CountVector& counts) {
    std::vector<std::string> classes;
    for (std::size_t c = 0; c < labelsets.front().size(); ++c) {
        classes.push_back("C" + std::to_string(c));
    }
    std::vector<mlbalance::LabelsetRow> rows;
    int next_id = 0;
    for (std::size_t r = 0; r < labelsets.size(); ++r) {
        mlbalance::LabelsetRow row{labelsets[r], {}};
        for (Count i = 0; i < counts[r]; ++i) {
            row.members.push_back("s" + std::to_string(next_id++));
        }
        rows.push_back(std::move(row));
    }
    return mlbalance::LabelsetTable(classes, rows);
}

inline long double objective(const CountVector& n_u, const std::vector<Labelset>& labelsets, const CountVector& n_o,
                             double lambda) {
    const std::size_t L = labelsets.front().size();
    std::vector<long double> z(L, 0.0L);
    for (std::size_t r = 0; r < n_u.size(); ++r) {
        for (std::size_t c = 0; c < L; ++c) {
            if (labelsets[r][c]) {
                z[c] += static_cast<long double>(n_u[r]);
            }
        }
    }
    long double mean_z = 0.0L;
    for (const auto v : z) {
        mean_z += v / static_cast<long double>(L);
    }
    long double deviation = 0.0L;
    for (const auto v : z) {
        deviation += std::fabs(v - mean_z);
    }
    // variance as E[x^2] - E[x]^2
    long double s1 = 0.0L;
    long double s2 = 0.0L;
    for (std::size_t r = 0; r < n_u.size(); ++r) {
        const long double x = static_cast<long double>(n_u[r]) / static_cast<long double>(n_o[r]);
        s1 += x;
        s2 += x * x;
    }
    const long double R = static_cast<long double>(n_u.size());
    const long double var = std::max(0.0L, s2 / R - (s1 / R) * (s1 / R));
    return deviation + static_cast<long double>(lambda) * var;
}

struct BruteForceResult {
    CountVector argmin;
    long double value = 0.0L;
};

/// Recursive enumeration of [n_o, floor(factor * n_o)]; keeps the first minimum within `tol` in
/// lexicographic order.
inline BruteForceResult brute_force(const std::vector<Labelset>& labelsets, const CountVector& n_o, double lambda,
                                    double factor = 10.0, long double tol = 1e-9L) {
    BruteForceResult best;
    bool have = false;
    CountVector cur(n_o.size());
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == n_o.size()) {
            const auto v = objective(cur, labelsets, n_o, lambda);
            if (!have || v < best.value - tol) {
                best = {cur, v};
                have = true;
            }
            return;
        }
        const auto hi = static_cast<Count>(std::floor(factor * static_cast<double>(n_o[r])));
        for (Count v = n_o[r]; v <= hi; ++v) {
            cur[r] = v;
            rec(r + 1);
        }
    };
    rec(0);
    return best;
}

/// Random instance with distinct non-empty labelsets. Every class is covered by at least one row.
struct Instance {
    std::vector<Labelset> labelsets;
    CountVector counts;
};

inline Instance random_instance(mlbalance::Rng& rng, std::size_t rows, std::size_t classes, Count max_count) {
    Instance inst;
    const std::uint64_t universe = (std::uint64_t{1} << classes) - 1;
    rows = std::min<std::size_t>(rows, universe);
    while (true) {
        inst.labelsets.clear();
        std::vector<std::uint64_t> used;
        while (inst.labelsets.size() < rows) {
            const auto code = static_cast<std::uint64_t>(rng.uniform_int(1, static_cast<std::int64_t>(universe)));
            if (std::find(used.begin(), used.end(), code) != used.end()) {
                continue;
            }
            used.push_back(code);
            Labelset ls(classes);
            for (std::size_t c = 0; c < classes; ++c) {
                ls[c] = static_cast<std::uint8_t>((code >> c) & 1U);
            }
            inst.labelsets.push_back(ls);
        }
        std::uint64_t covered = 0;
        for (const auto code : used) {
            covered |= code;
        }
        if (covered == universe) {
            break;
        }
    }
    inst.counts.clear();
    for (std::size_t r = 0; r < rows; ++r) {
        inst.counts.push_back(rng.uniform_int(1, max_count));
    }
    return inst;
}

} // namespace oracle
