#pragma once

#include <cstdint>
#include <random>

namespace mlbalance {

/// Seeded generator with platform-independent output.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++ standard. The standard
/// distributions are implementation-defined, so integer and real draws are derived here directly:
/// integers by rejection sampling on the raw 64-bit output, reals from its top 53 bits.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : m_Engine(seed) {}

    std::uint64_t next() { return m_Engine(); }

    /// Uniform integer in the closed range [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo);
        if (span == UINT64_MAX) {
            return static_cast<std::int64_t>(next());
        }
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
        std::uint64_t x = next();
        while (x > limit) {
            x = next();
        }
        return lo + static_cast<std::int64_t>(x % range);
    }

    /// Uniform real in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform real in [lo, hi].
    double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 m_Engine;
};

} // namespace mlbalance
