#pragma once

#include <string>

namespace mlbalance {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Rounds half-up to `digits` decimals and prints with exactly that many decimals.
///
/// The decision is made on the value's 15-significant-digit decimal form, so binary representation
/// error does not turn a displayed tie like 0.575 into a round-down.
std::string round_half_up(double value, int digits = 2);

} // namespace mlbalance
