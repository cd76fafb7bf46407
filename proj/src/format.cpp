#include "mlbalance/format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mlbalance {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (res.ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf.data(), res.ptr);
}

std::string round_half_up(double value, int digits) {
    if (!std::isfinite(value)) {
        return format_double(value);
    }
    const bool negative = std::signbit(value) && value != 0.0;
    // fixed-point text with enough digits to carry 15 significant ones
    std::array<char, 512> buf{};
    const double magnitude = std::fabs(value);
    const int int_digits = magnitude >= 1.0 ? static_cast<int>(std::floor(std::log10(magnitude))) + 1 : 0;
    const int frac = std::max(digits + 1, 15 - int_digits);
    std::snprintf(buf.data(), buf.size(), "%.*f", frac, magnitude);
    std::string text(buf.data());

    const auto dot = text.find('.');
    std::string int_part = text.substr(0, dot);
    std::string frac_part = dot == std::string::npos ? std::string() : text.substr(dot + 1);
    frac_part.resize(static_cast<std::size_t>(digits + 1), '0');
    const bool round_up = frac_part[static_cast<std::size_t>(digits)] >= '5';
    std::string kept = int_part + frac_part.substr(0, static_cast<std::size_t>(digits));

    if (round_up) {
        int i = static_cast<int>(kept.size()) - 1;
        while (i >= 0) {
            if (kept[static_cast<std::size_t>(i)] == '9') {
                kept[static_cast<std::size_t>(i)] = '0';
                --i;
            } else {
                ++kept[static_cast<std::size_t>(i)];
                break;
            }
        }
        if (i < 0) {
            kept.insert(kept.begin(), '1');
        }
    }
    const std::size_t split = kept.size() - static_cast<std::size_t>(digits);
    std::string out = kept.substr(0, split);
    if (out.empty()) {
        out = "0";
    }
    if (digits > 0) {
        out += "." + kept.substr(split);
    }
    if (negative && out.find_first_not_of("0.") != std::string::npos) {
        out.insert(out.begin(), '-');
    }
    return out;
}

} // namespace mlbalance
