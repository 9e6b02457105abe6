#pragma once

#include <complex>
#include <cstdint>

namespace etaint {

using Complex = std::complex<double>;

// Outcome of a truncated series: the truncation error is at most tail_bound.
struct SeriesResult {
    Complex value{};
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;

    double re() const { return value.real(); }
};

struct SeriesOptions {
    std::int64_t max_terms = 1000000;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace etaint
