#pragma once

#include <cmath>
#include <complex>
#include <random>

namespace etaint::testing {

// Fixed-seed generators for property tests; the seed is part of the test.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
};

inline double rel_diff(double a, double b) {
    const double m = std::fabs(b);
    return m > 0 ? std::fabs(a - b) / m : std::fabs(a);
}

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
    const double m = std::abs(b);
    return m > 0 ? std::abs(a - b) / m : std::abs(a);
}

}  // namespace etaint::testing
