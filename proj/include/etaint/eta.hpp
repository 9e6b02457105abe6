#pragma once

#include "etaint/types.hpp"

namespace etaint {

struct TauPoint {
    Complex tau;
    double q_abs;

    explicit TauPoint(Complex t);
};

enum class EtaMethod { series12, series13_cubed, product, reduced };

struct EtaValue {
    Complex value;
    EtaMethod method;
    double tail_bound;
};

struct Reduction {
    TauPoint point;
    Complex multiplier;  // eta(original) = multiplier * eta(point)
    int steps;
};

EtaValue eta(const TauPoint& tau);
Complex eta(Complex tau);

// eta(ix)^3 through the triple-product series.
double eta_cubed(double x);
// eta(ix), real arithmetic only.
double eta_ix(double x);
double eta_power(int n, double x);

EtaValue eta_product(const TauPoint& tau, int nmax);

Reduction reduce(const TauPoint& tau);

// The series at ix itself, no inversion; slow and cancellation-prone near 0.
double eta_ix_unreduced(double x);
double eta_cubed_unreduced(double x);

// Two-sided pentagonal form, used only as a cross-check.
Complex eta_bilateral(Complex tau);

}  // namespace etaint
