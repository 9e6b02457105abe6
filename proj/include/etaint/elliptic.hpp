#pragma once

#include "etaint/types.hpp"

namespace etaint {

struct EllipticPoint {
    double modulus_k = 0.0;
    double parameter_x = 0.0;  // k^2
    double complement_x = 0.0; // 1 - k^2, kept separately to avoid cancellation
    double K = 0.0;
    double Kprime = 0.0;
    double nome_q = 0.0;
};

// Takes the modulus k, not the parameter k^2.
double elliptic_K(double k);

SeriesResult theta2(double q);
SeriesResult theta3(double q);
SeriesResult theta4(double q);

// Parameter point with pi K'/K = y.
EllipticPoint nome_invert(double y);

double gauss_2f1(double a, double b, double c, double z);
SeriesResult gauss_2f1_series(double a, double b, double c, double z);

}  // namespace etaint
