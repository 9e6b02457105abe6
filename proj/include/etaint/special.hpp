#pragma once

#include "etaint/types.hpp"

namespace etaint {

Complex gamma(Complex z);
double gamma(double x);
Complex log_gamma(Complex z);

// psi^(j)(z) for 0 <= j <= 4.
Complex polygamma(int j, Complex z);
double polygamma(int j, double x);
inline double digamma(double x) { return polygamma(0, x); }

double hurwitz_zeta(double s, double a);
double hurwitz_zeta_sderiv(double s, double a);
// zeta(s,a) - zeta(s,b), finite at s = 1.
double hurwitz_zeta_diff(double s, double a, double b);

double dirichlet_beta(double s);
double catalan();

// Exact E_n; zero for odd n.
__int128 euler_number(int n);
double euler_number_d(int n);

double bernoulli_number(int n);  // 0 <= n <= 30
double bernoulli_poly(int n, double x);

// First Stieltjes constant gamma_1(a).
double stieltjes_gamma1(double a);

double erfc(double x);
// exp(x^2) erfc(x), stable for large x.
double erfcx(double x);

}  // namespace etaint
