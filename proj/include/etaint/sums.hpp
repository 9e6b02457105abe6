#pragma once

#include "etaint/types.hpp"

namespace etaint {

// int eta^2 = (2/sqrt3) Im C
SeriesResult const_C(const SeriesOptions& opt = {});
// (8/pi) sum_{n,m} cos cos / (2n(n+1)+2m(m+1)+1), the same integral
SeriesResult eta2_double_sum(const SeriesOptions& opt = {});

enum class C2Route { sech_series, gamma_series, closed_form, csc_sec };
SeriesResult const_C2(C2Route route, const SeriesOptions& opt = {});

// Corrected hyperbolic series for int x^2 eta^6.
SeriesResult const_C3(const SeriesOptions& opt = {});
// The same series with 2 cosh in place of 2 sinh in the last bracket term.
SeriesResult const_C3_stated(const SeriesOptions& opt = {});
// Stated csc^2/sec^2 series: (pi/8) sum (-1)^m [csc^2((1+i(2m+1)pi)/4) - sec^2(...)].
SeriesResult const_C2_cscsec_stated(const SeriesOptions& opt = {});

enum class C4Route { unilateral, bilateral, laplace_route };
SeriesResult const_C4(C4Route route, const SeriesOptions& opt = {});

SeriesResult const_C9(const SeriesOptions& opt = {});
SeriesResult const_C9_triple(const SeriesOptions& opt = {});

// 2^{j+1} j!/pi^{j+1} sum_{n,m} (-1)^{n+m}(2n+1)(2m+1)/D^{j+1} = int x^j eta^6
SeriesResult moment_double_sum(int j, const SeriesOptions& opt = {});

// Abel-regularized sum over a = 2 mod 6, b = 1 mod 4 of
// (-1)^{(a-2)/6} Im[(a+ib sqrt3)^6] / (a^2+3b^2).
SeriesResult winquist_sum(const SeriesOptions& opt = {});
// -180 sqrt3 eta(ix)^14 from the same lattice.
SeriesResult winquist_series(double x, const SeriesOptions& opt = {});

SeriesResult partial_fraction_const(const SeriesOptions& opt = {});
double partial_fraction_closed();

enum class WeylKac { eta8_16, eta24_96 };
SeriesResult weylkac_sum(WeylKac which, double x, const SeriesOptions& opt = {});

// sum q^{n^2}/(q;q)_n^2 and sum z^n q^{n^2}/((q;q)_n (zq;q)_n)
SeriesResult durfee_sum(double q, const SeriesOptions& opt = {});
SeriesResult durfee_sum_z(double z, double q, const SeriesOptions& opt = {});
// 1/(zq;q)_inf
double inverse_q_product(double z, double q);

}  // namespace etaint
