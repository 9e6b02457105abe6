#pragma once

#include <functional>
#include <string>

#include "etaint/types.hpp"

namespace etaint {

struct QuadResult {
    double value = 0.0;
    double abs_err_est = 0.0;
    long evals = 0;
    long segments = 0;
};

enum class WeightKind {
    unit,           // 1
    power,          // x^p1
    exp_decay,      // exp(-p1 x)
    exp_inverse,    // x^{-1/2} exp(-p1/x)
    cos_xy,         // cos(p1 x)
    cos_inverse,    // x^{-1/2} cos(p1/x)
    shifted_power,  // (x + p1)^p2
    log_over_x,     // ln(x)/x
    erfc_inverse,   // x^{-1/2} exp(p1/x) erfc(sqrt(p1/x))
    erfc_direct,    // exp(p1 x) erfc(sqrt(p1 x))
    hurwitz,        // zeta(p1, x)
};

struct WeightSpec {
    WeightKind kind = WeightKind::unit;
    double p1 = 0.0;
    double p2 = 0.0;
    // Extra factor x^extra_power multiplying any kind, so weights such as
    // exp(-xy)/x need no kind of their own.
    double extra_power = 0.0;

    static WeightSpec unit() { return {}; }
    static WeightSpec power(double j) { return {WeightKind::power, j}; }
    static WeightSpec exp_decay(double y) { return {WeightKind::exp_decay, y}; }
    static WeightSpec exp_inverse(double a) { return {WeightKind::exp_inverse, a}; }
    static WeightSpec cos_xy(double y) { return {WeightKind::cos_xy, y}; }
    static WeightSpec cos_inverse(double a) { return {WeightKind::cos_inverse, a}; }
    static WeightSpec shifted_power(double a, double p) { return {WeightKind::shifted_power, a, p}; }
    static WeightSpec log_over_x() { return {WeightKind::log_over_x}; }
    static WeightSpec erfc_inverse(double a) { return {WeightKind::erfc_inverse, a}; }
    static WeightSpec erfc_direct(double a) { return {WeightKind::erfc_direct, a}; }
    static WeightSpec hurwitz(double p) { return {WeightKind::hurwitz, p}; }

    double operator()(double x) const;
    void validate() const;
    std::string describe() const;
};

inline constexpr double kDefaultTol = 1e-10;
inline constexpr long kMaxSegments = 10000;

using Integrand = std::function<double(double)>;

// Adaptive G7/K15 on [a,b]; accepts when err <= max(tol, tol*|I|).
QuadResult integrate(const Integrand& f, double a, double b, double tol = kDefaultTol);

// int_0^inf f(x) eta(ix)^n dx; (0,1) is folded onto (1,inf) by x = 1/u.
QuadResult integrate_eta(const WeightSpec& w, int n, double tol = kDefaultTol);
// Same fold for an arbitrary weight function.
QuadResult integrate_eta_fn(const Integrand& f, int n, double tol = kDefaultTol);

QuadResult integrate_eta_moment(int n, double j, double tol = kDefaultTol);
// int_0^inf eta(iax)^3 eta(ibx)^3 dx
QuadResult integrate_eta_pair(double a, double b, double tol = kDefaultTol);
// int_0^inf eta(iax) eta(ibx) dx
QuadResult integrate_eta_product(double a, double b, double tol = kDefaultTol);
// int_0^inf eta(ix)^n dx with the argument scaled: eta(i c x)^n
QuadResult integrate_eta_scaled(int n, double c, double tol = kDefaultTol);

QuadResult integrate_unit(int n, double tol = kDefaultTol);
QuadResult integrate_segment(int j, int n, double tol = kDefaultTol);
// Unmapped integral over (0,1) with the raw series; slow, for cross-checks.
QuadResult integrate_unit_direct(int n, double tol = kDefaultTol);

enum class AuxKind { sech_moment, sech_tail, x_over_cosh };

// sech_moment: int_0^inf x^{2p-1} exp(-a x^2/pi) / cosh x dx   (params p, a)
// sech_tail:   int_z^inf x / cosh x dx                          (param z)
// x_over_cosh: int_0^inf x / cosh x dx
QuadResult integrate_auxiliary(AuxKind kind, double p = 0.0, double a = 0.0,
                               double tol = kDefaultTol);

// int_lo^inf g(x) dx for g dominated by C x^m e^{-rate x}.
QuadResult integrate_decaying(const Integrand& g, double lo, double rate,
                              double tol = kDefaultTol);

}  // namespace etaint
