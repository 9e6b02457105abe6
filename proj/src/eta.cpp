#include "etaint/eta.hpp"

#include <cmath>
#include <string>

#include "etaint/errors.hpp"

namespace etaint {

namespace {

constexpr double kReduceBelow = 0.25;

// chi_12(k) for odd k: the sign pattern of cos(k pi/6) * 2/sqrt3.
int chi12(int k) {
    switch (k % 12) {
        case 1: case 11: return 1;
        case 5: case 7: return -1;
        default: return 0;
    }
}

// sum_k chi12(k) exp(i pi tau k^2/12), the one-sided series.
EtaValue series12(Complex tau) {
    const double y = tau.imag();
    const double c = kPi * y / 12.0;
    Complex sum = 0.0;
    double tail = 0.0;
    for (int k = 1;; k += 2) {
        const int s = chi12(k);
        const double mag = std::exp(-c * k * k);
        if (s != 0) sum += static_cast<double>(s) * std::polar(mag, kPi * tau.real() * k * k / 12.0);
        const double next = std::exp(-c * (k + 2.0) * (k + 2.0));
        if (next <= 1e-17 * std::abs(sum)) {
            // later terms shrink at least by this ratio each step
            const double ratio = std::exp(-c * (4.0 * k + 12.0));
            tail = next / (1.0 - ratio);
            break;
        }
    }
    return {sum, EtaMethod::series12, tail};
}

// Real one-sided series at tau = ix with the Gaussian factors built by recurrence.
double series12_real(double x) {
    const double c = kPi * x / 12.0;
    const double step = std::exp(-8.0 * c);
    double term = std::exp(-c);       // k = 1
    double ratio = std::exp(-8.0 * c); // exp(-c((k+2)^2 - k^2)) at k = 1
    double sum = 0.0;
    for (int k = 1;; k += 2) {
        const int s = chi12(k);
        sum += s * term;
        term *= ratio;
        ratio *= step;
        if (term <= 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

// sum_n (-1)^n (2n+1) exp(-pi x (2n+1)^2/4)
double series13_real(double x) {
    const double c = kPi * x / 4.0;
    const double step = std::exp(-8.0 * c);
    double g = std::exp(-c);
    double ratio = std::exp(-8.0 * c);
    double sum = 0.0;
    for (int n = 0;; ++n) {
        const double term = (2.0 * n + 1.0) * g;
        sum += (n % 2 == 0) ? term : -term;
        g *= ratio;
        ratio *= step;
        if ((2.0 * n + 3.0) * g <= 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

void check_positive(double x, const char* what) {
    if (!(x > 0.0)) throw DomainError(std::string(what) + ": requires x > 0");
}

}  // namespace

TauPoint::TauPoint(Complex t) : tau(t), q_abs(std::exp(-2.0 * kPi * t.imag())) {
    if (!(t.imag() > 0.0)) throw DomainError("tau must lie in the upper half-plane");
}

Reduction reduce(const TauPoint& tp) {
    Complex tau = tp.tau;
    Complex m = 1.0;
    int steps = 0;
    for (; steps < 100000; ++steps) {
        const double n = std::round(tau.real());
        if (n != 0.0) {
            tau -= n;
            m *= std::polar(1.0, kPi * n / 12.0);
        }
        if (std::norm(tau) < 1.0 - 1e-15) {
            m /= std::sqrt(Complex(0.0, -1.0) * tau);
            tau = -1.0 / tau;
            continue;
        }
        break;
    }
    return {TauPoint(tau), m, steps};
}

EtaValue eta(const TauPoint& tp) {
    if (tp.tau.imag() >= kReduceBelow) return series12(tp.tau);
    const Reduction r = reduce(tp);
    EtaValue v = series12(r.point.tau);
    v.value *= r.multiplier;
    v.tail_bound *= std::abs(r.multiplier);
    v.method = EtaMethod::reduced;
    return v;
}

Complex eta(Complex tau) { return eta(TauPoint(tau)).value; }

double eta_ix(double x) {
    check_positive(x, "eta_ix");
    if (x < kReduceBelow) return series12_real(1.0 / x) / std::sqrt(x);
    return series12_real(x);
}

double eta_cubed(double x) {
    check_positive(x, "eta_cubed");
    if (x < kReduceBelow) return series13_real(1.0 / x) * std::pow(x, -1.5);
    return series13_real(x);
}

double eta_ix_unreduced(double x) {
    check_positive(x, "eta_ix_unreduced");
    return series12_real(x);
}

double eta_cubed_unreduced(double x) {
    check_positive(x, "eta_cubed_unreduced");
    return series13_real(x);
}

double eta_power(int n, double x) {
    if (n < 1 || n > 26) throw DomainError("eta_power: n must lie in [1,26]");
    check_positive(x, "eta_power");
    double v = 1.0;
    if (n >= 3) v = std::pow(eta_cubed(x), n / 3);
    if (n % 3 != 0) v *= std::pow(eta_ix(x), n % 3);
    return v;
}

EtaValue eta_product(const TauPoint& tp, int nmax) {
    if (tp.tau.imag() < 0.05) throw DomainError("eta_product: requires Im tau >= 0.05");
    if (nmax < 1) throw DomainError("eta_product: nmax must be positive");
    const Complex q = std::exp(Complex(0.0, 2.0 * kPi) * tp.tau);
    Complex prod = 1.0, qn = 1.0;
    for (int n = 1; n <= nmax; ++n) {
        qn *= q;
        prod *= 1.0 - qn;
    }
    const Complex v = std::exp(Complex(0.0, 2.0 * kPi / 24.0) * tp.tau) * prod;
    const double a = tp.q_abs;
    const double tail = std::abs(v) * std::expm1(std::pow(a, nmax + 1) / ((1.0 - a) * (1.0 - a)));
    return {v, EtaMethod::product, tail};
}

Complex eta_bilateral(Complex tau) {
    const TauPoint tp(tau);
    const double y = tau.imag();
    // exponents n(3n-1)/2 ~ 1.5 n^2; stop once exp(-2 pi y e) < 1e-18
    const int N = static_cast<int>(std::sqrt(42.0 / (2.0 * kPi * y * 1.5))) + 2;
    Complex sum = 0.0;
    for (int n = -N; n <= N; ++n) {
        const double e = n * (3.0 * n - 1.0) / 2.0;
        const Complex t = std::exp(Complex(0.0, 2.0 * kPi * e) * tau);
        sum += (n % 2 == 0) ? t : -t;
    }
    return std::exp(Complex(0.0, 2.0 * kPi / 24.0) * tau) * sum;
}

}  // namespace etaint
