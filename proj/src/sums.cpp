#include "etaint/sums.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "etaint/errors.hpp"
#include "etaint/special.hpp"

namespace etaint {

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct Budget {
    std::int64_t used = 0;
    std::int64_t max;
    explicit Budget(const SeriesOptions& o) : max(o.max_terms) {}
    void take(std::int64_t k = 1) {
        used += k;
        if (used > max) throw ConvergenceError("series: max_terms exhausted");
    }
};

double sech(double x) {
    const double e = std::exp(-std::fabs(x));
    return 2.0 * e / (1.0 + e * e);
}

// sum_{t>=0} (-1)^t a(t) by repeated averaging of the partial sums
// S_N..S_{N+p}; err receives the change made by the last averaging level
// plus a rounding allowance.
double alternating_sum(const std::function<double(long)>& a, long N, int p, Budget& b, double& err) {
    double S = 0.0, mass = 0.0;
    for (long t = 0; t < N; ++t) {
        const double v = a(t);
        S += (t % 2 == 0) ? v : -v;
        mass += std::fabs(v);
    }
    std::vector<double> s(p + 1);
    for (int i = 0; i <= p; ++i) {
        const long t = N + i;
        const double v = a(t);
        S += (t % 2 == 0) ? v : -v;
        mass += std::fabs(v);
        s[i] = S;
    }
    b.take(N + p + 1);
    double prev = s[0];
    for (int level = 1; level <= p; ++level) {
        prev = s[0];
        for (int i = 0; i + level <= p; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    }
    err = std::fabs(s[0] - prev) + 2.0 * std::numeric_limits<double>::epsilon() * mass;
    return s[0];
}

// sum_{k>=0} sign(k) g(k) for exponentially decaying |g(k)| <= env(k), env
// with ratio below `ratio`; stops when env(k) falls under 1e-18 of the sum.
SeriesResult decaying_sum(const std::function<double(long)>& g, const std::function<double(long)>& env,
                          double ratio, Budget& b, long k0 = 0) {
    SeriesResult r;
    double sum = 0.0;
    for (long k = k0;; ++k) {
        b.take();
        sum += g(k);
        const double next = env(k + 1);
        if (next <= 1e-18 * std::fabs(sum) || next == 0.0) {
            r.tail_bound = next / (1.0 - ratio);
            break;
        }
    }
    r.value = sum;
    r.terms_used = b.used;
    return r;
}

}  // namespace

SeriesResult const_C(const SeriesOptions& opt) {
    Budget b(opt);
    SeriesResult r;
    Complex sum = 0.0;
    for (long m = 0;; ++m) {
        b.take();
        const double k = 2.0 * m + 1.0;
        const Complex w = Complex(-5.0, k) * (kPi / 12.0);
        sum += std::cos(k * kPi / 6.0) / k * (1.0 / std::tan(w) + std::tan(w));
        // |cot w + tan w| = 2/|sin 2w| <= 2/sinh(k pi/6)
        const double kn = k + 2.0;
        const double next = 2.0 / (kn * std::sinh(kn * kPi / 6.0));
        if (next < 1e-18 * std::abs(sum)) {
            r.tail_bound = next / (1.0 - std::exp(-kPi / 3.0));
            break;
        }
    }
    r.value = sum;
    r.terms_used = b.used;
    return r;
}

SeriesResult eta2_double_sum(const SeriesOptions& opt) {
    Budget b(opt);
    // cos((2n+1)pi/6) has period 6 in n: sqrt3/2 (-1)^t at n = 3t, zero at
    // 3t+1, -sqrt3/2 (-1)^t at 3t+2.
    auto cosw = [](long n) {
        const long r = n % 3, t = n / 3;
        const double s = (t % 2 == 0) ? 1.0 : -1.0;
        return r == 0 ? s * kSqrt3 / 2 : (r == 2 ? -s * kSqrt3 / 2 : 0.0);
    };
    double sum = 0.0, accel_err = 0.0;
    // the inner sum decays like e^{-pi (2m+1)/(2 sqrt3)}
    for (long m = 0; (m + 1.0) * std::exp(-kPi * (2.0 * m + 1) / (2 * kSqrt3)) > 1e-19; ++m) {
        const double cm = cosw(m);
        if (cm == 0.0) continue;
        const double A = 2.0 * m * (m + 1) + 1.0;
        auto f = [A](double n) { return 1.0 / (2.0 * n * (n + 1) + A); };
        auto block = [&](long t) { return kSqrt3 / 2 * (f(3.0 * t) - f(3.0 * t + 2)); };
        double e = 0.0;
        const double inner = alternating_sum(block, static_cast<long>(4 * std::sqrt(A)) + 50, 20, b, e);
        sum += cm * inner;
        accel_err += std::fabs(cm) * e;
    }
    SeriesResult r;
    r.value = 8.0 / kPi * sum;
    r.tail_bound = 8.0 / kPi * accel_err;
    r.terms_used = b.used;
    return r;
}

SeriesResult const_C2(C2Route route, const SeriesOptions& opt) {
    Budget b(opt);
    auto env = [](long m) { const double k = 2.0 * m + 1; return 2.0 * k * std::exp(-k * kPi / 2); };
    const double ratio = 3.0 * std::exp(-kPi);
    switch (route) {
        case C2Route::sech_series:
            return decaying_sum([](long m) {
                const double k = 2.0 * m + 1;
                return (m % 2 == 0 ? 1.0 : -1.0) * k * sech(k * kPi / 2);
            }, env, ratio, b);
        case C2Route::gamma_series:
            return decaying_sum([](long m) {
                const double k = 2.0 * m + 1;
                const Complex g = gamma(Complex(0.5, 0.5 * k)) * gamma(Complex(0.5, -0.5 * k));
                return (m % 2 == 0 ? 1.0 : -1.0) * k * g.real() / kPi;
            }, env, ratio, b);
        case C2Route::closed_form: {
            SeriesResult r;
            const double q = gamma(0.25) / gamma(0.75);
            r.value = q * q / (8.0 * kPi);
            return r;
        }
        case C2Route::csc_sec:
            // (i/4) sum (-1)^m [csc^2 w - sec^2 w], w = pi(1 + i(2m+1))/4
            return decaying_sum([](long m) {
                const double k = 2.0 * m + 1;
                const Complex w = Complex(1.0, k) * (kPi / 4.0);
                const Complex s = std::sin(w), c = std::cos(w);
                const Complex v = Complex(0.0, 0.25) * (1.0 / (s * s) - 1.0 / (c * c));
                return (m % 2 == 0 ? 1.0 : -1.0) * v.real();
            }, [](long m) { return 4.0 * std::exp(-(2.0 * m + 1) * kPi / 2); }, std::exp(-kPi), b);
    }
    throw DomainError("const_C2: unknown route");
}

SeriesResult const_C2_cscsec_stated(const SeriesOptions& opt) {
    Budget b(opt);
    SeriesResult r;
    Complex sum = 0.0;
    for (long m = 0; m < 200; ++m) {
        b.take();
        const Complex w = Complex(1.0, (2.0 * m + 1) * kPi) / 4.0;
        const Complex s = std::sin(w), c = std::cos(w);
        const Complex v = 1.0 / (s * s) - 1.0 / (c * c);
        sum += (m % 2 == 0 ? 1.0 : -1.0) * v;
        const double next = 8.0 * std::exp(-(2.0 * m + 3) * kPi / 2);
        if (next < 1e-18 * std::abs(sum)) {
            r.tail_bound = kPi / 8.0 * next / (1.0 - std::exp(-kPi));
            break;
        }
    }
    r.value = kPi / 8.0 * sum;
    r.terms_used = b.used;
    return r;
}

namespace {

SeriesResult c3_series(bool stated, const SeriesOptions& opt) {
    Budget b(opt);
    auto term = [stated](long m) {
        const double k = 2.0 * m + 1;
        const double s = sech(k * kPi / 2);
        const double last = stated ? 2.0 * std::cosh(k * kPi) : 2.0 * std::sinh(k * kPi);
        return (m % 2 == 0 ? 1.0 : -1.0) * s * s * s * (k * kPi * (-3.0 + std::cosh(k * kPi)) + last) / (k * k);
    };
    auto env = [](long m) {
        const double k = 2.0 * m + 1;
        return 4.0 * std::exp(-k * kPi / 2) * (k * kPi + 2.0) / (k * k);
    };
    SeriesResult r = decaying_sum(term, env, std::exp(-kPi), b);
    r.value /= 2.0 * kPi;
    r.tail_bound /= 2.0 * kPi;
    return r;
}

}  // namespace

SeriesResult const_C3(const SeriesOptions& opt) { return c3_series(false, opt); }
SeriesResult const_C3_stated(const SeriesOptions& opt) { return c3_series(true, opt); }

SeriesResult const_C4(C4Route route, const SeriesOptions& opt) {
    Budget b(opt);
    const double c = kPi / (2.0 * kSqrt3);
    SeriesResult r;
    double sum = 0.0;
    long N = 0;
    // |sech(kc)| <= 2 e^{-kc}; stop once the next |k| exceeds 45/c
    const long kmax = static_cast<long>(45.0 / c) + 2;
    switch (route) {
        case C4Route::unilateral:
            for (long n = 0; 2 * n + 1 <= kmax; ++n, ++N) {
                const double k = 2.0 * n + 1;
                sum += std::cos(k * kPi / 6) * sech(k * c);
            }
            b.take(N);
            sum *= 2.0 / kSqrt3;
            break;
        case C4Route::bilateral:
        case C4Route::laplace_route: {
            const long nm = kmax / 6 + 1;
            for (long n = -nm; n <= nm; ++n, ++N) {
                const double sgn = (std::labs(n) % 2 == 0) ? 1.0 : -1.0;
                if (route == C4Route::bilateral) {
                    sum += sgn * sech((6.0 * n + 1) * c);
                } else {
                    const double arg = 0.5 * kPi * std::sqrt(4.0 * n * (3.0 * n - 1) + 1.0 / 3.0);
                    sum += sgn * sech(arg);
                }
            }
            b.take(N);
            break;
        }
    }
    r.value = sum;
    r.tail_bound = 4.0 * std::exp(-(kmax + 1) * c) / (1.0 - std::exp(-2.0 * c));
    r.terms_used = b.used;
    return r;
}

SeriesResult const_C9(const SeriesOptions& opt) {
    Budget b(opt);
    // summand <= (2m+1)(2n+1) 2 e^{-pi max(m,n)}; square side 20 leaves < 1e-21
    constexpr long N = 20;
    double sum = 0.0;
    for (long m = 0; m <= N; ++m)
        for (long n = 0; n <= N; ++n) {
            const double r2 = 2.0 * m * (m + 1) + 2.0 * n * (n + 1) + 1.0;
            const double t = (2.0 * m + 1) * (2.0 * n + 1) * sech(std::sqrt(r2) * kPi / std::sqrt(2.0));
            sum += ((m + n) % 2 == 0) ? t : -t;
        }
    b.take((N + 1) * (N + 1));
    double tail = 0.0;
    for (long k = N + 1; k <= N + 60; ++k) tail += 2.0 * std::pow(2.0 * k + 1, 3) * 2.0 * std::exp(-kPi * k);
    SeriesResult r;
    r.value = sum;
    r.tail_bound = tail;
    r.terms_used = b.used;
    return r;
}

SeriesResult const_C9_triple(const SeriesOptions& opt) {
    Budget b(opt);
    constexpr long N = 20;
    double sum = 0.0, err = 0.0;
    for (long m = 0; m <= N; ++m)
        for (long n = 0; n <= N; ++n) {
            const double c2 = (2.0 * m + 1) * (2.0 * m + 1) + (2.0 * n + 1) * (2.0 * n + 1);
            const double w = (2.0 * m + 1) * (2.0 * n + 1);
            // the inner sum decays like e^{-pi c/2}
            if (w * std::exp(-kPi * std::sqrt(c2) / 2) < 1e-20) continue;
            auto a = [c2](long l) { const double k = 2.0 * l + 1; return k / (k * k + c2); };
            double e = 0.0;
            const double inner = alternating_sum(a, static_cast<long>(2 * std::sqrt(c2)) + 50, 20, b, e);
            sum += ((m + n) % 2 == 0 ? 1.0 : -1.0) * w * inner;
            err += w * e;
        }
    SeriesResult r;
    r.value = 4.0 / kPi * sum;
    r.tail_bound = 4.0 / kPi * err;
    r.terms_used = b.used;
    return r;
}

SeriesResult moment_double_sum(int j, const SeriesOptions& opt) {
    if (j < 0 || j > 6) throw DomainError("moment_double_sum: j must lie in [0,6]");
    Budget b(opt);
    double sum = 0.0, err = 0.0;
    // the inner sum decays like e^{-pi (2n+1)/2}
    for (long n = 0; std::pow(2.0 * n + 1, j + 2) * std::exp(-kPi * (2.0 * n + 1) / 2) > 1e-19; ++n) {
        const double An = 2.0 * n * (n + 1);
        auto a = [An, j](long m) {
            const double D = An + 2.0 * m * (m + 1) + 1.0;
            return (2.0 * m + 1) / std::pow(D, j + 1);
        };
        double e = 0.0;
        const double inner = alternating_sum(a, static_cast<long>(4 * std::sqrt(An + 1)) + 50, 20, b, e);
        sum += (n % 2 == 0 ? 1.0 : -1.0) * (2.0 * n + 1) * inner;
        err += (2.0 * n + 1) * e;
    }
    double fact = 1.0;
    for (int i = 2; i <= j; ++i) fact *= i;
    const double pre = std::pow(2.0 / kPi, j + 1) * fact;
    SeriesResult r;
    r.value = pre * sum;
    r.tail_bound = pre * err;
    r.terms_used = b.used;
    return r;
}

namespace {

// a^5 b - 10 a^3 b^3 + 9 a b^5 = Im[(a + i b sqrt3)^6] / (6 sqrt3)
double winquist_poly(double a, double b) {
    const double a2 = a * a, b2 = b * b;
    return a * b * (a2 * a2 - 10.0 * a2 * b2 + 9.0 * b2 * b2);
}

template <class F>
SeriesResult winquist_lattice(F&& weight, const SeriesOptions& opt) {
    Budget b(opt);
    constexpr long M = 12;
    double sum = 0.0;
    for (long m1 = -M; m1 <= M; ++m1)
        for (long m2 = -M; m2 <= M; ++m2) {
            const double a = 6.0 * m1 + 2, bb = 4.0 * m2 + 1;
            const double c = (std::labs(m1) % 2 == 0 ? 1.0 : -1.0) * 6.0 * kSqrt3 * winquist_poly(a, bb);
            const double lam = kPi * (a * a + 3 * bb * bb) / 6.0;
            sum += c * weight(lam);
        }
    b.take((2 * M + 1) * (2 * M + 1));
    SeriesResult r;
    r.value = sum;
    // outside the square a^2 + 3b^2 >= 48^2: |c| weight(lam) is far below 1e-300
    r.tail_bound = 0.0;
    r.terms_used = b.used;
    return r;
}

}  // namespace

SeriesResult winquist_sum(const SeriesOptions& opt) {
    // Abel value of sum c/lam: split the Laplace integral at x = 1; the part
    // over (0,1) maps through eta(i/x) = sqrt(x) eta(ix) to weight u^5.
    SeriesResult r = winquist_lattice([](double lam) {
        const double e = std::exp(-lam);
        double poly = 0.0, p = 1.0, f = 1.0;
        for (int k = 0; k <= 5; ++k) {
            poly += p / f;
            p *= lam;
            f *= (k + 1);
        }
        return e / lam + 120.0 * e * poly / std::pow(lam, 6);
    }, opt);
    r.value *= kPi / 6.0;
    return r;
}

SeriesResult winquist_series(double x, const SeriesOptions& opt) {
    if (!(x >= 0.2)) throw DomainError("winquist_series: requires x >= 0.2");
    return winquist_lattice([x](double lam) { return std::exp(-lam * x); }, opt);
}

SeriesResult partial_fraction_const(const SeriesOptions& opt) {
    Budget b(opt);
    constexpr long N = 1000;
    double sum = 0.0;
    for (long n = N; n >= 1; --n) sum += 1.0 / (32.0 * n * n - 1.0);
    b.take(N);
    // tail: 1/(32n^2-1) = (32n^2)^{-1} + (32n^2)^{-2} + ...
    sum += polygamma(1, N + 1.0) / 32.0 + polygamma(3, N + 1.0) / 6.0 / 1024.0;
    SeriesResult r;
    r.value = sum;
    r.tail_bound = 1.0 / (32768.0 * 0.96 * 5.0 * std::pow(double(N), 5));
    r.terms_used = b.used;
    return r;
}

double partial_fraction_closed() {
    return (8.0 - std::sqrt(2.0) * kPi / std::tan(kPi / (4.0 * std::sqrt(2.0)))) / 16.0;
}

SeriesResult weylkac_sum(WeylKac which, double x, const SeriesOptions& opt) {
    if (!(x > 0.0)) throw DomainError("weylkac_sum: requires x > 0");
    Budget b(opt);
    const double l = 2.0 * kPi * x;  // q = e^{-l}
    double sum = 0.0, tail = 0.0;
    if (which == WeylKac::eta8_16) {
        // m >= 3|n|: exponent (2m+1)^2 - 32 n^2 >= (4/9) m^2
        for (long m = 0;; ++m) {
            // monotone in m, unlike the per-row minimum
            const double emin = (4.0 / 9) * m * m + 4.0 * m + 1.0;
            if (emin * l > 45.0) {
                for (long k = m; k < m + 400; ++k)
                    tail += (2.0 * k / 3 + 1) * std::exp(-((4.0 / 9) * k * k + 4.0 * k + 1.0) * l);
                break;
            }
            const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
            for (long n = -m / 3; n <= m / 3; ++n) {
                b.take();
                sum += sgn * std::exp(-((2.0 * m + 1) * (2.0 * m + 1) - 32.0 * n * n) * l);
            }
        }
    } else {
        // 0 <= n <= 2m: exponent 8(3m+1)^2 - 3(2n+1)^2 >= 24m^2 + 24m + 5
        for (long m = 0;; ++m) {
            const double emin = 24.0 * m * m + 24.0 * m + 5.0;
            if (emin * l > 45.0) {
                for (long k = m; k < m + 200; ++k) tail += 2.0 * (2.0 * k + 1) * std::exp(-(24.0 * k * k + 24.0 * k + 5.0) * l);
                break;
            }
            for (long n = 0; n <= 2 * m; ++n) {
                b.take();
                const long tri = n * (n + 1) / 2;
                const double sgn = (tri % 2 == 0) ? 1.0 : -1.0;
                const double e = 8.0 * (3.0 * m + 1) * (3.0 * m + 1) - 3.0 * (2.0 * n + 1) * (2.0 * n + 1);
                sum += sgn * std::exp(-e * l) * (-std::expm1(-24.0 * (2.0 * m + 1) * l));
            }
        }
    }
    SeriesResult r;
    r.value = sum;
    r.tail_bound = tail;
    r.terms_used = b.used;
    return r;
}

namespace {

void check_q(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("durfee: requires 0 < q < 1");
}

}  // namespace

SeriesResult durfee_sum_z(double z, double q, const SeriesOptions& opt) {
    check_q(q);
    if (!(std::fabs(z) < 1.0 / q)) throw DomainError("durfee: requires |z q| < 1");
    Budget b(opt);
    double sum = 1.0, term = 1.0;
    SeriesResult r;
    for (long n = 1;; ++n) {
        b.take();
        // term_n / term_{n-1} = z q^{2n-1} / ((1-q^n)(1-z q^n))
        const double qn = std::pow(q, n);
        term *= z * std::pow(q, 2.0 * n - 1) / ((1.0 - qn) * (1.0 - z * qn));
        sum += term;
        const double qn1 = qn * q;
        const double ratio = std::fabs(z) * std::pow(q, 2.0 * n + 1) / ((1.0 - qn1) * (1.0 - std::fabs(z) * qn1));
        if (std::fabs(term) * ratio < 1e-18 * std::fabs(sum) && ratio < 0.5) {
            r.tail_bound = std::fabs(term) * ratio / (1.0 - ratio);
            break;
        }
    }
    r.value = sum;
    r.terms_used = b.used;
    return r;
}

SeriesResult durfee_sum(double q, const SeriesOptions& opt) {
    // z = 1 turns (zq;q)_n into (q;q)_n
    return durfee_sum_z(1.0, q, opt);
}

double inverse_q_product(double z, double q) {
    check_q(q);
    double prod = 1.0, qi = q;
    for (int i = 1; i < 100000; ++i) {
        prod *= 1.0 - z * qi;
        qi *= q;
        if (std::fabs(z * qi) < 1e-18) break;
    }
    return 1.0 / prod;
}

}  // namespace etaint
