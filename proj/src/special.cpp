#include "etaint/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "etaint/errors.hpp"

namespace etaint {

namespace {

constexpr std::array<double, 31> kBernoulli = {
    1.0, -0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0, -1.0 / 30, 0.0,
    5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6, 0.0, -3617.0 / 510, 0.0,
    43867.0 / 798, 0.0, -174611.0 / 330, 0.0, 854513.0 / 138, 0.0,
    -236364091.0 / 2730, 0.0, 8553103.0 / 6, 0.0, -23749461029.0 / 870, 0.0,
    8615841276005.0 / 14322};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw OverflowError(std::string(what) + ": result not finite");
}

void require_finite(Complex v, const char* what) {
    require_finite(v.real(), what);
    require_finite(v.imag(), what);
}

// Stirling series for ln Gamma, valid once |z| >= 12 and Re z > 0.
Complex stirling_log_gamma(Complex z) {
    const Complex zinv = 1.0 / z;
    const Complex zinv2 = zinv * zinv;
    Complex series = 0.0;
    Complex p = zinv;
    for (int k = 1; k <= 8; ++k) {
        series += kBernoulli[2 * k] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= zinv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

}  // namespace

double bernoulli_number(int n) {
    if (n < 0 || n > 30) throw DomainError("bernoulli_number: index outside [0,30]");
    return kBernoulli[n];
}

double bernoulli_poly(int n, double x) {
    if (n < 0 || n > 31) throw DomainError("bernoulli_poly: degree outside [0,31]");
    // Horner in x over the coefficients C(n,k) B_{n-k}.
    double binom = 1.0;
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double b = k <= 30 ? kBernoulli[k] : 0.0;
        acc = acc * x + binom * b;
        binom = binom * (n - k) / (k + 1);
    }
    return acc;
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at non-positive integer");
    if (z.real() < 0.5) {
        // reflection
        return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma(1.0 - z);
    }
    Complex prod = 1.0;
    while (std::abs(z) < 12.0) {
        prod *= z;
        z += 1.0;
    }
    return stirling_log_gamma(z) - std::log(prod);
}

Complex gamma(Complex z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at non-positive integer");
    if (z.imag() == 0.0) return gamma(z.real());
    Complex g;
    if (z.real() < 0.5) {
        g = kPi / (std::sin(kPi * z) * std::exp(log_gamma(1.0 - z)));
    } else {
        g = std::exp(log_gamma(z));
    }
    require_finite(g, "gamma");
    return g;
}

double gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw PoleError("gamma: pole at non-positive integer");
    const double g = std::tgamma(x);
    require_finite(g, "gamma");
    return g;
}

Complex polygamma(int j, Complex z) {
    if (j < 0 || j > 4) throw UnsupportedOrder("polygamma: order must be in [0,4]");
    if (is_nonpositive_integer(z)) throw PoleError("polygamma: pole at non-positive integer");
    const double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^{j+1}
    const double jfact = factorial(j);
    Complex shift = 0.0;
    while (z.real() < 10.0) {
        shift += sign * jfact / std::pow(z, j + 1);
        z += 1.0;
    }
    const Complex zinv = 1.0 / z;
    const Complex zinv2 = zinv * zinv;
    Complex asym;
    if (j == 0) {
        asym = std::log(z) - 0.5 * zinv;
        Complex p = zinv2;
        for (int k = 1; k <= 10; ++k) {
            asym -= kBernoulli[2 * k] / (2.0 * k) * p;
            p *= zinv2;
        }
    } else {
        Complex zj = std::pow(zinv, j);
        asym = factorial(j - 1) * zj + 0.5 * jfact * zj * zinv;
        Complex p = zj * zinv2;
        for (int k = 1; k <= 10; ++k) {
            asym += kBernoulli[2 * k] * factorial(2 * k + j - 1) / factorial(2 * k) * p;
            p *= zinv2;
        }
        asym *= sign;
    }
    const Complex r = asym + shift;
    require_finite(r, "polygamma");
    return r;
}

double polygamma(int j, double x) { return polygamma(j, Complex(x, 0.0)).real(); }

namespace {

// Euler-Maclaurin with M shifted terms and Bernoulli terms through B_30.
double zeta_em(double s, double a, int M) {
    double sum = 0.0;
    for (int k = 0; k < M; ++k) sum += std::pow(k + a, -s);
    const double t = M + a;
    sum += std::pow(t, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(t, -s);
    double rising = s;  // s(s+1)...(s+2j-2)
    double tp = std::pow(t, -s - 1.0);
    const double t2 = t * t;
    for (int j = 1; j <= 15; ++j) {
        sum += kBernoulli[2 * j] / factorial(2 * j) * rising * tp;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        tp /= t2;
    }
    return sum;
}

// For non-integer s < -1 the shifted sum cancels like eps t^{1-s} while the
// truncated Bernoulli tail shrinks like t^{-s-31}; pick the balancing shift.
int zeta_shift(double s, double a) {
    if (s >= -1.0) return 20;
    double rising = 1.0;
    for (int i = 0; i <= 30; ++i) rising *= std::fabs(s + i);
    const double c = std::fabs(bernoulli_number(30)) / factorial(30) / (4.0 * kPi * kPi) * rising;
    int best = 0;
    double best_err = INFINITY;
    for (int M = 0; M <= 20; ++M) {
        const double t = M + a;
        const double err = c * std::pow(t, -s - 31.0) + 1e-16 * std::pow(t, 1.0 - s);
        if (err < best_err) {
            best_err = err;
            best = M;
        }
    }
    return best;
}

void check_zeta_args(double s, double a, const char* what) {
    if (s == 1.0) throw PoleError(std::string(what) + ": pole at s = 1");
    if (!(a > 0.0)) throw DomainError(std::string(what) + ": requires a > 0");
}

}  // namespace

double hurwitz_zeta(double s, double a) {
    check_zeta_args(s, a, "hurwitz_zeta");
    if (s < 0.0 && s == std::floor(s) && s >= -30.0) {
        const int n = static_cast<int>(-s);
        return -bernoulli_poly(n + 1, a) / (n + 1);
    }
    const double v = zeta_em(s, a, zeta_shift(s, a));
    require_finite(v, "hurwitz_zeta");
    return v;
}

double hurwitz_zeta_sderiv(double s, double a) {
    check_zeta_args(s, a, "hurwitz_zeta_sderiv");
    const int M = zeta_shift(s, a);
    double sum = 0.0;
    for (int k = 0; k < M; ++k) {
        const double x = k + a;
        sum -= std::log(x) * std::pow(x, -s);
    }
    const double t = M + a;
    const double lt = std::log(t);
    const double t1s = std::pow(t, 1.0 - s);
    sum += -lt * t1s / (s - 1.0) - t1s / ((s - 1.0) * (s - 1.0));
    sum += -0.5 * lt * std::pow(t, -s);
    double P = s, dP = 1.0;
    double tp = std::pow(t, -s - 1.0);
    const double t2 = t * t;
    for (int j = 1; j <= 15; ++j) {
        sum += kBernoulli[2 * j] / factorial(2 * j) * (dP - lt * P) * tp;
        for (int i : {2 * j - 1, 2 * j}) {
            dP = dP * (s + i) + P;
            P *= (s + i);
        }
        tp /= t2;
    }
    require_finite(sum, "hurwitz_zeta_sderiv");
    return sum;
}

double hurwitz_zeta_diff(double s, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("hurwitz_zeta_diff: requires a, b > 0");
    if (s < -1.0) return hurwitz_zeta(s, a) - hurwitz_zeta(s, b);
    constexpr int M = 20;
    double sum = 0.0;
    for (int k = 0; k < M; ++k) sum += std::pow(k + a, -s) - std::pow(k + b, -s);
    const double ta = M + a, tb = M + b;
    const double lr = std::log(ta / tb);
    const double u = (1.0 - s) * lr;
    const double e = u == 0.0 ? 1.0 : std::expm1(u) / u;
    sum += -std::pow(tb, 1.0 - s) * lr * e;
    sum += 0.5 * (std::pow(ta, -s) - std::pow(tb, -s));
    double rising = s;
    double pa = std::pow(ta, -s - 1.0), pb = std::pow(tb, -s - 1.0);
    for (int j = 1; j <= 15; ++j) {
        sum += kBernoulli[2 * j] / factorial(2 * j) * rising * (pa - pb);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        pa /= ta * ta;
        pb /= tb * tb;
    }
    return sum;
}

double dirichlet_beta(double s) {
    if (s >= 20.0) {
        double sum = 0.0;
        for (int k = 0;; ++k) {
            const double term = std::pow(2.0 * k + 1.0, -s);
            sum += (k % 2 == 0) ? term : -term;
            if (term < 1e-18 * sum) break;
        }
        return sum;
    }
    if (s > 0.0) return std::pow(4.0, -s) * hurwitz_zeta_diff(s, 0.25, 0.75);
    // beta(1-t) = (pi/2)^{-t} sin(pi t/2) Gamma(t) beta(t), t = 1 - s >= 1
    const double t = 1.0 - s;
    const double v = std::pow(kPi / 2.0, -t) * std::sin(kPi * t / 2.0) * gamma(t) * dirichlet_beta(t);
    require_finite(v, "dirichlet_beta");
    return v;
}

double catalan() { return (polygamma(1, 0.25) - polygamma(1, 0.75)) / 16.0; }

__int128 euler_number(int n) {
    if (n < 0) throw DomainError("euler_number: negative index");
    if (n % 2 == 1) return 0;
    if (n > 32) throw OverflowError("euler_number: E_n exceeds 128-bit range for n > 32");
    std::array<__int128, 33> E{};
    E[0] = 1;
    for (int m = 2; m <= n; m += 2) {
        // sum_k C(m,2k) E_{2k} = 0
        __int128 binom = 1;  // C(m, i)
        __int128 acc = 0;
        for (int i = 0; i < m; ++i) {
            if (i % 2 == 0) {
                __int128 prod;
                if (__builtin_mul_overflow(binom, E[i], &prod) || __builtin_add_overflow(acc, prod, &acc))
                    throw OverflowError("euler_number: intermediate overflow");
            }
            binom = binom * (m - i) / (i + 1);
        }
        E[m] = -acc;
    }
    return E[n];
}

double euler_number_d(int n) { return static_cast<double>(euler_number(n)); }

double stieltjes_gamma1(double a) {
    if (!(a > 0.0)) throw DomainError("stieltjes_gamma1: requires a > 0");
    constexpr int M = 20;
    double sum = 0.0;
    for (int k = 0; k < M; ++k) {
        const double x = k + a;
        sum += std::log(x) / x;
    }
    const double t = M + a;
    const double lt = std::log(t);
    sum += -0.5 * lt * lt + lt / (2.0 * t);
    // EM corrections: B_{2j}/(2j) (ln t - H_{2j-1}) / t^{2j}
    double harmonic = 1.0;  // H_1
    double tp = 1.0 / (t * t);
    for (int j = 1; j <= 15; ++j) {
        sum += kBernoulli[2 * j] / (2.0 * j) * (lt - harmonic) * tp;
        harmonic += 1.0 / (2 * j) + 1.0 / (2 * j + 1);
        tp /= t * t;
    }
    return sum;
}

double erfc(double x) { return std::erfc(x); }

double erfcx(double x) {
    if (x < 2.0) {
        const double v = std::exp(x * x) * std::erfc(x);
        require_finite(v, "erfcx");
        return v;
    }
    // Continued fraction x + (1/2)/(x + 1/(x + (3/2)/(x + ...))), modified Lentz.
    constexpr double tiny = 1e-300;
    double f = x, C = x, D = 0.0;
    for (int k = 1; k < 500; ++k) {
        const double ak = 0.5 * k;
        D = x + ak * D;
        if (D == 0.0) D = tiny;
        C = x + ak / C;
        if (C == 0.0) C = tiny;
        D = 1.0 / D;
        const double delta = C * D;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 / (std::sqrt(kPi) * f);
}

}  // namespace etaint
