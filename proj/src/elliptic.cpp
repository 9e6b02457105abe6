#include "etaint/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "etaint/errors.hpp"

namespace etaint {

namespace {

double agm(double a, double b) {
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::fabs(a - b) <= 1e-16 * a) break;
    }
    return 0.5 * (a + b);
}

// K as a function of the complementary modulus k' = sqrt(1 - k^2).
double K_from_complement(double kc) { return kPi / (2.0 * agm(1.0, kc)); }

void check_nome(double q, const char* what) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError(std::string(what) + ": nome must lie in (0,1)");
}

// sum_{n>=n0} sign^n q^{(n+shift)^2}; bound on the dropped tail from the
// ratio q^{2(n+shift)+1} between consecutive terms.
SeriesResult theta_sum(double q, double shift, int n0, bool alternate) {
    const double lq = std::log(q);
    SeriesResult r;
    double sum = 0.0;
    for (int n = n0;; ++n) {
        const double e = (n + shift) * (n + shift);
        const double term = std::exp(e * lq);
        sum += (alternate && (n % 2 == 1)) ? -term : term;
        ++r.terms_used;
        const double next = std::exp((n + 1 + shift) * (n + 1 + shift) * lq);
        const double ratio = std::exp((2.0 * (n + 1 + shift) + 1.0) * lq);
        if (next <= 1e-17 * std::fabs(sum) || next == 0.0) {
            r.tail_bound = next / (1.0 - ratio);
            break;
        }
    }
    r.value = sum;
    return r;
}

}  // namespace

double elliptic_K(double k) {
    if (!(std::fabs(k) < 1.0)) throw DomainError("elliptic_K: modulus must satisfy |k| < 1");
    return K_from_complement(std::sqrt((1.0 - k) * (1.0 + k)));
}

SeriesResult theta2(double q) {
    check_nome(q, "theta2");
    SeriesResult r = theta_sum(q, 0.5, 0, false);
    r.value *= 2.0;
    r.tail_bound *= 2.0;
    return r;
}

SeriesResult theta3(double q) {
    check_nome(q, "theta3");
    SeriesResult r = theta_sum(q, 0.0, 1, false);
    r.value = 1.0 + 2.0 * r.value;
    r.tail_bound *= 2.0;
    return r;
}

SeriesResult theta4(double q) {
    check_nome(q, "theta4");
    SeriesResult r = theta_sum(q, 0.0, 1, true);
    r.value = 1.0 + 2.0 * r.value;
    r.tail_bound *= 2.0;
    return r;
}

EllipticPoint nome_invert(double y) {
    if (!(y > 0.0)) throw DomainError("nome_invert: requires y > 0");
    if (y < kPi) {
        // y -> pi^2/y swaps the parameter with its complement
        EllipticPoint p = nome_invert(kPi * kPi / y);
        EllipticPoint s;
        s.parameter_x = p.complement_x;
        s.complement_x = p.parameter_x;
        s.modulus_k = std::sqrt(s.parameter_x);
        s.K = p.Kprime;
        s.Kprime = p.K;
        s.nome_q = std::exp(-y);
        return s;
    }
    const double q = std::exp(-y);
    const double t2 = theta2(q).re(), t3 = theta3(q).re(), t4 = theta4(q).re();
    EllipticPoint p;
    p.parameter_x = std::pow(t2 / t3, 4);
    p.complement_x = std::pow(t4 / t3, 4);
    p.modulus_k = std::sqrt(p.parameter_x);
    const double kc = std::sqrt(p.complement_x);
    p.K = K_from_complement(kc);
    p.Kprime = K_from_complement(p.modulus_k);
    p.nome_q = q;
    return p;
}

SeriesResult gauss_2f1_series(double a, double b, double c, double z) {
    if (std::fabs(a) > 5.0 || std::fabs(b) > 5.0 || std::fabs(c) > 5.0)
        throw UnsupportedParameters("gauss_2f1: parameters limited to |a|,|b|,|c| <= 5");
    if (c <= 0.0 && c == std::floor(c))
        throw UnsupportedParameters("gauss_2f1: c must not be a non-positive integer");
    double pre = 1.0;
    double bb = b;
    if (z < 0.0) {
        // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
        pre = std::pow(1.0 - z, -a);
        bb = c - b;
        z = z / (z - 1.0);
    }
    if (z > 0.95) throw DomainError("gauss_2f1: |z| beyond 0.95 after transformation");
    SeriesResult r;
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 200000; ++n) {
        const double ratio = (a + n) * (bb + n) / ((c + n) * (n + 1.0)) * z;
        term *= ratio;
        sum += term;
        r.terms_used = n + 1;
        if (term == 0.0) break;
        const double rn = std::fabs((a + n + 1) * (bb + n + 1) / ((c + n + 1) * (n + 2.0)) * z);
        const double rb = std::max(rn, std::fabs(z));
        if (n > 2 && rb < 1.0 && std::fabs(term) * rb / (1.0 - rb) < 1e-17 * std::fabs(sum)) {
            r.tail_bound = std::fabs(pre * term) * rb / (1.0 - rb);
            break;
        }
    }
    r.value = pre * sum;
    return r;
}

double gauss_2f1(double a, double b, double c, double z) {
    return gauss_2f1_series(a, b, c, z).re();
}

}  // namespace etaint
