#include "etaint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <vector>

#include "etaint/errors.hpp"
#include "etaint/eta.hpp"
#include "etaint/special.hpp"

namespace etaint {

namespace {

// Kronrod 15-point nodes on [0,1] half-line with the embedded Gauss 7 weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, err;
};

struct WorseFirst {
    bool operator()(const Segment& x, const Segment& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.a > y.a;
    }
};

Segment gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double rk = fc * kWgk[7];
    double rg = fc * kWg[3];
    double rabs = std::fabs(rk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        const double s = fv1[j] + fv2[j];
        rk += kWgk[j] * s;
        rabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
        if (j % 2 == 1) rg += kWg[j / 2] * s;
    }
    const double mean = 0.5 * rk;
    double rasc = kWgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j) rasc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));
    const double value = rk * h;
    rasc *= std::fabs(h);
    rabs *= std::fabs(h);
    double err = std::fabs((rk - rg) * h);
    if (rasc != 0.0 && err != 0.0) err = rasc * std::min(1.0, std::pow(200.0 * err / rasc, 1.5));
    // rounding floor
    err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * rabs);
    if (!std::isfinite(value)) throw DomainError("integrand is not finite on the integration range");
    return {a, b, value, err};
}

QuadResult integrate_breaks(const Integrand& f, const std::vector<double>& breaks, double tol) {
    std::priority_queue<Segment, std::vector<Segment>, WorseFirst> heap;
    QuadResult r;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i + 1] > breaks[i])) continue;
        Segment s = gk15(f, breaks[i], breaks[i + 1]);
        r.evals += 15;
        total += s.value;
        total_err += s.err;
        heap.push(s);
    }
    while (total_err > std::max(tol, tol * std::fabs(total))) {
        if (static_cast<long>(heap.size()) >= kMaxSegments)
            throw ConvergenceError("quadrature: subdivision budget exhausted");
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw ConvergenceError("quadrature: interval too small to subdivide");
        heap.pop();
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        r.evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }
    // re-sum in a fixed order to damp accumulated update drift
    std::vector<Segment> segs;
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    total = 0.0;
    total_err = 0.0;
    for (const Segment& s : segs) {
        total += s.value;
        total_err += s.err;
    }
    r.value = total;
    r.abs_err_est = total_err;
    r.segments = static_cast<long>(segs.size());
    return r;
}

// Tail cut: sample h(u) = |g(u)| e^{rate (u-lo)/2} on a grid, take suffix
// maxima as the majorant M(U), and return the first U with
// M(U) (2/rate) e^{-rate (U-lo)/2} < tol/1000 together with that bound.
std::pair<double, double> tail_cut(const Integrand& g, double lo, double rate, double tol) {
    const double du = std::min(1.0, 0.5 / rate);
    const double scale = 2.0 / rate;
    std::vector<double> h;
    double span = 16.0 / rate;
    for (int round = 0; round < 12; ++round, span *= 2.0) {
        const auto count = static_cast<std::size_t>(std::ceil(span / du)) + 1;
        while (h.size() < count) {
            const double u = lo + du * h.size();
            const double gu = std::fabs(g(u));
            h.push_back(gu == 0.0 ? 0.0 : gu * std::exp(std::min(700.0, 0.5 * rate * (u - lo))));
        }
        std::vector<double> suffix(h.size());
        double m = 0.0;
        for (std::size_t k = h.size(); k-- > 0;) suffix[k] = m = std::max(m, h[k]);
        // only trust cut points in the first half of the sampled range
        for (std::size_t k = 1; k < h.size() / 2; ++k) {
            const double U = lo + du * k;
            const double bound = suffix[k] * scale * std::exp(-0.5 * rate * (U - lo));
            if (bound < tol / 1000.0) return {U, bound};
        }
    }
    throw ConvergenceError("quadrature: no tail cut found");
}

std::vector<double> geometric_breaks(double lo, double U) {
    std::vector<double> b{lo};
    double step = std::max(0.5, 0.25 * std::fabs(lo));
    double x = lo;
    while (x + step < U) {
        x += step;
        b.push_back(x);
        step *= 1.6;
    }
    b.push_back(U);
    return b;
}

// int_lo^inf g with g = O(poly * e^{-rate u}).
QuadResult integrate_tail_cut(const Integrand& g, double lo, double rate, double tol) {
    const auto [U, tail] = tail_cut(g, lo, rate, tol);
    QuadResult r = integrate_breaks(g, geometric_breaks(lo, U), tol * 0.9);
    r.abs_err_est += tail;
    return r;
}

void check_tol(double tol) {
    if (!(tol >= 1e-13 && tol < 1.0)) throw DomainError("quadrature: tolerance must lie in [1e-13, 1)");
}

void check_n(int n) {
    if (n < 1 || n > 26) throw DomainError("quadrature: eta power must lie in [1,26]");
}

double sech(double x) {
    const double e = std::exp(-std::fabs(x));
    return 2.0 * e / (1.0 + e * e);
}

}  // namespace

double WeightSpec::operator()(double x) const {
    double v = 1.0;
    switch (kind) {
        case WeightKind::unit: break;
        case WeightKind::power: v = std::pow(x, p1); break;
        case WeightKind::exp_decay: v = std::exp(-p1 * x); break;
        case WeightKind::exp_inverse: v = std::exp(-p1 / x) / std::sqrt(x); break;
        case WeightKind::cos_xy: v = std::cos(p1 * x); break;
        case WeightKind::cos_inverse: v = std::cos(p1 / x) / std::sqrt(x); break;
        case WeightKind::shifted_power: v = std::pow(x + p1, p2); break;
        case WeightKind::log_over_x: v = std::log(x) / x; break;
        // exp(t^2) erfc(t) with t^2 = a/x or a x
        case WeightKind::erfc_inverse: v = erfcx(std::sqrt(p1 / x)) / std::sqrt(x); break;
        case WeightKind::erfc_direct: v = erfcx(std::sqrt(p1 * x)); break;
        case WeightKind::hurwitz: v = hurwitz_zeta(p1, x); break;
    }
    if (extra_power != 0.0) v *= std::pow(x, extra_power);
    return v;
}

void WeightSpec::validate() const {
    if (!std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(extra_power))
        throw DomainError("weight: non-finite parameter");
    switch (kind) {
        case WeightKind::exp_decay:
        case WeightKind::exp_inverse:
        case WeightKind::erfc_inverse:
        case WeightKind::erfc_direct:
            if (p1 < 0.0) throw DomainError("weight: parameter must be non-negative");
            break;
        case WeightKind::shifted_power:
            if (!(p1 > 0.0)) throw DomainError("weight: shifted_power requires a > 0");
            break;
        case WeightKind::hurwitz:
            if (p1 == 1.0) throw DomainError("weight: hurwitz weight has a pole at p = 1");
            break;
        default: break;
    }
}

std::string WeightSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case WeightKind::unit: os << "1"; break;
        case WeightKind::power: os << "x^" << p1; break;
        case WeightKind::exp_decay: os << "exp(-" << p1 << " x)"; break;
        case WeightKind::exp_inverse: os << "x^-1/2 exp(-" << p1 << "/x)"; break;
        case WeightKind::cos_xy: os << "cos(" << p1 << " x)"; break;
        case WeightKind::cos_inverse: os << "x^-1/2 cos(" << p1 << "/x)"; break;
        case WeightKind::shifted_power: os << "(x+" << p1 << ")^" << p2; break;
        case WeightKind::log_over_x: os << "ln(x)/x"; break;
        case WeightKind::erfc_inverse: os << "x^-1/2 exp(a/x) erfc(sqrt(a/x)), a=" << p1; break;
        case WeightKind::erfc_direct: os << "exp(a x) erfc(sqrt(a x)), a=" << p1; break;
        case WeightKind::hurwitz: os << "zeta(" << p1 << ", x)"; break;
    }
    if (extra_power != 0.0) os << " * x^" << extra_power;
    return os.str();
}

QuadResult integrate(const Integrand& f, double a, double b, double tol) {
    check_tol(tol);
    if (!(b > a)) throw DomainError("integrate: requires a < b");
    return integrate_breaks(f, {a, b}, tol);
}

QuadResult integrate_eta_fn(const Integrand& f, int n, double tol) {
    check_n(n);
    check_tol(tol);
    const double mapped_power = 0.5 * n - 2.0;
    auto g = [&](double u) {
        const double e = eta_power(n, u);
        return (f(u) + f(1.0 / u) * std::pow(u, mapped_power)) * e;
    };
    return integrate_tail_cut(g, 1.0, n * kPi / 12.0, tol);
}

QuadResult integrate_eta(const WeightSpec& w, int n, double tol) {
    w.validate();
    return integrate_eta_fn([&w](double x) { return w(x); }, n, tol);
}

QuadResult integrate_eta_moment(int n, double j, double tol) {
    return integrate_eta(WeightSpec::power(j), n, tol);
}

QuadResult integrate_eta_pair(double a, double b, double tol) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("integrate_eta_pair: requires a, b > 0");
    check_tol(tol);
    const double s = 1.5 * std::log(a * b);
    auto g = [&](double u) {
        const double direct = eta_cubed(a * u) * eta_cubed(b * u);
        const double mapped = u * std::exp(-s) * eta_cubed(u / a) * eta_cubed(u / b);
        return direct + mapped;
    };
    const double rate = kPi / 4.0 * std::min(a + b, 1.0 / a + 1.0 / b);
    return integrate_tail_cut(g, 1.0, rate, tol);
}

QuadResult integrate_eta_product(double a, double b, double tol) {
    if (!(a > 0.0 && b > 0.0)) throw DomainError("integrate_eta_product: requires a, b > 0");
    check_tol(tol);
    const double s = 1.0 / std::sqrt(a * b);
    auto g = [&](double u) {
        const double direct = eta_ix(a * u) * eta_ix(b * u);
        const double mapped = s / u * eta_ix(u / a) * eta_ix(u / b);
        return direct + mapped;
    };
    const double rate = kPi / 12.0 * std::min(a + b, 1.0 / a + 1.0 / b);
    return integrate_tail_cut(g, 1.0, rate, tol);
}

QuadResult integrate_eta_scaled(int n, double c, double tol) {
    check_n(n);
    check_tol(tol);
    if (!(c > 0.0)) throw DomainError("integrate_eta_scaled: requires c > 0");
    auto g = [&](double u) {
        const double direct = eta_power(n, c * u);
        const double mapped = std::pow(u / c, 0.5 * n) / (u * u) * eta_power(n, u / c);
        return direct + mapped;
    };
    return integrate_tail_cut(g, 1.0, n * kPi / 12.0 * std::min(c, 1.0 / c), tol);
}

QuadResult integrate_unit(int n, double tol) {
    if (n != 1 && n != 3) throw DomainError("integrate_unit: n must be 1 or 3");
    check_tol(tol);
    const double p = 0.5 * n - 2.0;
    auto g = [&](double u) { return std::pow(u, p) * eta_power(n, u); };
    return integrate_tail_cut(g, 1.0, n * kPi / 12.0, tol);
}

QuadResult integrate_segment(int j, int n, double tol) {
    if (j < 0) throw DomainError("integrate_segment: j must be non-negative");
    if (n != 1 && n != 3) throw DomainError("integrate_segment: n must be 1 or 3");
    if (j == 0) return integrate_unit(n, tol);
    check_tol(tol);
    return integrate_breaks([n](double x) { return eta_power(n, x); }, {double(j), j + 1.0}, tol);
}

QuadResult integrate_unit_direct(int n, double tol) {
    if (n != 1 && n != 3) throw DomainError("integrate_unit_direct: n must be 1 or 3");
    check_tol(tol);
    // below x = 0.005 the integrand is under exp(-pi/(12*0.005)) ~ 1e-23
    auto f = [n](double x) {
        return n == 1 ? eta_ix_unreduced(x) : eta_cubed_unreduced(x);
    };
    return integrate_breaks(f, {0.005, 0.05, 0.2, 0.5, 1.0}, tol);
}

QuadResult integrate_decaying(const Integrand& g, double lo, double rate, double tol) {
    check_tol(tol);
    return integrate_tail_cut(g, lo, rate, tol);
}

QuadResult integrate_auxiliary(AuxKind kind, double p, double a, double tol) {
    switch (kind) {
        case AuxKind::sech_moment: {
            if (!(p > 0.0) || a < 0.0) throw DomainError("sech_moment: requires p > 0, a >= 0");
            auto g = [p, a](double x) { return std::pow(x, 2.0 * p - 1.0) * std::exp(-a * x * x / kPi) * sech(x); };
            return integrate_decaying(g, 0.0, 1.0, tol);
        }
        case AuxKind::sech_tail: {
            if (p < 0.0) throw DomainError("sech_tail: requires z >= 0");
            return integrate_decaying([](double x) { return x * sech(x); }, p, 1.0, tol);
        }
        case AuxKind::x_over_cosh:
            return integrate_decaying([](double x) { return x * sech(x); }, 0.0, 1.0, tol);
    }
    throw DomainError("integrate_auxiliary: unknown kind");
}

}  // namespace etaint
