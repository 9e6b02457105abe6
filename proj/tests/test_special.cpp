#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "etaint/errors.hpp"
#include "etaint/quadrature.hpp"
#include "etaint/special.hpp"
#include "reference_values.hpp"
#include "support.hpp"

using namespace etaint;
using etaint::testing::Gen;
using etaint::testing::rel_diff;
namespace R = etaint::testref;

const double kSqrtPi = std::sqrt(kPi);

TEST_CASE("gamma values") {
    CHECK(rel_diff(etaint::gamma(Complex(1, 0)), Complex(1, 0)) < 1e-15);
    CHECK(rel_diff(etaint::gamma(Complex(0.5, 0)).real(), kSqrtPi) < 1e-14);
    const Complex prod = etaint::gamma(Complex(0.5, 0.5)) * etaint::gamma(Complex(0.5, -0.5));
    CHECK(rel_diff(prod.real(), R::kGammaHalfIProduct) < 1e-13);
    CHECK(rel_diff(prod.real(), kPi / std::cosh(kPi / 2)) < 1e-13);
    CHECK(std::fabs(prod.imag()) < 1e-15);
    CHECK(rel_diff(etaint::gamma(Complex(2.5, 7.25)), Complex(R::kGammaComplexRe, R::kGammaComplexIm)) < 1e-13);
    CHECK(rel_diff(etaint::gamma(Complex(-3.3, 0.4)), Complex(R::kGammaNegRe, R::kGammaNegIm)) < 1e-13);
    CHECK(rel_diff(etaint::gamma(20.0), 121645100408832000.0) < 1e-14);
}

TEST_CASE("gamma reflection on random points") {
    Gen g(0x5eed01);
    for (int i = 0; i < 100; ++i) {
        Complex z;
        do {
            z = Complex(g.uniform(-10, 10), g.uniform(-10, 10));
        } while (std::abs(z) > 10 || (std::fabs(z.imag()) < 0.05 && std::fabs(z.real() - std::round(z.real())) < 0.05));
        const Complex lhs = etaint::gamma(z) * etaint::gamma(1.0 - z) * std::sin(kPi * z) / kPi;
        CHECK_MESSAGE(std::abs(lhs - 1.0) < 1e-12, "z = " << z);
    }
}

TEST_CASE("gamma duplication") {
    for (double n = 0.5; n <= 10.0; n += 0.5) {
        const double lhs = etaint::gamma(2 * n + 1);
        const double rhs = std::pow(2.0, 2 * n) * etaint::gamma(n + 0.5) * etaint::gamma(n + 1) / kSqrtPi;
        CHECK_MESSAGE(rel_diff(lhs, rhs) < 1e-12, "n = " << n);
    }
}

TEST_CASE("digamma values and reflection") {
    CHECK(std::fabs(digamma(1.0) + kEulerGamma) < 1e-15);
    CHECK(rel_diff(polygamma(1, 1.0), kPi * kPi / 6) < 1e-14);
    const double combo = -digamma(1.0 / 12) + digamma(5.0 / 12) + digamma(7.0 / 12) - digamma(11.0 / 12);
    CHECK(rel_diff(combo, R::kDigammaCombo12) < 1e-13);
    CHECK(rel_diff(combo, 8 * std::sqrt(3.0) * std::atanh(1 / std::sqrt(3.0))) < 1e-13);

    Gen g(0x5eed02);
    for (int i = 0; i < 100; ++i) {
        Complex z(g.uniform(-6, 6), g.uniform(-6, 6));
        if (std::fabs(z.imag()) < 0.05) z += Complex(0, 0.1);
        const Complex lhs = polygamma(0, z) - polygamma(0, 1.0 - z);
        const Complex rhs = -kPi / std::tan(kPi * z);
        CHECK_MESSAGE(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)), "z = " << z);
    }
}

TEST_CASE("polygamma references") {
    CHECK(rel_diff(polygamma(2, Complex(0.25, 1.5)), Complex(R::kPolygamma2Re, R::kPolygamma2Im)) < 1e-12);
    CHECK(rel_diff(polygamma(4, 0.7), R::kPolygamma4) < 1e-12);
}

TEST_CASE("polygamma at positive integers") {
    for (int j = 1; j <= 3; ++j) {
        const double fact = std::tgamma(j + 1.0);
        const double zeta = hurwitz_zeta(j + 1.0, 1.0);
        for (int n = 0; n <= 10; ++n) {
            double h = 0;
            for (int k = 1; k <= n; ++k) h += std::pow(k, -(j + 1.0));
            const double rhs = (j % 2 ? 1 : -1) * fact * (zeta - h);
            CHECK_MESSAGE(rel_diff(polygamma(j, n + 1.0), rhs) < 1e-12, "j = " << j << " n = " << n);
        }
    }
}

TEST_CASE("polygamma integral representation") {
    for (int j = 1; j <= 2; ++j) {
        for (double z : {0.5, 1.0, 2.5}) {
            // t = v^2 removes the algebraic endpoint singularity
            auto f = [&](double v) {
                if (v <= 0 || v >= 1) return 0.0;
                const double t = v * v;
                return 2 * v * std::pow(t, z - 1) * std::pow(std::log(t), j) / (t - 1);
            };
            const double got = integrate(f, 0, 1, 1e-13).value;
            CHECK_MESSAGE(rel_diff(got, polygamma(j, z)) < 1e-9, "j = " << j << " z = " << z);
        }
    }
}

TEST_CASE("hurwitz zeta") {
    CHECK(rel_diff(hurwitz_zeta(2, 1), kPi * kPi / 6) < 1e-14);
    for (double x : {0.25, 1.0, 2.5}) CHECK(std::fabs(hurwitz_zeta(0, x) - (0.5 - x)) < 1e-14);
    CHECK(rel_diff(hurwitz_zeta(2, 0.25), kPi * kPi + 8 * R::kCatalan) < 1e-13);
    CHECK(rel_diff(hurwitz_zeta(2, 0.25), R::kZeta2Quarter) < 1e-13);
    CHECK(rel_diff(hurwitz_zeta(2.5, 0.3), R::kZeta2p5At0p3) < 1e-12);
    CHECK(rel_diff(hurwitz_zeta(-0.5, 0.25), R::kZetaM0p5At0p25) < 1e-12);
    CHECK(rel_diff(hurwitz_zeta(30, 1), R::kZeta30At1) < 1e-12);
    CHECK(rel_diff(hurwitz_zeta(0.5, 2.7), R::kZeta0p5At2p7) < 1e-12);
    CHECK(rel_diff(hurwitz_zeta(-3, 0.4), R::kZetaM3At0p4) < 1e-12);
    CHECK(rel_diff(hurwitz_zeta(1.0001, 1), R::kZeta1p0001At1) < 1e-12);
    for (int n = 1; n <= 6; ++n)
        for (double x : {0.2, 0.5, 1.7})
            CHECK(rel_diff(hurwitz_zeta(-n, x), -bernoulli_poly(n + 1, x) / (n + 1)) < 1e-12);
}

TEST_CASE("hurwitz zeta s-derivative") {
    CHECK(rel_diff(hurwitz_zeta_sderiv(0, 1), -0.5 * std::log(2 * kPi)) < 1e-12);
    CHECK(rel_diff(hurwitz_zeta_sderiv(-1, 1), R::kZetaDerivM1At1) < 1e-10);
    CHECK(rel_diff(hurwitz_zeta_sderiv(2, 0.5), R::kZetaDeriv2AtHalf) < 1e-10);
    CHECK(rel_diff(hurwitz_zeta_sderiv(0.5, 3), R::kZetaDeriv0p5At3) < 1e-10);
    // Richardson-extrapolated central difference
    auto fd = [](double s, double a) {
        const double h = 1e-3;
        const double d1 = (hurwitz_zeta(s + h, a) - hurwitz_zeta(s - h, a)) / (2 * h);
        const double d2 = (hurwitz_zeta(s + h / 2, a) - hurwitz_zeta(s - h / 2, a)) / h;
        return (4 * d2 - d1) / 3;
    };
    CHECK(std::fabs(hurwitz_zeta_sderiv(-1, 1) - fd(-1, 1)) < 1e-6);
    CHECK(rel_diff(hurwitz_zeta_sderiv(2, 0.5), fd(2, 0.5)) < 1e-8);
}

TEST_CASE("dirichlet beta") {
    CHECK(rel_diff(dirichlet_beta(1), kPi / 4) < 1e-14);
    CHECK(rel_diff(dirichlet_beta(2), R::kCatalan) < 1e-13);
    CHECK(rel_diff(dirichlet_beta(3), std::pow(kPi, 3) / 32) < 1e-13);
    CHECK(rel_diff(dirichlet_beta(0.5), R::kBetaHalf) < 1e-12);
    CHECK(rel_diff(dirichlet_beta(-0.5), R::kBetaM0p5) < 1e-12);
    CHECK(rel_diff(dirichlet_beta(1.0000001), R::kBeta1p0000001) < 1e-12);
    CHECK(rel_diff(dirichlet_beta(0), 0.5) < 1e-14);
}

TEST_CASE("beta functional equation") {
    for (double s : {0.5, 1.5, 2.0, 3.0, 4.5}) {
        const double rhs = std::pow(kPi / 2, -s) * std::sin(kPi * s / 2) * etaint::gamma(s) * dirichlet_beta(s);
        CHECK_MESSAGE(rel_diff(dirichlet_beta(1 - s), rhs) < 1e-12, "s = " << s);
    }
}

TEST_CASE("hurwitz splitting gives beta") {
    for (double s : {2.0, 3.0, 5.0}) {
        const double split = std::pow(4.0, -s) * (hurwitz_zeta(s, 0.25) - hurwitz_zeta(s, 0.75));
        CHECK(rel_diff(split, dirichlet_beta(s)) < 1e-12);
    }
}

TEST_CASE("euler numbers") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(10) == -50521);
    CHECK(euler_number(7) == 0);
    // E_32 = 177519391579539289436664789665 fits in 128 bits
    const __int128 e32 = static_cast<__int128>(177519391579LL) * 1000000000000000000LL + 539289436664789665LL;
    CHECK(euler_number(32) == e32);
    for (int n = 0; n <= 8; ++n) {
        const double rhs = (n % 2 ? -1 : 1) * euler_number_d(2 * n) * std::pow(kPi, 2 * n + 1) /
                           (std::pow(4.0, n + 1) * std::tgamma(2 * n + 1.0));
        CHECK(rel_diff(dirichlet_beta(2 * n + 1), rhs) < 1e-13);
    }
}

TEST_CASE("bernoulli") {
    CHECK(bernoulli_number(0) == 1.0);
    CHECK(rel_diff(bernoulli_number(2), 1.0 / 6) < 1e-15);
    CHECK(rel_diff(bernoulli_number(12), -691.0 / 2730) < 1e-15);
    CHECK(bernoulli_number(5) == 0.0);
    CHECK(rel_diff(bernoulli_poly(3, 0.3), 0.027 - 1.5 * 0.09 + 0.5 * 0.3) < 1e-14);
}

TEST_CASE("stieltjes gamma1") {
    CHECK(std::fabs(stieltjes_gamma1(1) - R::kStieltjes1At1) < 1e-9);
    CHECK(std::fabs(stieltjes_gamma1(0.5) - R::kStieltjes1AtHalf) < 1e-9);
    const double l2 = std::log(2.0);
    CHECK(std::fabs(stieltjes_gamma1(0.5) - (R::kStieltjes1At1 - 2 * kEulerGamma * l2 - l2 * l2)) < 1e-9);
    CHECK(std::fabs(stieltjes_gamma1(0.3) - R::kStieltjes1At0p3) < 1e-9);
    const double combo = -stieltjes_gamma1(1.0 / 12) + stieltjes_gamma1(5.0 / 12) + stieltjes_gamma1(7.0 / 12) -
                         stieltjes_gamma1(11.0 / 12);
    CHECK(std::fabs(combo - R::kStieltjesCombo12) < 1e-9);
}

TEST_CASE("catalan routes") {
    CHECK(rel_diff(catalan(), R::kCatalan) < 1e-13);
    CHECK(std::fabs(catalan() - dirichlet_beta(2)) < 1e-12);
    const double half = 0.5 * integrate_auxiliary(AuxKind::x_over_cosh, 0, 0, 1e-12).value;
    CHECK(std::fabs(catalan() - half) < 1e-10);
}

TEST_CASE("erfc") {
    CHECK(etaint::erfc(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_diff(etaint::erfc(1), R::kErfc1) < 1e-13);
    CHECK(rel_diff(etaint::erfc(0.5), R::kErfc0p5) < 1e-13);
    CHECK(rel_diff(etaint::erfc(1.9), R::kErfc1p9) < 1e-13);
    CHECK(rel_diff(etaint::erfc(2.5), R::kErfc2p5) < 1e-13);
    CHECK(rel_diff(etaint::erfc(6), R::kErfc6) < 1e-13);
    CHECK(rel_diff(etaint::erfc(-1), R::kErfcM1) < 1e-13);
    CHECK(rel_diff(etaint::erfc(12), R::kErfc12) < 1e-13);
    // the ratio to e^{-x^2}/(x sqrt pi) is 1 - 1/(2x^2) + 3/(4x^4) - ..., about 0.987 at x = 6
    const double asym = etaint::erfc(6.0) / (std::exp(-36.0) / (6 * kSqrtPi));
    CHECK(std::fabs(asym - 1) < 2e-2);
    CHECK(std::fabs(asym - (1 - 1.0 / 72 + 0.75 / 1296)) < 1e-4);
    for (double x : {0.1, 1.0, 3.0, 8.0}) CHECK(rel_diff(erfcx(x), std::exp(x * x) * etaint::erfc(x)) < 1e-12);
    const double x = 30;
    CHECK(rel_diff(erfcx(x), (1 - 0.5 / (x * x) + 0.75 / std::pow(x, 4)) / (x * kSqrtPi)) < 1e-8);
}

TEST_CASE("error signals") {
    CHECK_THROWS_AS(etaint::gamma(Complex(0, 0)), PoleError);
    CHECK_THROWS_AS(etaint::gamma(Complex(-3, 0)), PoleError);
    CHECK_THROWS_AS(polygamma(0, Complex(-2, 0)), PoleError);
    CHECK_THROWS_AS(polygamma(5, Complex(1, 0)), UnsupportedOrder);
    CHECK_THROWS_AS(hurwitz_zeta(1, 0.5), PoleError);
    CHECK_THROWS_AS(hurwitz_zeta(2, -0.5), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta_sderiv(1, 0.5), PoleError);
    CHECK_THROWS_AS(euler_number(34), OverflowError);
    CHECK_THROWS_AS(stieltjes_gamma1(0), DomainError);
    CHECK_THROWS_AS(stieltjes_gamma1(-1), DomainError);
}
