#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "etaint/errors.hpp"
#include "etaint/eta.hpp"
#include "etaint/special.hpp"
#include "reference_values.hpp"
#include "support.hpp"

using namespace etaint;
using etaint::testing::Gen;
using etaint::testing::rel_diff;
namespace R = etaint::testref;

const Complex I(0, 1);

TEST_CASE("eta references") {
    CHECK(rel_diff(eta(I), Complex(R::kEtaIRe, R::kEtaIIm)) < 1e-14);
    CHECK(rel_diff(eta(I).real(), etaint::gamma(0.25) / (2 * std::pow(kPi, 0.75))) < 1e-14);
    CHECK(rel_diff(eta(2.0 * I), Complex(R::kEta2IRe, R::kEta2IIm)) < 1e-14);
    CHECK(rel_diff(eta(Complex(0.3, 0.8)), Complex(R::kEta0p3P0p8IRe, R::kEta0p3P0p8IIm)) < 1e-13);
    CHECK(rel_diff(eta(Complex(1, 0.1)), Complex(R::kEta1P0p1IRe, R::kEta1P0p1IIm)) < 1e-13);
    CHECK(rel_diff(eta(Complex(0.5, 0.3)), Complex(R::kEta0p5P0p3IRe, R::kEta0p5P0p3IIm)) < 1e-13);
    CHECK(rel_diff(eta(Complex(0, 0.05)), Complex(R::kEta0p05IRe, R::kEta0p05IIm)) < 1e-13);
    CHECK(rel_diff(eta(Complex(-0.37, 0.04)), Complex(R::kEtaM0p37P0p04IRe, R::kEtaM0p37P0p04IIm)) < 1e-13);
    CHECK(rel_diff(eta(Complex(0.2, 0.5)), Complex(R::kEta0p2P0p5IRe, R::kEta0p2P0p5IIm)) < 1e-13);
}

TEST_CASE("eta transformation laws at the documented points") {
    const Complex t(0.3, 0.8);
    CHECK(rel_diff(eta(t + 1.0), std::exp(I * kPi / 12.0) * eta(t)) < 1e-13);
    const Complex u = 2.0 * I;
    CHECK(rel_diff(eta(-1.0 / u), std::sqrt(-I * u) * eta(u)) < 1e-13);
}

TEST_CASE("functional equation on random tau") {
    Gen g(0xe7a1);
    for (int i = 0; i < 50; ++i) {
        const Complex t(g.uniform(-2, 2), g.uniform(0.3, 3));
        const Complex lhs = eta(-1.0 / t);
        const Complex rhs = std::sqrt(-I * t) * eta(t);
        CHECK_MESSAGE(std::abs(lhs - rhs) <= 1e-12 * std::abs(eta(t)), "tau = " << t);
    }
}

TEST_CASE("quasi-periodicity") {
    for (double x : {0.1, 0.6, 1.5}) {
        const Complex base = eta(x * I);
        for (int j = 1; j <= 6; ++j) {
            CHECK(rel_diff(eta(x * I + double(j)), std::exp(I * (kPi * j / 12)) * base) < 1e-13);
            CHECK(rel_diff(eta(x * I - double(j)), std::exp(-I * (kPi * j / 12)) * base) < 1e-13);
        }
    }
}

TEST_CASE("unilateral and bilateral series agree") {
    Gen g(0xb11a);
    for (int i = 0; i < 30; ++i) {
        const Complex t(g.uniform(-0.5, 0.5), g.uniform(0.4, 3));
        CHECK_MESSAGE(rel_diff(eta(t), eta_bilateral(t)) < 1e-13, "tau = " << t);
    }
}

TEST_CASE("eta cubed") {
    CHECK(rel_diff(eta_cubed(1), R::kEtaCubedAt1) < 1e-14);
    for (double x : {0.5, 1.0, 3.0}) CHECK(std::fabs(eta_cubed(x) - std::pow(eta_ix(x), 3)) < 1e-13);
    for (double x : {0.3, 1.0, 2.0, 5.0}) CHECK(rel_diff(eta_cubed(x), std::pow(eta(x * I), 3)) < 1e-12);
    CHECK(std::fabs(eta_cubed(20) * std::exp(kPi * 20 / 4) - 1) < 1e-10);
    // both sides of the inversion threshold
    for (double x : {0.05, 0.2, 0.2499, 0.25, 0.26}) {
        CHECK(rel_diff(eta_cubed(x), std::pow(x, -1.5) * eta_cubed(1 / x)) < 1e-13);
        CHECK(rel_diff(eta_cubed(x), eta_cubed_unreduced(x)) < 1e-11);
    }
}

TEST_CASE("eta powers") {
    for (double x : {0.2, 1.0, 4.0}) {
        const Complex e = eta(x * I);
        CHECK(std::fabs(e.imag()) < 1e-15);
        CHECK(rel_diff(eta_power(1, x), e.real()) < 1e-13);
    }
    CHECK(rel_diff(eta_power(6, 1), std::pow(R::kEtaIRe, 6)) < 6e-13);
    CHECK(rel_diff(eta_power(14, 0.5), R::kEta14AtHalf) < 14e-13);
    const double prod = eta_product(TauPoint(0.5 * I), 400).value.real();
    CHECK(eta_power(14, 0.5) > 0);
    CHECK(rel_diff(eta_power(14, 0.5), std::pow(prod, 14)) < 1e-12);
    for (int n = 1; n <= 26; ++n) CHECK(rel_diff(eta_power(n, 0.7), std::pow(eta_ix(0.7), n)) < n * 1e-13);
}

TEST_CASE("positivity on the imaginary axis") {
    Gen g(0x905);
    for (int i = 0; i < 200; ++i) {
        const double x = std::exp(g.uniform(std::log(0.02), std::log(50.0)));
        CHECK(eta_ix(x) > 0);
        CHECK(eta_cubed(x) > 0);
    }
}

TEST_CASE("product form") {
    CHECK(rel_diff(eta_product(TauPoint(I), 200).value, eta(I)) < 1e-13);
    const Complex t(0.5, 0.3);
    CHECK(rel_diff(eta_product(TauPoint(t), 400).value, eta(t)) < 1e-12);
    const auto small = eta_product(TauPoint(0.05 * I), 4000);
    CHECK(rel_diff(small.value, eta(0.05 * I)) < 1e-10);
    CHECK(small.method == EtaMethod::product);
}

TEST_CASE("reduction") {
    const auto r0 = reduce(TauPoint(2.0 * I));
    CHECK(r0.point.tau == 2.0 * I);
    CHECK(std::abs(r0.multiplier - 1.0) < 1e-15);
    CHECK(r0.steps == 0);

    const auto r1 = reduce(TauPoint(0.25 * I));
    CHECK(std::abs(r1.point.tau - 4.0 * I) < 1e-14);
    CHECK(rel_diff(eta(0.25 * I), 2.0 * eta(4.0 * I)) < 1e-13);
    CHECK(rel_diff(eta(0.25 * I), r1.multiplier * eta(r1.point.tau)) < 1e-13);

    const Complex t(1, 0.1);
    const auto r2 = reduce(TauPoint(t));
    CHECK(std::fabs(r2.point.tau.real()) <= 0.5 + 1e-15);
    CHECK(std::abs(r2.point.tau) >= 1 - 1e-15);
    CHECK(r2.point.tau.imag() >= std::sqrt(3.0) / 2 - 1e-15);
    CHECK(rel_diff(eta(t), r2.multiplier * eta(r2.point.tau)) < 1e-12);

    const auto ev = eta(TauPoint(Complex(0.1, 0.1)));
    CHECK(ev.method == EtaMethod::reduced);
    CHECK(eta(TauPoint(I)).method != EtaMethod::reduced);
}

TEST_CASE("tail bounds") {
    for (double y : {0.25, 0.5, 1.0, 3.0}) {
        const auto v = eta(TauPoint(Complex(0.1, y)));
        CHECK(v.tail_bound >= 0);
        CHECK(v.tail_bound <= 1e-15 * std::abs(v.value));
    }
}

TEST_CASE("eta error signals") {
    CHECK_THROWS_AS(eta(Complex(0.3, 0)), DomainError);
    CHECK_THROWS_AS(eta(Complex(0.3, -1)), DomainError);
    CHECK_THROWS_AS(eta_cubed(0), DomainError);
    CHECK_THROWS_AS(eta_power(27, 1), DomainError);
    CHECK_THROWS_AS(eta_power(0, 1), DomainError);
    CHECK_THROWS_AS(eta_product(TauPoint(0.01 * I), 100), DomainError);
}
