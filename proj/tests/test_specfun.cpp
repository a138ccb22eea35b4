#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lagcal/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace lagcal;

namespace {
// First positive zero of C0: (j_{0,1}/2)^2 where j_{0,1} is the first zero
// of the Bessel function J0.
constexpr double kFirstC0Zero = 1.4457964907366961303;
} // namespace

TEST_CASE("gamma matches factorials, half-integers, and reflection") {
    CHECK(lagcal::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lagcal::gamma(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lagcal::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(lagcal::gamma(11.0) == doctest::Approx(3628800.0).epsilon(1e-14));
    const double rpi = std::sqrt(std::numbers::pi);
    CHECK(lagcal::gamma(0.5) == doctest::Approx(rpi).epsilon(1e-14));
    CHECK(lagcal::gamma(1.5) == doctest::Approx(0.5 * rpi).epsilon(1e-14));
    CHECK(lagcal::gamma(-0.5) == doctest::Approx(-2.0 * rpi).epsilon(1e-13));
    CHECK(lagcal::gamma(-1.5) == doctest::Approx(4.0 / 3.0 * rpi).epsilon(1e-13));
    // Gamma(2)/Gamma(1.5) appears in the fractional power rule; frozen value.
    CHECK(lagcal::gamma(2.0) / lagcal::gamma(1.5) == doctest::Approx(1.1283791670955125739).epsilon(1e-14));
    CHECK_THROWS_AS(lagcal::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(lagcal::gamma(-3.0), std::domain_error);
    CHECK_THROWS_AS(lagcal::gamma(std::nan("")), std::domain_error);
}

TEST_CASE("log_gamma agrees with the standard library") {
    for (double z : {0.1, 0.5, 1.0, 2.5, 10.0, 42.0, 171.0})
        CHECK(log_gamma(z) == doctest::Approx(std::lgamma(z)).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
}

TEST_CASE("tricomi c0 matches the Bessel J0/I0 oracle") {
    CHECK(tricomi_c0(0.0) == 1.0);
    // Frozen reference value for C0(1).
    CHECK(tricomi_c0(1.0) == doctest::Approx(0.22389077914123566805).epsilon(1e-14));
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double oracle = std::cyl_bessel_j(0.0, 2.0 * std::sqrt(x));
        CHECK(tricomi_c0(x) == doctest::Approx(oracle).epsilon(1e-12));
    }
    for (double x : {-0.5, -1.0, -3.0}) {
        const double oracle = std::cyl_bessel_i(0.0, 2.0 * std::sqrt(-x));
        CHECK(tricomi_c0(x) == doctest::Approx(oracle).epsilon(1e-12));
    }
    CHECK(std::abs(tricomi_c0(kFirstC0Zero)) < 1e-13);
    CHECK_THROWS_AS(tricomi_c0(100.0), std::domain_error);
    SeriesEvalPolicy wide;
    wide.arg_bound = 200.0;
    wide.max_terms = 96;
    CHECK(tricomi_c0(100.0, wide) ==
          doctest::Approx(std::cyl_bessel_j(0.0, 20.0)).epsilon(1e-10));
}

TEST_CASE("series policy validation") {
    SeriesEvalPolicy p;
    CHECK_NOTHROW(p.validate());
    p.max_terms = 4;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.rel_stop = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.arg_bound = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("mittag-leffler special cases and the erfc oracle") {
    CHECK(mittag_leffler(0.5, 0.0) == 1.0);
    CHECK(mittag_leffler(1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(mittag_leffler(1.0, -1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
    // E_{1/2}(z) = exp(z^2) erfc(-z); the stdlib erfc is an independent route.
    CHECK(mittag_leffler(0.5, -1.0) ==
          doctest::Approx(std::exp(1.0) * std::erfc(1.0)).epsilon(1e-13));
    CHECK(mittag_leffler(0.5, 1.0) ==
          doctest::Approx(std::exp(1.0) * std::erfc(-1.0)).epsilon(1e-13));
    // Frozen reference value for E_{1/2}(-1).
    CHECK(mittag_leffler(0.5, -1.0) ==
          doctest::Approx(0.4275835761558070044).epsilon(1e-13));
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(1.2, 1.0), std::domain_error);
    CHECK_THROWS_AS(mittag_leffler(0.5, 40.0), std::domain_error);
}

TEST_CASE("hyper-bessel W degenerations and frozen value") {
    // W_{1,1,1}(t) = C0(-t): checked across [0, 5] and at negative arguments.
    for (double t = 0.0; t <= 5.0; t += 0.25) {
        const double w = hyper_bessel_w(1.0, 1.0, 1.0, t);
        const double c0 = tricomi_c0(-t);
        CHECK(std::abs(w - c0) <= 1e-12 * std::max(1.0, std::abs(c0)));
    }
    for (double s : {-2.0, -1.0, -0.5}) {
        const double w = hyper_bessel_w(1.0, 1.0, 1.0, s);
        CHECK(w == doctest::Approx(tricomi_c0(-s)).epsilon(1e-12));
    }
    // Frozen reference value for W_{1/2,1/2,1/2}(1).
    CHECK(hyper_bessel_w(0.5, 0.5, 0.5, 1.0) ==
          doctest::Approx(4.2170190603275129286).epsilon(1e-13));
    // W(0) = 1/Gamma(1 - alpha + nu).
    CHECK(hyper_bessel_w(0.5, 0.5, 1.0, 0.0) ==
          doctest::Approx(1.0 / lagcal::gamma(1.5)).epsilon(1e-14));
    CHECK_THROWS_AS(hyper_bessel_w(0.0, 0.5, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(hyper_bessel_w(0.5, 1.2, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(hyper_bessel_w(0.5, 0.5, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(hyper_bessel_w(0.5, 0.5, 1.0, 40.0), std::domain_error);
}

TEST_CASE("two-variable laguerre polynomials: small-degree closed forms") {
    CHECK(laguerre_poly(0, 2.0, 3.0) == 1.0);
    // L1(x,y) = y - x.
    CHECK(laguerre_poly(1, 2.0, 3.0) == doctest::Approx(1.0).epsilon(1e-14));
    // L2(x,y) = y^2 - 2xy + x^2/2.
    CHECK(laguerre_poly(2, 1.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(laguerre_poly(2, 2.0, 0.5) == doctest::Approx(0.25 - 2.0 + 2.0).epsilon(1e-13));
    // Homogeneity L_n(cx, cy) = c^n L_n(x, y).
    const double base = laguerre_poly(5, 0.5, 1.0);
    CHECK(laguerre_poly(5, 1.0, 2.0) == doctest::Approx(32.0 * base).epsilon(1e-13));
    // y = 0 leaves only the top term (-x)^n / n!.
    CHECK(laguerre_poly(3, 2.0, 0.0) == doctest::Approx(-8.0 / 6.0).epsilon(1e-14));
    CHECK_THROWS_AS(laguerre_poly(-1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(laguerre_poly(171, 1.0, 1.0), std::domain_error);
}

TEST_CASE("laguerre polynomial large-degree route is consistent") {
    // n = 25 exercises the log-magnitude branch; the terminating-series
    // route through l_n and repeated lowering is checked in the series
    // tests, so here the polynomial is pinned against direct summation
    // with long-double accumulation.
    const double x = 0.8, y = 1.1;
    long double sum = 0.0L;
    long double max_term = 0.0L;
    long double fact_n = 1.0L;
    for (int i = 2; i <= 25; ++i) fact_n *= i;
    for (int r = 0; r <= 25; ++r) {
        long double fr = 1.0L, fnr = 1.0L;
        for (int i = 2; i <= r; ++i) fr *= i;
        for (int i = 2; i <= 25 - r; ++i) fnr *= i;
        long double term = fact_n / (fr * fr * fnr);
        term *= std::pow((long double)(-x), r) * std::pow((long double)y, 25 - r);
        sum += term;
        max_term = std::max(max_term, std::abs(term));
    }
    // Alternating sum: bound the route difference by the largest term, not
    // the (possibly cancelled) result.
    const double diff = std::abs(laguerre_poly(25, x, y) - static_cast<double>(sum));
    CHECK(diff <= 1e-12 * static_cast<double>(max_term));
}

TEST_CASE("lowering basis values") {
    CHECK(lower_l(0, 3.0) == 1.0);
    CHECK(lower_l(1, 3.0) == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(lower_l(3, 2.0) == doctest::Approx(-8.0 / 6.0).epsilon(1e-14));
    CHECK(lower_l(4, 0.0) == 0.0);
    CHECK(lower_l(0, 0.0) == 1.0);
    // Large degree via the log route against lgamma arithmetic.
    const double expect = -std::exp(25.0 * std::log(1.5) - std::lgamma(26.0));
    CHECK(lower_l(25, 1.5) == doctest::Approx(expect).epsilon(1e-13));
    CHECK_THROWS_AS(lower_l(-1, 1.0), std::domain_error);
}
