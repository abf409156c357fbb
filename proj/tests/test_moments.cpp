#include "doctest.h"

#include <cmath>

#include "bcert/interval.hpp"
#include "bcert/moments.hpp"

using namespace bcert::moments;
using bcert::exact::enclose_pi;
using bcert::exact::RatInterval;
using bcert::exact::Rational;

TEST_SUITE("moments") {

TEST_CASE("exact values at the origin") {
    // odd n carries the common transcendental factor; even n is plain rational
    MomentZero c12_35 = moment_zero(35, 12);
    CHECK(c12_35.kappa_is_pi);
    CHECK(c12_35.r == Rational(3, 16));
    MomentZero c12_36 = moment_zero(36, 12);
    CHECK_FALSE(c12_36.kappa_is_pi);
    CHECK(c12_36.r == Rational(8, 15));
    // q = 0 base cases: integral of (1+t^2)^((5-n)/2)
    CHECK(moment_zero(7, 0).r == Rational(1, 2));   // arctan-family base
    CHECK(moment_zero(8, 0).r == Rational(1));      // odd-exponent base
}

TEST_CASE("row shares one kappa tag") {
    std::vector<Rational> row = moment_zero_row(35, 12);
    REQUIRE(row.size() == 13);
    CHECK(row[12] == Rational(3, 16));
    for (long q = 0; q <= 12; ++q) CHECK(row[static_cast<size_t>(q)] == moment_zero(35, q).r);
}

TEST_CASE("divergent parameters throw") {
    CHECK_THROWS_AS(moment_zero(35, 15), divergent_moment);  // n-6-2q = -1
    CHECK_THROWS_AS(moment_zero(36, 15), divergent_moment);  // n-6-2q = 0
    CHECK_THROWS_AS(moment_general(35, 15, RatInterval(Rational(-1, 10)), Rational(1, 1000)),
                    divergent_moment);
}

TEST_CASE("quadrature oracle agrees with the exact origin values") {
    const double pi = 3.14159265358979323846;
    for (long n : {35L, 36L, 62L}) {
        for (long q : {0L, 4L, 9L, 12L}) {
            MomentZero mz = moment_zero(n, q);
            double exact = (mz.kappa_is_pi ? pi : 1.0) * mz.r.to_double();
            double quad = moment_quadrature(n, q, 0.0, 1e-12);
            CHECK(std::abs(quad - exact) / exact < 1e-9);
            double closed = moment_double(n, q, 0.0);
            CHECK(std::abs(closed - exact) / exact < 1e-12);
        }
    }
}

TEST_CASE("closed-form and quadrature oracles agree away from the origin") {
    for (long n : {35L, 36L}) {
        for (long q : {0L, 3L, 12L}) {
            for (double t : {-0.01, -0.3, -2.0}) {
                double a = moment_double(n, q, t);
                double b = moment_quadrature(n, q, t, 1e-12);
                CHECK(std::abs(a - b) / std::abs(a) < 1e-9);
            }
        }
    }
}

TEST_CASE("certified enclosure contains the oracle value") {
    Rational prec(1, 1 << 30);
    for (long n : {35L, 36L}) {
        for (long q : {0L, 5L, 12L}) {
            for (long den : {100L, 10L, 2L}) {
                RatInterval Tc(Rational(-1, den));
                MomentEnclosure enc = moment_general(n, q, Tc, prec);
                double oracle = moment_double(n, q, -1.0 / static_cast<double>(den));
                CHECK(enc.value.lo().to_double() - 1e-12 <= oracle);
                CHECK(oracle <= enc.value.hi().to_double() + 1e-12);
            }
        }
    }
}

TEST_CASE("enclosure at the origin contains kappa * r") {
    Rational prec(1, 1 << 30);
    RatInterval pi = enclose_pi(Rational(1, Rational(2).pow(48).num().get_si()));
    MomentEnclosure odd = moment_general(35, 12, RatInterval(Rational(0)), prec);
    CHECK(odd.value.contains((pi * RatInterval(Rational(3, 16))).lo()));
    MomentEnclosure even = moment_general(36, 12, RatInterval(Rational(0)), prec);
    CHECK(even.value.contains(Rational(8, 15)));
}

TEST_CASE("enclosures nest under precision and argument refinement") {
    RatInterval wide(Rational(-1, 4), Rational(0));
    RatInterval narrow(Rational(-1, 8), Rational(-1, 16));
    Rational prec(1, 1 << 20);
    MomentEnclosure coarse = moment_general(35, 3, wide, prec);
    MomentEnclosure finer_prec = moment_general(35, 3, wide, prec / 1024);
    CHECK(coarse.value.contains(finer_prec.value));
    MomentEnclosure sub = moment_general(35, 3, narrow, prec);
    CHECK(coarse.value.contains(sub.value));
}

TEST_CASE("enclosure width scales with the requested precision") {
    RatInterval point(Rational(-1, 10));
    Rational prec(1, 1 << 16);
    MomentEnclosure e = moment_general(36, 2, point, prec);
    CHECK(e.value.width() <= prec);
    MomentEnclosure e2 = moment_general(36, 2, point, prec / 4096);
    CHECK(e2.value.width() <= prec / 4096);
}

TEST_CASE("positive ranges are rejected") {
    CHECK_THROWS_AS(moment_general(35, 0, RatInterval(Rational(1, 10)), Rational(1, 1000)),
                    std::domain_error);
    CHECK_THROWS_AS(
        moment_general(35, 0, RatInterval(Rational(-1), Rational(1, 10)), Rational(1, 1000)),
        std::domain_error);
}

TEST_CASE("row enclosure matches the single-q entry") {
    Rational prec(1, 1 << 20);
    RatInterval Tc(Rational(-1, 50), Rational(0));
    std::vector<RatInterval> row = moment_general_row(35, 12, Tc, prec);
    REQUIRE(row.size() == 13);
    for (long q : {0L, 7L, 12L})
        CHECK(row[static_cast<size_t>(q)] == moment_general(35, q, Tc, prec).value);
}

}  // TEST_SUITE
