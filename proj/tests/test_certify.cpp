#include "doctest.h"

#include <cmath>

#include "bcert/certify.hpp"
#include "bcert/poly.hpp"
#include "bcert/search.hpp"

using namespace bcert::certify;
using bcert::exact::QuadExt;
using bcert::exact::RatInterval;
using bcert::exact::Rational;
using bcert::exact::Sign;
using bcert::poly::builtin_tail_d1;
using bcert::poly::builtin_tail_d6;

TEST_SUITE("certify") {

TEST_CASE("largest_root on a factorable quadratic") {
    // x^2 - 3x + 2 = (x-1)(x-2): largest root 2, and it is exactly rational
    QuadraticInA0<Rational> q{Rational(1), Rational(-3), Rational(2)};
    QuadExt root = largest_root(q);
    REQUIRE(root.rational_value());
    CHECK(*root.rational_value() == Rational(2));
    // x^2 - 2: largest root sqrt(2), irrational
    QuadraticInA0<Rational> q2{Rational(1), Rational(0), Rational(-2)};
    QuadExt r2 = largest_root(q2);
    CHECK(r2.rational_value() == std::nullopt);
    CHECK((r2 * r2) == QuadExt(Rational(2)));
    CHECK(r2.sign() == Sign::Positive);
}

TEST_CASE("largest_root rejects degenerate quadratics") {
    CHECK_THROWS_AS(largest_root(QuadraticInA0<Rational>{Rational(1), Rational(0), Rational(1)}),
                    no_real_root);  // negative discriminant
    CHECK_THROWS_AS(largest_root(QuadraticInA0<Rational>{Rational(1), Rational(2), Rational(1)}),
                    no_real_root);  // zero discriminant (double root) is not accepted
    CHECK_THROWS_AS(largest_root(QuadraticInA0<Rational>{Rational(-1), Rational(0), Rational(2)}),
                    no_real_root);  // downward parabola
}

TEST_CASE("largest_root_interval encloses the exact root") {
    QuadraticInA0<RatInterval> q{RatInterval(1), RatInterval(-3), RatInterval(2)};
    auto root = largest_root_interval(q, Rational(1, 1 << 20));
    REQUIRE(root);
    CHECK(root->contains(Rational(2)));
    // indefinite discriminant box yields no enclosure
    QuadraticInA0<RatInterval> bad{RatInterval(1), RatInterval(Rational(-1), Rational(1)),
                                   RatInterval(0)};
    CHECK_FALSE(largest_root_interval(bad, Rational(1, 1024)));
}

TEST_CASE("exact certification passes at the endpoints of the dimension range") {
    for (long n : {35L, 62L}) {
        Certificate cert = certify_dimension(n, builtin_tail_d6());
        CHECK(cert.passed());
        CHECK(cert.mode == Mode::Exact);
        CHECK(cert.disc_sign == Sign::Positive);
        CHECK(cert.verdicts.disc_positive);
        CHECK(cert.verdicts.i1_positive);
        CHECK(cert.verdicts.iprime1_zero);
        CHECK(cert.verdicts.idoubleprime1_negative);
        CHECK(cert.verdicts.j1_negative);
        REQUIRE(cert.a0_exact);
        REQUIRE(cert.disc_exact);
        CHECK(cert.disc_exact->sign() > 0);
        // the root is genuinely irrational here
        CHECK(cert.a0_exact->rational_value() == std::nullopt);
    }
}

TEST_CASE("the exact root satisfies its quadratic identically") {
    Certificate cert = certify_dimension(35, builtin_tail_d6());
    REQUIRE(cert.a0_exact);
    // I'(1) evaluated at the chosen a0 is structurally zero
    CHECK(cert.iprime1.sign == Sign::Zero);
    CHECK(cert.verdicts.iprime1_zero);
    // numeric sanity on the root's magnitude
    double a0 = cert.a0_exact->to_double();
    CHECK(a0 == doctest::Approx(18.394161365573506).epsilon(1e-12));
    Certificate c62 = certify_dimension(62, builtin_tail_d6());
    CHECK(c62.a0_exact->to_double() == doctest::Approx(19.941260165698019).epsilon(1e-12));
}

TEST_CASE("degree-1 pipeline") {
    Certificate cert = certify_degree1(62);
    CHECK(cert.passed());
    CHECK(cert.d == 1);
    CHECK(cert.tail.size() == 1);
    CHECK(cert.tail[0] == Rational(-1));
    CHECK_THROWS_AS(certify_degree1(30), precondition_error);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(certify_dimension(30, builtin_tail_d6()), degree_constraint_error);
    CHECK_THROWS_AS(certify_dimension(35, builtin_tail_d6(), Rational(1, 10)),
                    std::domain_error);  // positive range parameter
    CHECK_THROWS_AS(certify_interval(35, builtin_tail_d6(),
                                     RatInterval(Rational(-1, 10), Rational(1, 10)),
                                     Rational(1, 1000)),
                    std::domain_error);
    CHECK_THROWS_AS(certify_interval(35, builtin_tail_d6(), RatInterval(Rational(0)),
                                     Rational(0)),
                    std::invalid_argument);  // nonpositive precision
}

TEST_CASE("zero-width range at the origin degenerates to the exact mode") {
    Certificate exact = certify_dimension(35, builtin_tail_d6());
    Certificate degen =
        certify_interval(35, builtin_tail_d6(), RatInterval(Rational(0)), Rational(1, 1000000));
    CHECK(degen.mode == Mode::Exact);
    CHECK(degen.passed() == exact.passed());
    CHECK(degen.verdicts.disc_positive == exact.verdicts.disc_positive);
    CHECK(degen.verdicts.i1_positive == exact.verdicts.i1_positive);
    CHECK(degen.verdicts.iprime1_zero == exact.verdicts.iprime1_zero);
    CHECK(degen.verdicts.idoubleprime1_negative == exact.verdicts.idoubleprime1_negative);
    CHECK(degen.verdicts.j1_negative == exact.verdicts.j1_negative);
    REQUIRE(degen.a0_exact);
    CHECK(*degen.a0_exact == *exact.a0_exact);
}

TEST_CASE("interval certification over a negative range") {
    Certificate cert = certify_interval(35, builtin_tail_d6(),
                                        RatInterval(Rational(-1, 1 << 14), Rational(0)),
                                        Rational(1, 1000000));
    CHECK(cert.passed());
    CHECK(cert.mode == Mode::Interval);
    CHECK(cert.verdicts.disc_positive);
    CHECK(cert.verdicts.i1_positive);
    CHECK(cert.verdicts.iprime1_zero);
    CHECK(cert.verdicts.idoubleprime1_negative);
    CHECK(cert.verdicts.j1_negative);
    CHECK(cert.tc_lo == Rational(-1, 1 << 14));
    CHECK(cert.tc_hi == Rational(0));
}

TEST_CASE("point interval away from the origin") {
    Certificate cert = certify_dimension(35, builtin_tail_d6(), Rational(-1, 1024));
    CHECK(cert.passed());
    CHECK(cert.mode == Mode::Interval);
    REQUIRE(cert.a0_interval);
    // enclosure is conservative: the floating margin at the same point agrees
    std::vector<double> tail_d;
    for (const auto& t : builtin_tail_d6()) tail_d.push_back(t.to_double());
    CHECK(bcert::search::feasibility_margin(35, tail_d, -1.0 / 1024.0) > 0.0);
}

TEST_CASE("interval enclosures contain the floating root") {
    Certificate cert = certify_dimension(35, builtin_tail_d6(), Rational(-1, 1024));
    REQUIRE(cert.a0_interval);
    double lo = cert.a0_interval->lo().to_double();
    double hi = cert.a0_interval->hi().to_double();
    CHECK(lo <= hi);
    // at this small offset the root moves only slightly from the origin value
    CHECK(lo < 18.45);
    CHECK(hi > 18.3);
}

TEST_CASE("a definitively violated range fails") {
    // Far from the origin the sign pattern breaks down for the built-in tail:
    // the discriminant is negative on all of [-3,-2], but only by ~1e-9..1e-14,
    // so resolving a definitive Fail (not merely Indeterminate) needs precision
    // well below that scale.
    Rational prec = Rational(1) / (Rational(1L << 30) * Rational(1L << 30));
    Certificate cert = certify_interval(35, builtin_tail_d6(),
                                        RatInterval(Rational(-3), Rational(-2)),
                                        prec, 6);
    CHECK(cert.overall == Overall::Fail);
}

TEST_CASE("find_cbar returns a certified positive bound") {
    CbarResult res = find_cbar(35, builtin_tail_d6(), Rational(1, 100));
    CHECK(res.cbar > Rational(0));
    CHECK(res.certificate.passed());
    // the attached certificate covers exactly [-cbar/(n-2), 0]
    CHECK(res.certificate.tc_lo == -res.cbar / Rational(33));
    CHECK(res.certificate.tc_hi == Rational(0));
    // refinement never shrinks the certified bound by more than the tolerance
    CbarResult finer = find_cbar(35, builtin_tail_d6(), Rational(1, 200));
    CHECK(finer.cbar >= res.cbar);
}

TEST_CASE("find_cbar requires a passing base point") {
    // a tail that fails at the origin cannot seed the growth loop
    std::vector<Rational> bad{Rational(1), Rational(1), Rational(1),
                              Rational(1), Rational(1), Rational(1)};
    CHECK_THROWS_AS(find_cbar(35, bad, Rational(1, 100)), precondition_error);
    CHECK_THROWS_AS(find_cbar(35, builtin_tail_d6(), Rational(0)), std::invalid_argument);
}

}  // TEST_SUITE
