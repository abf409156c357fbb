#include "doctest.h"

#include <cmath>

#include "bcert/poly.hpp"
#include "bcert/search.hpp"

using namespace bcert::search;
using bcert::exact::Rational;
using bcert::poly::builtin_tail_d1;
using bcert::poly::builtin_tail_d6;

namespace {
std::vector<double> to_doubles(const std::vector<Rational>& v) {
    std::vector<double> out;
    for (const auto& r : v) out.push_back(r.to_double());
    return out;
}
}  // namespace

TEST_SUITE("search") {

TEST_CASE("rationalize finds best approximations under the cap") {
    CHECK(rationalize(0.184) == Rational(23, 125));
    CHECK(rationalize(0.5) == Rational(1, 2));
    CHECK(rationalize(-0.25) == Rational(-1, 4));
    CHECK(rationalize(0.0) == Rational(0));
    CHECK(rationalize(3.0) == Rational(3));
    CHECK(rationalize(1.0 / 3.0, 10) == Rational(1, 3));
    // tight cap: best approximation to 1/3 with denominator <= 2 is 1/2
    CHECK(rationalize(1.0 / 3.0, 2) == Rational(1, 2));
    // negative values mirror positive ones
    CHECK(rationalize(-0.184) == Rational(-23, 125));
}

TEST_CASE("rationalize respects the denominator cap") {
    const double pi = 3.14159265358979323846;
    Rational r = rationalize(pi, 1000000);
    CHECK(r.den() <= 1000000);
    CHECK(std::abs(r.to_double() - pi) < 1e-9);
    Rational coarse = rationalize(pi, 100);
    CHECK(coarse.den() <= 100);
    CHECK(coarse == Rational(311, 99));  // best with denominator <= 100
}

TEST_CASE("feasibility margin of the built-in profiles") {
    double m35 = feasibility_margin(35, to_doubles(builtin_tail_d6()), 0.0);
    CHECK(m35 > 0.0);
    CHECK(m35 == doctest::Approx(1.0937e-4).epsilon(0.01));
    double m62 = feasibility_margin(62, to_doubles(builtin_tail_d1()), 0.0);
    CHECK(m62 > 0.0);
    CHECK(m62 == doctest::Approx(1.016139e-2).epsilon(0.01));
    // an infeasible profile reports a nonpositive margin
    CHECK(feasibility_margin(35, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0}, 0.0) <= 0.0);
}

TEST_CASE("margin degrades away from the origin") {
    std::vector<double> tail = to_doubles(builtin_tail_d6());
    double at0 = feasibility_margin(35, tail, 0.0);
    double at_far = feasibility_margin(35, tail, -0.5);
    CHECK(at0 > at_far);
}

TEST_CASE("rationalize_and_recheck certifies exactly") {
    Candidate c;
    c.n = 35;
    c.tail = to_doubles(builtin_tail_d6());
    c.margin = feasibility_margin(35, c.tail, 0.0);
    Candidate out = rationalize_and_recheck(c);
    REQUIRE(out.certified);
    CHECK(out.certified->passed());
    CHECK(out.tail_rational == builtin_tail_d6());
    // the recheck invariant: a certified candidate's certificate tail matches
    // its rationalized tail
    CHECK(out.certified->tail == out.tail_rational);
}

TEST_CASE("nonpositive floating margin skips the exact recheck") {
    Candidate c;
    c.n = 35;
    c.tail = {1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
    c.margin = feasibility_margin(35, c.tail, 0.0);
    Candidate out = rationalize_and_recheck(c);
    CHECK_FALSE(out.certified);
    CHECK_FALSE(out.note.empty());
    CHECK_FALSE(out.tail_rational.empty());
}

TEST_CASE("search is deterministic for a fixed seed") {
    auto run = [] { return search(6, 35, 2000, 7, 2); };
    std::vector<Candidate> a = run(), b = run();
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].tail_rational == b[i].tail_rational);
        CHECK(a[i].margin == b[i].margin);
        CHECK(a[i].certified.has_value() == b[i].certified.has_value());
    }
    // margins are reported best-first
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].margin >= a[i].margin);
}

TEST_CASE("certified candidates always carry a passing certificate") {
    std::vector<Candidate> got = search(6, 35, 4000, 42, 2);
    CHECK(!got.empty());
    for (const auto& c : got) {
        if (c.certified) {
            CHECK(c.certified->passed());
            CHECK(c.certified->tail == c.tail_rational);
            CHECK(c.margin > 0.0);
        }
    }
}

TEST_CASE("minimal budget still yields a candidate list") {
    std::vector<Candidate> got = search(6, 35, 1, 1, 1);
    CHECK(got.size() == 1);
}

TEST_CASE("search validates its arguments") {
    CHECK_THROWS_AS(search(6, 30, 10, 1), std::domain_error);  // degree constraint
    CHECK_THROWS_AS(search(0, 35, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(search(6, 35, 0, 1), std::invalid_argument);
}

TEST_CASE("report is byte-stable") {
    std::vector<Candidate> got = search(6, 35, 500, 3, 2);
    std::string a = search_report_json(6, 35, 500, 3, 1000000, got);
    std::string b = search_report_json(6, 35, 500, 3, 1000000, got);
    CHECK(a == b);
    CHECK(a.find("\"budget\": 500") != std::string::npos);
    CHECK(a.find("\"seed\": 3") != std::string::npos);
}

}  // TEST_SUITE
