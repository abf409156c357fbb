#include "doctest.h"

#include <random>

#include "bcert/poly.hpp"

using namespace bcert::poly;
using bcert::exact::Rational;

namespace {
Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    return Rational(num(rng), den(rng));
}

Poly rand_poly(std::mt19937_64& rng, size_t len) {
    Poly f;
    f.reserve(len);
    for (size_t i = 0; i < len; ++i) f.push_back(rand_rational(rng));
    return f;
}
}  // namespace

TEST_SUITE("poly") {

TEST_CASE("degree, trim, and basic ops") {
    Poly f{Rational(1), Rational(0), Rational(3)};
    CHECK(degree(f) == 2);
    CHECK(degree(Poly{Rational(0), Rational(0)}) == -1);
    CHECK(trimmed(Poly{Rational(1), Rational(0)}).size() == 1);

    Poly g{Rational(2), Rational(1)};
    Poly sum = poly_add(f, g);
    CHECK(sum == Poly{Rational(3), Rational(1), Rational(3)});
    Poly prod = poly_mul(f, g);  // (1 + 3s^2)(2 + s) = 2 + s + 6s^2 + 3s^3
    CHECK(prod == Poly{Rational(2), Rational(1), Rational(6), Rational(3)});
    CHECK(poly_derivative(f) == Poly{Rational(0), Rational(6)});
    CHECK(poly_shift(g, 2) == Poly{Rational(0), Rational(0), Rational(2), Rational(1)});
    CHECK(poly_scale(g, Rational(1, 2)) == Poly{Rational(1), Rational(1, 2)});
    CHECK(poly_mul(Poly{}, g).empty());
    CHECK(poly_derivative(Poly{Rational(5)}).empty());
}

TEST_CASE("coefficient vector from tail") {
    auto cv = CoeffVector::from_tail({Rational(-1), Rational(2, 3)});
    CHECK(cv.d == 2);
    REQUIRE(cv.a.size() == 3);
    CHECK(cv.a[0] == Rational(0));
    CHECK(cv.a[1] == Rational(-1));
    CHECK(cv.a[2] == Rational(2, 3));
}

TEST_CASE("expand_alpha shape and simple values") {
    // constant profile f = a0: alpha reduces to (n+1) a0^2
    std::vector<Rational> alpha = expand_alpha(Poly{Rational(3)}, 35L);
    REQUIRE(alpha.size() == 1);
    CHECK(alpha[0] == Rational(36 * 9));
    // linear profile f = a0 + a1 s against the hand expansion
    Poly f{Rational(2), Rational(-5)};
    std::vector<Rational> a = expand_alpha(f, 7L);
    REQUIRE(a.size() == 3);
    CHECK(a[0] == Rational(8) * Rational(4));                       // (n+1) a0^2
    CHECK(a[1] == Rational(2 * 10) * Rational(2) * Rational(-5));   // 2(n+3) a0 a1
    CHECK(a[2] == Rational(14) * Rational(25));                     // (n+7) a1^2
    CHECK_THROWS_AS(expand_alpha(f, 2L), std::invalid_argument);
}

TEST_CASE("expand_beta shape and simple values") {
    CHECK(expand_beta(Poly{Rational(9)}).empty());
    // f = a0 + a1 s: beta = (2 a0 a1, a1 + 2 a1^2)
    std::vector<Rational> b = expand_beta(Poly{Rational(2), Rational(-5)});
    REQUIRE(b.size() == 2);
    CHECK(b[0] == Rational(2) * Rational(2) * Rational(-5));
    CHECK(b[1] == Rational(-5) + Rational(2) * Rational(25));
}

TEST_CASE("degree-6 hand tables match the generic expansion") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = rand_poly(rng, 7);
        for (long n : {35L, 48L, 62L}) {
            std::vector<Rational> coeffs(a.begin(), a.end());
            CHECK(expand_alpha(a, n) == alpha_d6_table(coeffs, n));
            CHECK(expand_beta(a) == beta_d6_table(coeffs));
        }
    }
    CHECK_THROWS_AS(alpha_d6_table({Rational(1)}, 35L), std::invalid_argument);
    CHECK_THROWS_AS(beta_d6_table({Rational(1)}), std::invalid_argument);
}

TEST_CASE("built-in tails") {
    auto d6 = builtin_tail_d6();
    REQUIRE(d6.size() == 6);
    CHECK(d6[0] == Rational(-10));
    CHECK(d6[1] == Rational(1, 10000));
    CHECK(d6[2] == Rational(-1, 1000));
    CHECK(d6[3] == Rational(23, 125));
    CHECK(d6[4] == Rational(-53, 2000));
    CHECK(d6[5] == Rational(737, 1000000));
    auto d1 = builtin_tail_d1();
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == Rational(-1));
}

}  // TEST_SUITE
