#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcert/assembly.hpp"
#include "bcert/interval.hpp"
#include "bcert/moments.hpp"
#include "bcert/quadext.hpp"

namespace bcert::certify {

using exact::QuadExt;
using exact::RatInterval;
using exact::Rational;
using exact::Sign;

struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};

// One certified quantity: its exact value in the working quadratic field
// (exact mode) or its enclosure (interval mode), plus the decided sign.
struct CertifiedValue {
    std::optional<QuadExt> exact;
    std::optional<RatInterval> interval;
    Sign sign = Sign::Indeterminate;
    bool structural = false;  // interval-mode I'(1): zero by construction of a0
};

enum class Mode { Exact, Interval };
enum class Overall { Pass, Fail, Indeterminate };

// Machine verification record for one (n, T_c-range): the discriminant and
// root of the a0-quadratic and the four sign conditions
//   discrim > 0,  I(1) > 0,  I'(1) = 0,  I''(1) < 0,  J(1) < 0.
struct Certificate {
    long n = 0;
    long d = 0;
    std::vector<Rational> tail;  // a_1..a_d
    Rational tc_lo, tc_hi;
    Mode mode = Mode::Exact;

    std::optional<Rational> disc_exact;
    std::optional<RatInterval> disc_interval;
    Sign disc_sign = Sign::Indeterminate;

    std::optional<QuadExt> a0_exact;
    std::optional<RatInterval> a0_interval;

    CertifiedValue i1, iprime1, idoubleprime1, j1;

    struct Verdicts {
        bool disc_positive = false;
        bool i1_positive = false;
        bool iprime1_zero = false;
        bool idoubleprime1_negative = false;
        bool j1_negative = false;
    } verdicts;
    Overall overall = Overall::Indeterminate;

    long elapsed_ms = 0;

    bool passed() const { return overall == Overall::Pass; }
};

// Largest root (-B + sqrt(B^2 - 4AC)) / (2A) of an upward parabola, exact.
// Throws no_real_root if the discriminant is not positive.
struct no_real_root : std::domain_error {
    using std::domain_error::domain_error;
};
QuadExt largest_root(const QuadraticInA0<Rational>& quad);

// Outward enclosure of the largest root over the (A, B, C) boxes; nullopt when
// the discriminant or leading-coefficient box is not sign-definite.
std::optional<RatInterval> largest_root_interval(const QuadraticInA0<RatInterval>& quad,
                                                 const Rational& precision);

// Exact-mode certification at T_c = 0: every quantity lives in the single
// quadratic field Q(sqrt(discriminant)) and all signs are decided exactly.
// A nonzero (negative, rational) Tc delegates to certify_interval on [Tc, Tc].
Certificate certify_dimension(long n, const std::vector<Rational>& tail,
                              const Rational& Tc = Rational(0));

// Interval-mode certification over a T_c range: the three strict inequalities
// plus discriminant positivity are certified to hold simultaneously for every
// t in Tc; I'(1) = 0 is structural (a0 is the root for each t).  Indeterminate
// enclosures trigger automatic bisection of Tc up to split_depth before an
// indeterminate verdict is reported; a definitively violated sign anywhere in
// the range yields Fail.
Certificate certify_interval(long n, const std::vector<Rational>& tail,
                             const RatInterval& Tc, const Rational& precision,
                             int split_depth = 20);

// Largest certified c with T_c = -c/(n-2): grows then bisects the endpoint
// t = c/(n-2), certifying [-t, 0] at each probe; deterministic, and monotone
// under precision refinement (enclosures are nested).  The passing certificate
// for the returned bound is attached.
struct CbarResult {
    Rational cbar;
    Certificate certificate;
};
CbarResult find_cbar(long n, const std::vector<Rational>& tail, const Rational& precision);

// Degree-1 pipeline with tail a_1 = -1 at T_c = 0 (the classical single-slope
// profile); requires n >= 31.
Certificate certify_degree1(long n);

}  // namespace bcert::certify
