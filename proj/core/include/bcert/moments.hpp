#pragma once

#include <stdexcept>
#include <vector>

#include "bcert/interval.hpp"
#include "bcert/rational.hpp"

namespace bcert::moments {

using exact::RatInterval;
using exact::Rational;

// The weight integrals c_q(T_c) = Integral_0^inf (1 + (t - T_c)^2)^((5+2q-n)/2) dt.
// Convergence requires n - 6 - 2q > 0.

struct divergent_moment : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact value at T_c = 0, as kappa * r with the common transcendental factor
// kappa carried as a tag: kappa = pi for odd n, 1 for even n.  kappa cancels in
// every sign decision, so the exact certification path consumes only r.
struct MomentZero {
    bool kappa_is_pi = false;
    Rational r;
};

MomentZero moment_zero(long n, long q);

// r-parts for q = 0..qmax (all with the same kappa tag for fixed n).
std::vector<Rational> moment_zero_row(long n, long qmax);

// Certified enclosure of { c_q(t) : t in Tc } for Tc.hi <= 0, including the
// kappa factor.  Uses the closed-form antiderivative of (1+u^2)^((5+2q-n)/2)
// (reduction recurrence with arctan / u/sqrt(1+u^2) base cases) evaluated with
// interval arithmetic; nested under refinement of Tc or precision.
struct MomentEnclosure {
    RatInterval value;
    long n = 0, q = 0;
    RatInterval Tc;
};

MomentEnclosure moment_general(long n, long q, const RatInterval& Tc,
                               const Rational& precision);

std::vector<RatInterval> moment_general_row(long n, long qmax, const RatInterval& Tc,
                                            const Rational& precision);

// Floating adaptive-quadrature oracle with analytic tail truncation; relative
// error target tol.  Diagnostic only — never part of a certificate.
double moment_quadrature(long n, long q, double Tc, double tol);

// Floating closed-form evaluation (same reduction recurrence as moment_general
// but in doubles); used by the search's feasibility margin at T_c < 0.  For
// Tc <= -1 the tail is evaluated by a cancellation-free downward recurrence,
// keeping relative accuracy near machine precision even when the value is
// far below c_q(0).
double moment_double(long n, long q, double Tc);

}  // namespace bcert::moments
