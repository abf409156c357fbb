#include "bcert/interval.hpp"

namespace bcert::exact {
namespace {

// Bracket of arctan(1/x) for integer x >= 2 via the alternating Taylor series:
// successive partial sums alternate around the limit, so the running [lo, hi]
// brackets are exact and nested as more terms are taken.
RatInterval arctan_inv_bracket(long x, const Rational& term_bound) {
    Rational inv(1, x);
    Rational inv2 = inv * inv;
    Rational power = inv;  // inv^(2k+1)
    Rational sum = 0;
    Rational lo, hi;
    bool have_lo = false, have_hi = false;
    for (long k = 0;; ++k) {
        Rational term = power / Rational(2 * k + 1);
        if (k % 2 == 0) {
            sum += term;
            hi = sum;
            have_hi = true;
        } else {
            sum -= term;
            lo = sum;
            have_lo = true;
        }
        power *= inv2;
        if (have_lo && have_hi && term <= term_bound) break;
    }
    return RatInterval(lo, hi);
}

// Alternating arctan series bracket for rational |r| <= 1/2.
RatInterval arctan_series_bracket(const Rational& r, const Rational& term_bound) {
    if (r.is_zero()) return RatInterval(0);
    bool neg = r.sign() < 0;
    Rational a = r.abs();
    Rational a2 = a * a;
    Rational power = a, sum = 0, lo, hi;
    bool have_lo = false, have_hi = false;
    for (long k = 0;; ++k) {
        Rational term = power / Rational(2 * k + 1);
        if (k % 2 == 0) {
            sum += term;
            hi = sum;
            have_hi = true;
        } else {
            sum -= term;
            lo = sum;
            have_lo = true;
        }
        power *= a2;
        if (have_lo && have_hi && term <= term_bound) break;
    }
    RatInterval out(lo, hi);
    return neg ? -out : out;
}

// Lower/upper bounds for arctan at a single rational point, gap <= precision.
RatInterval arctan_point_reduced(const Rational& r, const Rational& precision) {
    // |r| <= 1: reduce (1/2, 1] to (-1/3, 0] via arctan(x) = pi/4 + arctan((x-1)/(x+1)).
    if (r * 2 > Rational(1)) {
        RatInterval quarter_pi = enclose_pi(precision / 2) / RatInterval(4);
        Rational reduced = (r - 1) / (r + 1);
        return quarter_pi + arctan_series_bracket(reduced, precision / 4);
    }
    return arctan_series_bracket(r, precision / 2);
}

RatInterval arctan_point(const Rational& r, const Rational& precision) {
    if (r.sign() < 0) return -arctan_point(-r, precision);
    if (r > Rational(1)) {
        // arctan(x) = pi/2 - arctan(1/x)
        RatInterval half_pi = enclose_pi(precision / 2) / RatInterval(2);
        return half_pi - arctan_point_reduced(r.inverse(), precision / 4);
    }
    return arctan_point_reduced(r, precision);
}

}  // namespace

RatInterval enclose_pi(const Rational& precision) {
    if (precision.sign() <= 0) throw std::invalid_argument("enclose_pi: precision <= 0");
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).  Per-series term bound
    // precision/96 keeps the combined series width under precision/2, leaving
    // room for the final dyadic rounding (at most precision/4 per endpoint).
    Rational bound = precision / 96;
    RatInterval a5 = arctan_inv_bracket(5, bound);
    RatInterval a239 = arctan_inv_bracket(239, bound);
    return outward_round(RatInterval(16) * a5 - RatInterval(4) * a239,
                         scale_bits(precision / 4));
}

RatInterval enclose_arctan(const RatInterval& x, const Rational& precision) {
    if (precision.sign() <= 0)
        throw std::invalid_argument("enclose_arctan: precision <= 0");
    // arctan is increasing: the image hull comes from point enclosures at the
    // endpoints.  Each point enclosure (width <= precision/2) is rounded to
    // the dyadic grid, adding at most precision/4 per endpoint.
    long bits = scale_bits(precision / 4);
    if (x.is_point())
        return outward_round(arctan_point(x.lo(), precision / 2), bits);
    RatInterval at_lo = outward_round(arctan_point(x.lo(), precision / 2), bits);
    RatInterval at_hi = outward_round(arctan_point(x.hi(), precision / 2), bits);
    return RatInterval(at_lo.lo(), at_hi.hi());
}

RatInterval enclose_sqrt(const RatInterval& x, const Rational& precision) {
    if (precision.sign() <= 0)
        throw std::invalid_argument("enclose_sqrt: precision <= 0");
    if (x.lo().sign() < 0) throw std::domain_error("enclose_sqrt: negative operand");

    // sqrt bounds at a rational point v: with scale S = 2^k (2/S <= precision)
    // and m = isqrt(floor(v*S^2)): m/S <= sqrt(v) <= (m+1)/S.  Doubling S
    // refines both bounds monotonically, giving the nested-enclosure property.
    mpz_class scale = 1;
    while (Rational(scale).inverse() * 2 > precision) scale *= 2;
    auto bounds = [&](const Rational& v) {
        mpz_class scaled_num = v.num() * scale * scale;
        mpz_class q = scaled_num / v.den();  // floor(v * S^2), v >= 0
        mpz_class m;
        mpz_sqrt(m.get_mpz_t(), q.get_mpz_t());
        Rational lo(mpq_class(m, scale));
        Rational hi(mpq_class(m + 1, scale));
        // Perfect squares get the exact endpoint on both sides.
        if (Rational(mpq_class(m, scale)) * Rational(mpq_class(m, scale)) == v) hi = lo;
        return RatInterval(lo, hi);
    };
    RatInterval at_lo = bounds(x.lo());
    RatInterval at_hi = x.is_point() ? at_lo : bounds(x.hi());
    return RatInterval(at_lo.lo(), at_hi.hi());
}

}  // namespace bcert::exact
