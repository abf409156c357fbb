#pragma once

#include <stdexcept>
#include <utility>

#include "bcert/quadext.hpp"
#include "bcert/rational.hpp"

namespace bcert::exact {

// Closed interval with rational endpoints.  All arithmetic is containment-
// exact: endpoints are rationals, so no rounding is ever needed and every
// operation returns the exact interval hull of the pointwise image (with the
// usual dependency widening of interval arithmetic).
class RatInterval {
public:
    RatInterval() : lo_(0), hi_(0) {}
    RatInterval(long v) : lo_(v), hi_(v) {}  // NOLINT: implicit by design
    RatInterval(Rational point) : lo_(point), hi_(std::move(point)) {}  // NOLINT
    RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw std::invalid_argument("RatInterval: lo > hi");
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

    Sign sign() const {
        if (lo_.sign() > 0) return Sign::Positive;
        if (hi_.sign() < 0) return Sign::Negative;
        if (lo_.is_zero() && hi_.is_zero()) return Sign::Zero;
        return Sign::Indeterminate;
    }

    RatInterval operator-() const { return RatInterval(-hi_, -lo_); }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return a + (-b);
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rational c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_;
        Rational c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
        return RatInterval(min(min(c1, c2), min(c3, c4)),
                           max(max(c1, c2), max(c3, c4)));
    }
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
        if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
            throw std::domain_error("RatInterval: divisor straddles zero");
        return a * RatInterval(b.hi_.inverse(), b.lo_.inverse());
    }
    RatInterval& operator+=(const RatInterval& o) { *this = *this + o; return *this; }
    RatInterval& operator-=(const RatInterval& o) { *this = *this - o; return *this; }
    RatInterval& operator*=(const RatInterval& o) { *this = *this * o; return *this; }
    RatInterval& operator/=(const RatInterval& o) { *this = *this / o; return *this; }

    // Tight square: accounts for the operand being the same variable, so an
    // interval straddling zero squares to [0, max^2] rather than the looser
    // product hull.
    RatInterval square() const {
        Rational a = lo_ * lo_, b = hi_ * hi_;
        if (lo_.sign() <= 0 && hi_.sign() >= 0) return RatInterval(0, max(a, b));
        return RatInterval(min(a, b), max(a, b));
    }

    // x^e for integer e; negative exponents require a sign-definite interval.
    RatInterval pow(long e) const {
        if (e < 0) return RatInterval(1) / pow(-e);
        RatInterval acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            e >>= 1;
            if (e > 0) base = base.square();
        }
        return acc;
    }

    friend RatInterval hull(const RatInterval& a, const RatInterval& b) {
        return RatInterval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
    }
    friend bool operator==(const RatInterval& a, const RatInterval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Rational lo_, hi_;
};

// Smallest k >= 0 with 2^-k <= eps.  Monotone: shrinking eps never yields a
// coarser grid, which keeps outward rounding nested under refinement.
inline long scale_bits(const Rational& eps) {
    if (eps.sign() <= 0) throw std::invalid_argument("scale_bits: eps <= 0");
    if (eps >= Rational(1)) return 0;
    mpz_class m;  // ceil(1/eps) >= 2
    mpz_cdiv_q(m.get_mpz_t(), eps.den().get_mpz_t(), eps.num().get_mpz_t());
    long k = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
    // sizeinbase = floor(log2) + 1; the power-of-two case needs one bit less
    // to satisfy 2^(k) >= m exactly.
    mpz_class pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 1));
    return pow2 == m ? k - 1 : k;
}

// Outward rounding to the dyadic grid of spacing 2^-bits (lo down, hi up).
// Containment-safe, and nested: a finer grid rounds a contained interval to a
// contained interval.  Long exact-arithmetic chains use this to keep endpoint
// representations bounded; without it, sums of enclosure outputs accumulate
// unrelated huge denominators and coefficient sizes grow without bound.
inline RatInterval outward_round(const RatInterval& x, long bits) {
    if (bits < 0) throw std::invalid_argument("outward_round: bits < 0");
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    auto grid = [&](const Rational& v, bool up) {
        mpz_class scaled = v.num();
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(bits));
        mpz_class q;
        if (up)
            mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.den().get_mpz_t());
        else
            mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.den().get_mpz_t());
        return Rational(mpq_class(q, den));
    };
    return RatInterval(grid(x.lo(), false), grid(x.hi(), true));
}

// Certified enclosures.  All are deterministic for fixed arguments, and nested
// under refinement: halving `precision` returns an interval contained in the
// coarser one (the moment and certificate pipelines rely on this monotonicity).
// Outputs are dyadic-rounded so downstream arithmetic stays cheap.

// Interval of width <= precision containing pi (Machin-type arctan series with
// bracketing alternating partial sums).
RatInterval enclose_pi(const Rational& precision);

// Containment of arctan over x, width <= precision + width propagation of x.
// Argument reduction keeps all intermediate arguments rational:
//   arctan(-x) = -arctan(x);  x > 1: pi/2 - arctan(1/x);
//   1/2 < x <= 1: pi/4 + arctan((x-1)/(x+1))  (reduced argument in (-1/3, 0]).
RatInterval enclose_arctan(const RatInterval& x, const Rational& precision);

// Containment of sqrt over x (x.lo >= 0), via scaled integer square roots.
RatInterval enclose_sqrt(const RatInterval& x, const Rational& precision);

}  // namespace bcert::exact
