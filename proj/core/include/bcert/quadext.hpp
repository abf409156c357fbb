#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "bcert/rational.hpp"

namespace bcert::exact {

enum class Sign { Negative, Zero, Positive, Indeterminate };

inline Sign sign_of(int s) {
    return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

// Element p + q*sqrt(D) of a real quadratic extension of the rationals.
// D >= 0 is carried verbatim (never factored to square-free form); all values
// produced by one certification share a single D, and a value with q == 0 is
// plain rational and combines with any D.  Sign determination is exact.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long v) : p_(v) {}  // NOLINT: implicit by design
    QuadExt(Rational r) : p_(std::move(r)) {}  // NOLINT: implicit by design
    QuadExt(Rational p, Rational q, Rational D)
        : p_(std::move(p)), q_(std::move(q)), D_(std::move(D)) {
        if (D_.sign() < 0) throw std::domain_error("QuadExt: negative radicand");
        if (D_.is_zero()) q_ = 0;
    }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    const Rational& D() const { return D_; }

    bool is_rational() const { return q_.is_zero(); }

    // Exact rational value when one exists (q == 0, or D a perfect square).
    std::optional<Rational> rational_value() const {
        if (q_.is_zero()) return p_;
        if (auto r = exact_sqrt(D_)) return p_ + q_ * *r;
        return std::nullopt;
    }

    // Exact sign of p + q*sqrt(D) by rational case analysis: when p and q
    // disagree in sign, compare p^2 against q^2*D.
    Sign sign() const {
        if (q_.is_zero()) return sign_of(p_.sign());
        if (p_.is_zero()) return sign_of(q_.sign());
        int sp = p_.sign(), sq = q_.sign();
        if (sp == sq) return sign_of(sp);
        Rational lhs = p_ * p_, rhs = q_ * q_ * D_;
        if (lhs == rhs) return Sign::Zero;
        return sign_of(lhs > rhs ? sp : sq);
    }

    double to_double() const {
        return p_.to_double() + q_.to_double() * std::sqrt(D_.to_double());
    }

    QuadExt operator-() const { return QuadExt(unchecked{}, -p_, -q_, D_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        Rational D = merge_radicand(a, b);
        Rational p = a.p_ + b.p_;
        Rational q = a.q_ + b.q_;
        return QuadExt(unchecked{}, std::move(p), std::move(q), std::move(D));
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        // p and q must be fully evaluated before D is moved into the
        // constructor; argument evaluation order is unspecified.
        Rational D = merge_radicand(a, b);
        Rational p = a.p_ * b.p_ + a.q_ * b.q_ * D;
        Rational q = a.p_ * b.q_ + a.q_ * b.p_;
        return QuadExt(unchecked{}, std::move(p), std::move(q), std::move(D));
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
    QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

    QuadExt inverse() const {
        Rational norm = p_ * p_ - q_ * q_ * D_;  // (p+q√D)(p-q√D)
        if (norm.is_zero()) {
            if (sign() == Sign::Zero) throw std::domain_error("QuadExt: inverse of zero");
            // p^2 = q^2 D with nonzero value means D is a perfect square; fall
            // back to the exact rational value.
            return QuadExt(rational_value()->inverse());
        }
        return QuadExt(unchecked{}, p_ / norm, -q_ / norm, D_);
    }

    // Exact value equality, including across distinct representations: perfect
    // squares collapse to rationals; otherwise p + q*sqrt(D) = p' + q'*sqrt(D')
    // iff p = p', sign(q) = sign(q'), and q^2 D = q'^2 D'.
    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        auto ra = a.rational_value(), rb = b.rational_value();
        if (ra && rb) return *ra == *rb;
        if (ra || rb) return false;  // rational vs genuinely irrational
        return a.p_ == b.p_ && a.q_.sign() == b.q_.sign() &&
               a.q_ * a.q_ * a.D_ == b.q_ * b.q_ * b.D_;
    }

private:
    struct unchecked {};
    QuadExt(unchecked, Rational p, Rational q, Rational D)
        : p_(std::move(p)), q_(std::move(q)), D_(std::move(D)) {
        if (D_.is_zero()) q_ = 0;
    }

    static Rational merge_radicand(const QuadExt& a, const QuadExt& b) {
        if (a.q_.is_zero()) return b.D_;
        if (b.q_.is_zero()) return a.D_;
        if (a.D_ != b.D_)
            throw std::domain_error("QuadExt: mixed radicands in arithmetic");
        return a.D_;
    }

    // sqrt of a nonnegative rational when it is an exact rational, else nullopt.
    static std::optional<Rational> exact_sqrt(const Rational& v) {
        if (v.sign() < 0) return std::nullopt;
        if (v.is_zero()) return Rational(0);
        mpz_class num = v.num(), den = v.den(), rn, rd;
        if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rational(mpq_class(rn, rd));
    }

    Rational p_{0}, q_{0}, D_{0};
};

}  // namespace bcert::exact
