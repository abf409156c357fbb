#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcert::exact {

// Arbitrary-precision rational, always in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1.  Thin value wrapper over GMP's mpq_class
// so that generic code sees plain value semantics instead of GMP's expression
// templates.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, S(2) in generic code
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "123", "-7/9", "+4/6" (canonicalized).  Rejects anything else,
    // in particular decimal or exponent notation.
    static std::optional<Rational> parse(std::string_view s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    double to_double() const { return v_.get_d(); }

    // "num/den" with "/den" omitted when den == 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(Raw{}, -v_); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(Raw{}, 1 / v_);
    }

    // Integer power; negative exponents invert (nonzero base required).
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational base = *this, acc = 1;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(Raw{}, a.v_ + b.v_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(Raw{}, a.v_ - b.v_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(Raw{}, a.v_ * b.v_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(Raw{}, a.v_ / b.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    struct Raw {};  // tag: value already canonical (GMP arithmetic preserves it)
    Rational(Raw, mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string_view body = s;
    bool neg = false;
    if (body.front() == '+') {
        body.remove_prefix(1);
    } else if (body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view nums = body, dens;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        nums = body.substr(0, slash);
        dens = body.substr(slash + 1);
        if (!digits(dens)) return std::nullopt;
    }
    if (!digits(nums)) return std::nullopt;
    mpz_class num(std::string(nums), 10);
    mpz_class den = dens.empty() ? mpz_class(1) : mpz_class(std::string(dens), 10);
    if (den == 0) return std::nullopt;
    if (neg) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace bcert::exact
