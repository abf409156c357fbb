#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bcert/scalar_traits.hpp"

namespace bcert::poly {

using exact::Rational;

// Dense polynomial in s, coefficient of s^k at index k.
template <class S>
using PolyT = std::vector<S>;
using Poly = PolyT<Rational>;

// Highest nonzero index, or -1 for the zero polynomial.
inline long degree(const Poly& f) {
    for (long k = static_cast<long>(f.size()) - 1; k >= 0; --k)
        if (!f[static_cast<size_t>(k)].is_zero()) return k;
    return -1;
}

inline Poly trimmed(Poly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

template <class S>
PolyT<S> poly_add(const PolyT<S>& u, const PolyT<S>& v) {
    PolyT<S> out(std::max(u.size(), v.size()), exact::from_rational<S>(Rational(0)));
    for (size_t k = 0; k < u.size(); ++k) out[k] = out[k] + u[k];
    for (size_t k = 0; k < v.size(); ++k) out[k] = out[k] + v[k];
    return out;
}

template <class S>
PolyT<S> poly_mul(const PolyT<S>& u, const PolyT<S>& v) {
    if (u.empty() || v.empty()) return {};
    PolyT<S> out(u.size() + v.size() - 1, exact::from_rational<S>(Rational(0)));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i + j] = out[i + j] + u[i] * v[j];
    return out;
}

template <class S>
PolyT<S> poly_derivative(const PolyT<S>& f) {
    if (f.size() <= 1) return {};
    PolyT<S> out(f.size() - 1, exact::from_rational<S>(Rational(0)));
    for (size_t k = 1; k < f.size(); ++k)
        out[k - 1] = f[k] * exact::from_rational<S>(Rational(static_cast<long>(k)));
    return out;
}

// Multiply by s^k: shift coefficients up.
template <class S>
PolyT<S> poly_shift(PolyT<S> f, size_t k) {
    f.insert(f.begin(), k, exact::from_rational<S>(Rational(0)));
    return f;
}

template <class S>
PolyT<S> poly_scale(const PolyT<S>& f, const Rational& c) {
    PolyT<S> out = f;
    S cs = exact::from_rational<S>(c);
    for (auto& x : out) x = x * cs;
    return out;
}

// Coefficient vector a_0..a_d of the perturbation profile f(s).  When a
// certification carries only the tail a_1..a_d, slot 0 holds a placeholder.
struct CoeffVector {
    long d = 0;
    std::vector<Rational> a;  // length d+1

    static CoeffVector from_tail(const std::vector<Rational>& tail) {
        CoeffVector cv;
        cv.d = static_cast<long>(tail.size());
        cv.a.assign(static_cast<size_t>(cv.d) + 1, Rational(0));
        for (size_t i = 0; i < tail.size(); ++i) cv.a[i + 1] = tail[i];
        return cv;
    }
};

// Coefficients alpha_0..alpha_{2d} of (n+1) f^2 + 4 s f f' + 2 s^2 (f')^2,
// where d+1 is the length of the input coefficient vector (zero-padded if the
// leading coefficients vanish).
template <class S>
std::vector<S> expand_alpha(const PolyT<S>& f, long n) {
    if (n < 3) throw std::invalid_argument("expand_alpha: n < 3");
    size_t len = f.empty() ? 1 : 2 * f.size() - 1;
    PolyT<S> fp = poly_derivative(f);
    PolyT<S> out = poly_scale(poly_mul(f, f), Rational(n + 1));
    out = poly_add(out, poly_scale(poly_shift(poly_mul(f, fp), 1), Rational(4)));
    out = poly_add(out, poly_scale(poly_shift(poly_mul(fp, fp), 2), Rational(2)));
    out.resize(len, exact::from_rational<S>(Rational(0)));
    return out;
}

// Coefficients beta_0..beta_{2d-1} of 2 f f' + s f'; empty for constant f.
template <class S>
std::vector<S> expand_beta(const PolyT<S>& f) {
    if (f.size() <= 1) return {};
    size_t len = 2 * f.size() - 2;
    PolyT<S> fp = poly_derivative(f);
    PolyT<S> out = poly_scale(poly_mul(f, fp), Rational(2));
    out = poly_add(out, poly_shift(fp, 1));
    out.resize(len, exact::from_rational<S>(Rational(0)));
    return out;
}

// Hand-expanded degree-6 tables.  These restate expand_alpha / expand_beta for
// d = 6 term by term and act as an independent cross-check of the generic
// polynomial arithmetic (and vice versa).
inline std::vector<Rational> alpha_d6_table(const std::vector<Rational>& a, long n) {
    if (a.size() != 7) throw std::invalid_argument("alpha_d6_table: need a_0..a_6");
    const Rational &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3], &a4 = a[4],
                   &a5 = a[5], &a6 = a[6];
    auto R = [](long v) { return Rational(v); };
    return {
        R(n + 1) * a0 * a0,
        R(2 * (n + 3)) * a0 * a1,
        R(n + 7) * a1 * a1 + R(2 * (n + 5)) * a0 * a2,
        R(2 * (n + 11)) * a1 * a2 + R(2 * (n + 7)) * a0 * a3,
        R(n + 17) * a2 * a2 + R(2 * (n + 15)) * a1 * a3 + R(2 * (n + 9)) * a0 * a4,
        R(2 * (n + 23)) * a2 * a3 + R(2 * (n + 19)) * a1 * a4 + R(2 * (n + 11)) * a0 * a5,
        R(n + 31) * a3 * a3 + R(2 * (n + 29)) * a2 * a4 + R(2 * (n + 23)) * a1 * a5 +
            R(2 * (n + 13)) * a0 * a6,
        R(2 * (n + 39)) * a3 * a4 + R(2 * (n + 35)) * a2 * a5 + R(2 * (n + 27)) * a1 * a6,
        R(n + 49) * a4 * a4 + R(2 * (n + 47)) * a3 * a5 + R(2 * (n + 41)) * a2 * a6,
        R(2 * (n + 59)) * a4 * a5 + R(2 * (n + 55)) * a3 * a6,
        R(n + 71) * a5 * a5 + R(2 * (n + 69)) * a4 * a6,
        R(2 * (n + 83)) * a5 * a6,
        R(n + 97) * a6 * a6,
    };
}

inline std::vector<Rational> beta_d6_table(const std::vector<Rational>& a) {
    if (a.size() != 7) throw std::invalid_argument("beta_d6_table: need a_0..a_6");
    const Rational &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3], &a4 = a[4],
                   &a5 = a[5], &a6 = a[6];
    auto R = [](long v) { return Rational(v); };
    return {
        R(2) * a0 * a1,
        a1 + R(2) * a1 * a1 + R(4) * a0 * a2,
        R(2) * a2 + R(6) * a1 * a2 + R(6) * a0 * a3,
        R(4) * a2 * a2 + R(3) * a3 + R(8) * a1 * a3 + R(8) * a0 * a4,
        R(10) * a2 * a3 + R(4) * a4 + R(10) * a1 * a4 + R(10) * a0 * a5,
        R(6) * a3 * a3 + R(12) * a2 * a4 + R(5) * a5 + R(12) * a1 * a5 + R(12) * a0 * a6,
        R(14) * a3 * a4 + R(14) * a2 * a5 + R(6) * a6 + R(14) * a1 * a6,
        R(8) * a4 * a4 + R(16) * a3 * a5 + R(16) * a2 * a6,
        R(18) * a4 * a5 + R(18) * a3 * a6,
        R(10) * a5 * a5 + R(20) * a4 * a6,
        R(22) * a5 * a6,
        R(12) * a6 * a6,
    };
}

// Built-in coefficient tails exposed on the command line.
inline std::vector<Rational> builtin_tail_d6() {
    return {Rational(-10), Rational(1, 10000), Rational(-1, 1000),
            Rational(184, 1000), Rational(-265, 10000), Rational(737, 1000000)};
}

inline std::vector<Rational> builtin_tail_d1() { return {Rational(-1)}; }

}  // namespace bcert::poly
