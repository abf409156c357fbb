#pragma once

#include <stdexcept>
#include <vector>

#include "bcert/poly.hpp"

namespace bcert::certify {

using exact::Rational;
using poly::PolyT;

struct degree_constraint_error : std::domain_error {
    using std::domain_error::domain_error;
};

inline void check_degree(long n, long d) {
    if (n <= 4 * d + 6)
        throw degree_constraint_error("degree constraint violated: need n > 4d + 6 (n = " +
                                      std::to_string(n) + ", d = " + std::to_string(d) + ")");
}

// prod_{j=0}^{q} (n-1+2j)/(n-5-2j)
inline Rational product_I(long n, long q) {
    Rational out = 1;
    for (long j = 0; j <= q; ++j) out *= Rational(n - 1 + 2 * j, n - 5 - 2 * j);
    return out;
}

// prod_{j=0}^{q} (n+3+2j)/(n-5-2j)
inline Rational product_J(long n, long q) {
    Rational out = 1;
    for (long j = 0; j <= q; ++j) out *= Rational(n + 3 + 2 * j, n - 5 - 2 * j);
    return out;
}

template <class S>
S scalar_pow(const S& base, long e) {
    S acc = exact::from_rational<S>(Rational(1));
    for (long k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

// I(1)-family assembly: order 0, 1, 2 gives I(s), I'(s), I''(s) at the given s:
//   sum_q c_q alpha_q * m(q, order) * s^(q+2-order) * prod_I(n, q)
// with m = 1, (q+2), (q+2)(q+1).  Exact whenever the scalar type is exact.
template <class S>
S I_derivative(long n, const std::vector<S>& coeffs, const std::vector<S>& cq,
               int order, const S& s) {
    long d = static_cast<long>(coeffs.size()) - 1;
    check_degree(n, d);
    std::vector<S> alpha = poly::expand_alpha(coeffs, n);
    if (cq.size() < alpha.size())
        throw std::invalid_argument("I_derivative: not enough moments");
    S total = exact::from_rational<S>(Rational(0));
    for (long q = 0; q < static_cast<long>(alpha.size()); ++q) {
        long m = order == 0 ? 1 : (order == 1 ? q + 2 : (q + 2) * (q + 1));
        S term = cq[static_cast<size_t>(q)] * alpha[static_cast<size_t>(q)];
        term = term * exact::from_rational<S>(Rational(m) * product_I(n, q));
        term = term * scalar_pow(s, q + 2 - order);
        total = total + term;
    }
    return total;
}

// J(s) assembly: sum_{q=0}^{2d-1} c_q beta_q s^(q+2) prod_J(n, q).
template <class S>
S J_value(long n, const std::vector<S>& coeffs, const std::vector<S>& cq, const S& s) {
    long d = static_cast<long>(coeffs.size()) - 1;
    check_degree(n, d);
    std::vector<S> beta = poly::expand_beta(coeffs);
    if (cq.size() < beta.size())
        throw std::invalid_argument("J_value: not enough moments");
    S total = exact::from_rational<S>(Rational(0));
    for (long q = 0; q < static_cast<long>(beta.size()); ++q) {
        S term = cq[static_cast<size_t>(q)] * beta[static_cast<size_t>(q)];
        term = term * exact::from_rational<S>(product_J(n, q));
        term = term * scalar_pow(s, q + 2);
        total = total + term;
    }
    return total;
}

// I'(1) as a quadratic A a0^2 + B a0 + C in the free coefficient a0, extracted
// by exact three-point interpolation at a0 = 0, 1, 2 for the fixed tail.
template <class S>
struct QuadraticInA0 {
    S A, B, C;
};

template <class S>
QuadraticInA0<S> quadratic_in_a0(long n, const std::vector<Rational>& tail,
                                 const std::vector<S>& cq) {
    S g[3];
    for (long a0 = 0; a0 <= 2; ++a0) {
        std::vector<S> coeffs;
        coeffs.reserve(tail.size() + 1);
        coeffs.push_back(exact::from_rational<S>(Rational(a0)));
        for (const auto& t : tail) coeffs.push_back(exact::from_rational<S>(t));
        g[a0] = I_derivative(n, coeffs, cq, 1, exact::from_rational<S>(Rational(1)));
    }
    QuadraticInA0<S> out;
    S half = exact::from_rational<S>(Rational(1, 2));
    out.A = (g[0] - g[1] - g[1] + g[2]) * half;
    out.B = (g[1] * exact::from_rational<S>(Rational(4)) -
             g[0] * exact::from_rational<S>(Rational(3)) - g[2]) * half;
    out.C = g[0];
    return out;
}

// Closed-form A, B, C for the degree-6 profile, written exactly as the direct
// expansion groups them (A from the q = 0 term, B from the a_0-linear terms
// via the telescoping product identity, C from the tail-only alpha parts).
// Independent cross-check of quadratic_in_a0.
QuadraticInA0<Rational> quadratic_in_a0_d6_closed_form(long n,
                                                       const std::vector<Rational>& tail,
                                                       const std::vector<Rational>& cq);

// Closed-form I''(1) and J(1) for the degree-6 profile (same grouping),
// cross-checking the generic order-2 assembly and J_value.
Rational i_second_d6_closed_form(long n, const std::vector<Rational>& a_full,
                                 const std::vector<Rational>& cq);
Rational j_value_d6_closed_form(long n, const std::vector<Rational>& a_full,
                                const std::vector<Rational>& cq);

}  // namespace bcert::certify
