#include "bcert/moments.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace bcert::moments {
namespace {

void check_convergence(long n, long q) {
    if (n - 6 - 2 * q <= 0)
        throw divergent_moment("moment divergent: need n - 6 - 2q > 0 (n = " +
                               std::to_string(n) + ", q = " + std::to_string(q) + ")");
}

// Double factorial with (-1)!! = 0!! = 1.
Rational double_factorial(long m) {
    Rational out = 1;
    for (long k = m; k > 1; k -= 2) out *= Rational(k);
    return out;
}

}  // namespace

MomentZero moment_zero(long n, long q) {
    check_convergence(n, q);
    // c_q(0) = Integral_0^inf (1+t^2)^(-p) dt with p = (n-5-2q)/2 > 1/2.
    // Wallis-type closed form: kappa * (n-8-2q)!! / (n-7-2q)!!, with an extra
    // 1/2 and kappa = pi when n is odd (integer p), kappa = 1 when n is even.
    MomentZero out;
    out.kappa_is_pi = (n % 2 != 0);
    out.r = double_factorial(n - 8 - 2 * q) / double_factorial(n - 7 - 2 * q);
    if (out.kappa_is_pi) out.r /= 2;
    return out;
}

std::vector<Rational> moment_zero_row(long n, long qmax) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(qmax) + 1);
    for (long q = 0; q <= qmax; ++q) out.push_back(moment_zero(n, q).r);
    return out;
}

namespace {

// F_p(x) = Integral_0^x (1+u^2)^(-p) du for doubled exponent k = 2p >= 2,
// over an interval x subset of [0, inf).  Reduction recurrence:
//   F_p = [ x (1+x^2)^(1-p) + (2p-3) F_{p-1} ] / (2p-2),
// bottoming out at F_1 = arctan(x) (even k) or F_{3/2} = x/sqrt(1+x^2) (odd k).
RatInterval antiderivative_F(long k, const RatInterval& x, const Rational& prec) {
    if (k == 2) return exact::enclose_arctan(x, prec);
    // Outward rounding per level (grain prec/64, so even ~50 levels stay well
    // under prec total) keeps endpoint sizes bounded: reciprocal powers of
    // 1+x^2 otherwise thread huge non-dyadic denominators through every level
    // of the recurrence and the gcd cost of downstream sums explodes.
    long bits = exact::scale_bits(prec / 64);
    RatInterval one_plus_x2 = RatInterval(1) + x.square();
    if (k == 3)
        return exact::outward_round(x / exact::enclose_sqrt(one_plus_x2, prec), bits);
    // (1+x^2)^(1 - k/2): integer power for even k; odd k needs one sqrt.
    RatInterval power;
    if (k % 2 == 0) {
        power = one_plus_x2.pow(1 - k / 2);
    } else {
        // exponent (2-k)/2 with k odd: (1+x^2)^(-(k-3)/2 - 1/2)
        RatInterval root = exact::enclose_sqrt(one_plus_x2, prec);
        power = RatInterval(1) / (one_plus_x2.pow((k - 3) / 2) * root);
    }
    RatInterval rec = antiderivative_F(k - 2, x, prec);
    return exact::outward_round(
        (x * power + RatInterval(Rational(k - 3)) * rec) / RatInterval(Rational(k - 2)),
        bits);
}

}  // namespace

MomentEnclosure moment_general(long n, long q, const RatInterval& Tc,
                               const Rational& precision) {
    check_convergence(n, q);
    if (Tc.hi().sign() > 0)
        throw std::domain_error("moment_general: requires Tc <= 0");
    if (precision.sign() <= 0)
        throw std::invalid_argument("moment_general: precision <= 0");

    // c_q(T) = c_q(0) - F_p(-T): substituting u = t - T shifts the domain to
    // [-T, inf) and splits off the head integral F_p over [0, -T].
    MomentZero at_zero = moment_zero(n, q);
    Rational sub_prec = precision / 8;
    RatInterval c0 = at_zero.kappa_is_pi
                         ? exact::enclose_pi(sub_prec) * RatInterval(at_zero.r)
                         : RatInterval(at_zero.r);
    MomentEnclosure out;
    out.n = n;
    out.q = q;
    out.Tc = Tc;
    // Final dyadic rounding (grain precision/8) bounds the endpoint sizes the
    // assembly stage has to carry through its polynomial sums.
    long bits = exact::scale_bits(precision / 8);
    if (Tc.is_point() && Tc.lo().is_zero()) {
        out.value = exact::outward_round(c0, bits);
        return out;
    }
    RatInterval x = -Tc;  // subset of [0, inf)
    long k = n - 5 - 2 * q;  // doubled exponent, >= 2 by convergence check
    out.value = exact::outward_round(c0 - antiderivative_F(k, x, sub_prec), bits);
    return out;
}

std::vector<RatInterval> moment_general_row(long n, long qmax, const RatInterval& Tc,
                                            const Rational& precision) {
    std::vector<RatInterval> out;
    out.reserve(static_cast<size_t>(qmax) + 1);
    for (long q = 0; q <= qmax; ++q)
        out.push_back(moment_general(n, q, Tc, precision).value);
    return out;
}

double moment_quadrature(long n, long q, double Tc, double tol) {
    check_convergence(n, q);
    if (tol <= 0) throw std::invalid_argument("moment_quadrature: tol <= 0");
    double p2 = static_cast<double>(n - 5 - 2 * q);  // 2p
    // Truncate at T with Integral_T^inf t^(5+2q-n) dt = T^(1-2p)/(2p-1) < tol/10;
    // beyond T the integrand is below t^(-2p) since Tc <= 0.
    double T = std::max(1.0, -2.0 * Tc);
    while (std::pow(T, 1.0 - p2) / (p2 - 1.0) >= tol / 10.0) T *= 2.0;
    auto integrand = [&](double t) {
        double u = t - Tc;
        return std::pow(1.0 + u * u, -p2 / 2.0);
    };
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    double val = gauss_kronrod<double, 15>::integrate(integrand, 0.0, T, 12,
                                                      tol / 10.0, &err);
    return val;
}

double moment_double(long n, long q, double Tc) {
    check_convergence(n, q);
    long k = n - 5 - 2 * q;
    double x = -Tc;
    if (x >= 1.0) {
        // The tail integral G_k(x) = Integral_x^inf (1+u^2)^(-k/2) du can be
        // many orders below c_q(0), so the head-subtraction form below would
        // cancel catastrophically.  Instead run the reduction recurrence
        // downward in the exponent,
        //   G_{j-2} = ((j-2) G_j + x (1+x^2)^(-(j-2)/2)) / (j-3),
        // seeded with G_K = 0 at K = k + 2m.  Every term is positive and the
        // seed error damps by (1+x^2) per step, so m ~ 64 / log2(1+x^2)
        // pushes it below one ulp of the result.
        double w = 1.0 + x * x;
        long m = static_cast<long>(64.0 / std::log2(w)) + 1;
        long K = k + 2 * m;
        double G = 0.0;
        for (long j = K; j > k; j -= 2)
            G = ((j - 2) * G + x * std::pow(w, -(j - 2) * 0.5)) / (j - 3);
        return G;
    }
    // Same structure as the interval path: c_q(0) - F_{k/2}(-Tc).
    double c0;
    {
        MomentZero mz = moment_zero(n, q);
        c0 = mz.r.to_double() * (mz.kappa_is_pi ? M_PI : 1.0);
    }
    if (x == 0.0) return c0;
    double F;
    if (k % 2 == 0) {
        F = std::atan(x);
        for (long kk = 4; kk <= k; kk += 2)
            F = (x * std::pow(1.0 + x * x, 1.0 - kk / 2.0) + (kk - 3) * F) / (kk - 2);
    } else {
        F = x / std::sqrt(1.0 + x * x);
        for (long kk = 5; kk <= k; kk += 2)
            F = (x * std::pow(1.0 + x * x, 1.0 - kk / 2.0) + (kk - 3) * F) / (kk - 2);
    }
    return c0 - F;
}

}  // namespace bcert::moments
