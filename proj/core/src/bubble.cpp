#include "bcert/bubble.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <nlohmann/json.hpp>

#include "bcert/version.hpp"

namespace bcert::bubble {

namespace {

using boost::math::quadrature::gauss_kronrod;

template <class F>
double gk(F&& f, double a, double b, double tol) {
    double err = 0.0;
    return gauss_kronrod<double, 15>::integrate(std::forward<F>(f), a, b, 12, tol, &err);
}

// Integral over [a, inf) of a power-law-decaying integrand: extend by
// doubling blocks until the last block is under rel_tol * |total| / 10
// (safety factor 10 on the geometric tail bound).
template <class F>
double integrate_tail(F&& f, double a, double rel_tol) {
    double R = a < 1.0 ? a + 10.0 : 2.0 * a + 10.0;
    double total = gk(f, a, R, rel_tol);
    for (int i = 0; i < 60; ++i) {
        double block = gk(f, R, 2.0 * R, rel_tol);
        total += block;
        R *= 2.0;
        if (std::fabs(block) <= std::fmax(1e-300, std::fabs(total)) * rel_tol / 10.0) break;
    }
    return total;
}

double sq_norm(const std::vector<double>& v, size_t count) {
    double s = 0.0;
    for (size_t i = 0; i < count; ++i) s += v[i] * v[i];
    return s;
}

// Unit bubble W (c1 = n(n-2) normalization) at a full point of R^n; the
// formula extends smoothly across x_n = 0, which the difference stencils use.
double W_point(long n, double Tc, const std::vector<double>& x) {
    double t = x[static_cast<size_t>(n - 1)];
    double N = 1.0 + (t - Tc) * (t - Tc) + sq_norm(x, static_cast<size_t>(n - 1));
    return std::pow(N, (2.0 - static_cast<double>(n)) / 2.0);
}

}  // namespace

void BubbleParams::validate() const {
    if (n < 3) throw std::domain_error("bubble: n < 3");
    if (Tc > 0.0) throw std::domain_error("bubble: Tc > 0");
    if (!(eps > 0.0)) throw std::domain_error("bubble: eps <= 0");
    if (!(c1 > 0.0)) throw std::domain_error("bubble: c1 <= 0");
    if (static_cast<long>(xi.size()) != n - 1)
        throw std::invalid_argument("bubble: xi must have n-1 entries");
}

double eval_bubble(const BubbleParams& p, const std::vector<double>& x) {
    p.validate();
    if (static_cast<long>(x.size()) != p.n)
        throw std::invalid_argument("bubble: point must have n coordinates");
    double t = x.back();
    if (t < 0.0) throw std::domain_error("bubble: x_n < 0");
    double d2 = 0.0;
    for (size_t i = 0; i + 1 < x.size(); ++i) {
        double diff = x[i] - p.xi[i];
        d2 += diff * diff;
    }
    double N = p.eps * p.eps + (t - p.Tc * p.eps) * (t - p.Tc * p.eps) + d2;
    return std::pow(p.eps / N, (static_cast<double>(p.n) - 2.0) / 2.0);
}

std::pair<double, double> eval_deriv_bubbles(const BubbleParams& p, long a,
                                             const std::vector<double>& x) {
    p.validate();
    if (static_cast<long>(x.size()) != p.n)
        throw std::invalid_argument("bubble: point must have n coordinates");
    if (a < 1 || a > p.n) throw std::out_of_range("bubble: index a out of 1..n");
    double t = x.back();
    if (t < 0.0) throw std::domain_error("bubble: x_n < 0");
    double d2 = 0.0;
    for (size_t i = 0; i + 1 < x.size(); ++i) {
        double diff = x[i] - p.xi[i];
        d2 += diff * diff;
    }
    double N = p.eps * p.eps + (t - p.Tc * p.eps) * (t - p.Tc * p.eps) + d2;
    double kernel;
    if (a < p.n) {
        kernel = 2.0 * p.eps * (x[static_cast<size_t>(a - 1)] - p.xi[static_cast<size_t>(a - 1)]) / N;
    } else {
        kernel = ((1.0 + p.Tc * p.Tc) * p.eps * p.eps - t * t - d2) / N;
    }
    double u_a = std::pow(p.eps / N, (static_cast<double>(p.n) + 2.0) / 2.0) * kernel;
    double uhat_a = std::pow(p.eps / N, static_cast<double>(p.n) / 2.0) * kernel;
    return {u_a, uhat_a};
}

std::pair<double, double> pde_residual_W(long n, double Tc, const std::vector<double>& x,
                                         double h) {
    if (n < 3) throw std::domain_error("bubble: n < 3");
    if (!(h > 0.0)) throw std::invalid_argument("bubble: h <= 0");
    if (static_cast<long>(x.size()) != n)
        throw std::invalid_argument("bubble: point must have n coordinates");

    double W0 = W_point(n, Tc, x);
    double lap = 0.0;
    std::vector<double> y = x;
    for (long i = 0; i < n; ++i) {
        size_t idx = static_cast<size_t>(i);
        double orig = y[idx];
        y[idx] = orig + h;
        double wp = W_point(n, Tc, y);
        y[idx] = orig - h;
        double wm = W_point(n, Tc, y);
        y[idx] = orig;
        lap += (wp - 2.0 * W0 + wm) / (h * h);
    }
    double nn = static_cast<double>(n);
    double interior =
        std::fabs(lap + nn * (nn - 2.0) * std::pow(W0, (nn + 2.0) / (nn - 2.0)));

    std::vector<double> b = x;
    b[static_cast<size_t>(n - 1)] = 0.0;
    double f0 = W_point(n, Tc, b);
    b[static_cast<size_t>(n - 1)] = h;
    double f1 = W_point(n, Tc, b);
    b[static_cast<size_t>(n - 1)] = 2.0 * h;
    double f2 = W_point(n, Tc, b);
    double deriv = (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
    double boundary = std::fabs(deriv - (nn - 2.0) * Tc * std::pow(f0, nn / (nn - 2.0)));
    return {interior, boundary};
}

double orthogonality_residual(long n, double Tc, long a, double tol) {
    if (n < 5) throw std::domain_error("orthogonality_residual: requires n >= 5");
    if (Tc > 0.0) throw std::domain_error("orthogonality_residual: Tc > 0");
    if (a < 1 || a > n) throw std::out_of_range("orthogonality_residual: index a out of 1..n");
    if (!(tol > 0.0)) throw std::invalid_argument("orthogonality_residual: tol <= 0");

    // Tangential index: u * u_a carries the single odd factor (x_a - xi_a),
    // whose angular average over the (n-2)-sphere is identically zero, so the
    // reduced integrand is the zero function on both the interior and the
    // boundary.  Nothing to integrate.
    if (a < n) return 0.0;

    double nn = static_cast<double>(n);
    double one_tc2 = 1.0 + Tc * Tc;
    double rho_star = std::sqrt(one_tc2);
    double quad_tol = tol / 10.0;

    // Interior: u * u_n = P(rho) * N^{-(n+1)} with P = (1+Tc^2) - rho^2 and
    // N = (1+Tc^2) + rho^2 - 2 Tc rho sin(theta) in polar (r, t) = rho(cos,
    // sin) theta over the quarter-plane; measure r^{n-2} dr dt -> rho^{n-1}
    // cos^{n-2} theta drho dtheta.  The sphere factor cancels against the
    // normalization.
    auto interior_outer = [&](double rho) {
        double P = one_tc2 - rho * rho;
        double inner = gk(
            [&](double th) {
                double c = std::cos(th);
                double N = one_tc2 + rho * rho - 2.0 * Tc * rho * std::sin(th);
                return std::pow(c, nn - 2.0) * std::pow(N, -(nn + 1.0));
            },
            0.0, M_PI / 2.0, quad_tol);
        return P * std::pow(rho, nn - 1.0) * inner;
    };
    double I_pos = gk(interior_outer, 0.0, rho_star, quad_tol);
    double I_neg = integrate_tail(interior_outer, rho_star, quad_tol);

    // Boundary (t = 0): u * uhat_n = P0(r) * N0^{-n}, N0 = (1+Tc^2) + r^2.
    auto boundary_f = [&](double r) {
        double P0 = one_tc2 - r * r;
        double N0 = one_tc2 + r * r;
        return P0 * std::pow(r, nn - 2.0) * std::pow(N0, -nn);
    };
    double B_pos = gk(boundary_f, 0.0, rho_star, quad_tol);
    double B_neg = integrate_tail(boundary_f, rho_star, quad_tol);

    double combo = 2.0 * nn * (I_pos + I_neg) - Tc * (B_pos + B_neg);
    double scale = 2.0 * nn * (I_pos - I_neg) + std::fabs(Tc) * (B_pos - B_neg);
    return std::fabs(combo) / scale;
}

ScForms energy_Sc_forms(long n, double Tc, double tol) {
    if (n < 3) throw std::domain_error("energy_Sc: n < 3");
    if (Tc > 0.0) throw std::domain_error("energy_Sc: Tc > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("energy_Sc: tol <= 0");

    double nn = static_cast<double>(n);
    double one_tc2 = 1.0 + Tc * Tc;
    double quad_tol = tol / 10.0;
    double sigma = sphere_area(n - 2);

    // |grad W|^2 = (n-2)^2 (N - 1) N^{-n} with N = 1 + (t-Tc)^2 + r^2.
    auto grad_outer = [&](double rho) {
        double inner = gk(
            [&](double th) {
                double c = std::cos(th);
                double N = one_tc2 + rho * rho - 2.0 * Tc * rho * std::sin(th);
                return std::pow(c, nn - 2.0) * (N - 1.0) * std::pow(N, -nn);
            },
            0.0, M_PI / 2.0, quad_tol);
        return std::pow(rho, nn - 1.0) * inner;
    };
    double G = (nn - 2.0) * (nn - 2.0) * sigma *
               (gk(grad_outer, 0.0, 1.0, quad_tol) + integrate_tail(grad_outer, 1.0, quad_tol));

    // W^(2n/(n-2)) = N^{-n}.
    auto pot_outer = [&](double rho) {
        double inner = gk(
            [&](double th) {
                double c = std::cos(th);
                double N = one_tc2 + rho * rho - 2.0 * Tc * rho * std::sin(th);
                return std::pow(c, nn - 2.0) * std::pow(N, -nn);
            },
            0.0, M_PI / 2.0, quad_tol);
        return std::pow(rho, nn - 1.0) * inner;
    };
    double P = sigma * (gk(pot_outer, 0.0, 1.0, quad_tol) +
                        integrate_tail(pot_outer, 1.0, quad_tol));

    // Boundary trace W^(2(n-1)/(n-2)) = N0^{-(n-1)}, N0 = (1+Tc^2) + r^2.
    auto trace_f = [&](double r) {
        return std::pow(r, nn - 2.0) * std::pow(one_tc2 + r * r, -(nn - 1.0));
    };
    double B = sigma * (gk(trace_f, 0.0, 1.0, quad_tol) + integrate_tail(trace_f, 1.0, quad_tol));

    double c1 = nn * (nn - 2.0);
    double c = -Tc * (nn - 2.0);
    ScForms out;
    out.two_form = 4.0 / (nn - 2.0) * G + 4.0 * c1 / nn * P;
    out.defining_form =
        4.0 * (nn - 1.0) / (nn - 2.0) * G - 4.0 * (nn - 1.0) / nn * c1 * P - 4.0 * c * B;
    return out;
}

double energy_Sc(long n, double Tc, double tol) {
    return energy_Sc_forms(n, Tc, tol).two_form;
}

double sphere_area(long k) {
    if (k < 0) throw std::domain_error("sphere_area: negative dimension");
    double half = (static_cast<double>(k) + 1.0) / 2.0;
    return 2.0 * std::pow(M_PI, half) / std::tgamma(half);
}

double direct_box_bubble_sq_n3(double Tc, double R, double H, double tol) {
    double quad_tol = tol / 10.0;
    auto u2 = [&](double x1, double x2, double t) {
        double N = 1.0 + (t - Tc) * (t - Tc) + x1 * x1 + x2 * x2;
        return 1.0 / N;  // u^2 = N^{-(n-2)} at n = 3
    };
    return gk(
        [&](double x1) {
            return gk(
                [&](double x2) {
                    return gk([&](double t) { return u2(x1, x2, t); }, 0.0, H, quad_tol);
                },
                -R, R, quad_tol);
        },
        -R, R, quad_tol);
}

double reduced_box_bubble_sq_n3(double Tc, double R, double H, double tol) {
    double quad_tol = tol / 10.0;
    auto angle = [&](double r) {
        if (r <= R) return 2.0 * M_PI;
        return 2.0 * M_PI - 8.0 * std::acos(R / r);
    };
    auto f = [&](double r) {
        double axial = gk(
            [&](double t) {
                double N = 1.0 + (t - Tc) * (t - Tc) + r * r;
                return 1.0 / N;
            },
            0.0, H, quad_tol);
        return angle(r) * r * axial;
    };
    // Split at the angular-measure kink r = R.
    return gk(f, 0.0, R, quad_tol) + gk(f, R, R * std::sqrt(2.0), quad_tol);
}

std::vector<BubbleCheck> standard_bubble_checks(long n, double Tc) {
    std::vector<BubbleCheck> out;
    std::string ns = std::to_string(n);
    std::string tcs = std::to_string(Tc);

    {
        BubbleCheck c;
        c.name = "tangential-orthogonality";
        c.parameters = {{"n", ns}, {"Tc", tcs}, {"a", "1"}, {"quad_tol", "1e-9"}};
        c.residual = orthogonality_residual(n, Tc, 1, 1e-9);
        c.tolerance = 1e-12;
        c.pass = c.residual < c.tolerance;
        out.push_back(std::move(c));
    }
    {
        BubbleCheck c;
        c.name = "normal-orthogonality";
        c.parameters = {{"n", ns}, {"Tc", tcs}, {"a", ns}, {"quad_tol", "1e-9"}};
        c.residual = orthogonality_residual(n, Tc, n, 1e-9);
        c.tolerance = 1e-6;
        c.pass = c.residual < c.tolerance;
        out.push_back(std::move(c));
    }
    {
        ScForms forms = energy_Sc_forms(n, Tc, 1e-9);
        BubbleCheck c;
        c.name = "energy-positive";
        c.parameters = {{"n", ns}, {"Tc", tcs}, {"quad_tol", "1e-9"}};
        c.residual = forms.two_form;  // reported value; pass means > 0
        c.tolerance = 0.0;
        c.pass = forms.two_form > 0.0;
        out.push_back(std::move(c));

        BubbleCheck c2;
        c2.name = "energy-form-consistency";
        c2.parameters = {{"n", ns}, {"Tc", tcs}, {"quad_tol", "1e-9"}};
        c2.residual = std::fabs(forms.two_form - forms.defining_form) /
                      std::fmax(std::fabs(forms.defining_form), 1e-300);
        c2.tolerance = 1e-6;
        c2.pass = c2.residual < c2.tolerance;
        out.push_back(std::move(c2));
    }
    {
        double h = 1e-5;
        double worst = 0.0;
        for (double r : {0.0, 0.5, 1.0, 1.5, 2.0}) {
            std::vector<double> x(static_cast<size_t>(n), 0.0);
            x[0] = r;
            x[static_cast<size_t>(n - 1)] = 0.0;
            worst = std::fmax(worst, pde_residual_W(n, Tc, x, h).second);
        }
        BubbleCheck c;
        c.name = "boundary-pde";
        c.parameters = {{"n", ns}, {"Tc", tcs}, {"h", "1e-5"},
                        {"radii", "0,0.5,1,1.5,2"}};
        c.residual = worst;
        c.tolerance = 1e-6;
        c.pass = c.residual < c.tolerance;
        out.push_back(std::move(c));
    }
    {
        std::vector<double> x(static_cast<size_t>(n), 0.0);
        x[0] = 0.4;
        x[static_cast<size_t>(n - 1)] = 0.7;
        double r1 = pde_residual_W(n, Tc, x, 1e-2).first;
        double r2 = pde_residual_W(n, Tc, x, 5e-3).first;
        BubbleCheck c;
        c.name = "interior-richardson";
        c.parameters = {{"n", ns}, {"Tc", tcs}, {"h", "1e-2,5e-3"},
                        {"point", "r=0.4,t=0.7"}, {"ratio_lo", "3.5"}, {"ratio_hi", "4.5"}};
        c.residual = r2 > 0.0 ? r1 / r2 : 0.0;  // second-order => ratio near 4
        c.tolerance = 4.5;
        c.pass = c.residual >= 3.5 && c.residual <= 4.5;
        out.push_back(std::move(c));
    }
    return out;
}

std::string bubble_report_json(const std::vector<BubbleCheck>& checks, int indent) {
    nlohmann::ordered_json j;
    j["version"] = std::string(BCERT_VERSION_STRING);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        nlohmann::ordered_json params;
        for (const auto& [k, v] : c.parameters) params[k] = v;
        e["parameters"] = params;
        e["residual"] = c.residual;
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass;
        arr.push_back(e);
    }
    j["checks"] = arr;
    return j.dump(indent);
}

}  // namespace bcert::bubble
