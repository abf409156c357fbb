#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bcert::bubble {

// Half-space bubble family centered at boundary point xi with scale eps:
//   u(x) = ( eps / (eps^2 + (x_n - Tc*eps)^2 + |x' - xi|^2) )^((n-2)/2).
// The family is normalized so that the unit bubble W equals u at xi = 0,
// eps = 1 when c1 = n(n-2); c1 is recorded for that normalization but does
// not enter the displayed formulas.
struct BubbleParams {
    long n = 0;
    double Tc = 0.0;
    std::vector<double> xi;  // in R^{n-1}
    double eps = 1.0;
    double c1 = 0.0;  // defaults to n(n-2)

    BubbleParams(long n_, double Tc_, std::vector<double> xi_, double eps_)
        : n(n_), Tc(Tc_), xi(std::move(xi_)), eps(eps_),
          c1(static_cast<double>(n_) * static_cast<double>(n_ - 2)) {}
    BubbleParams(long n_, double Tc_, std::vector<double> xi_, double eps_, double c1_)
        : n(n_), Tc(Tc_), xi(std::move(xi_)), eps(eps_), c1(c1_) {}

    void validate() const;  // n >= 3, Tc <= 0, eps > 0, c1 > 0, |xi| = n-1
};

// Pointwise bubble value; requires x in the closed half-space (x_n >= 0).
double eval_bubble(const BubbleParams& p, const std::vector<double>& x);

// The derivative-bubble pair (u_a, uhat_a) for index a in 1..n:
//   a < n:  kernel 2 eps (x_a - xi_a) / N,
//   a = n:  kernel ((1 + Tc^2) eps^2 - x_n^2 - |x' - xi|^2) / N,
// multiplied by (eps/N)^((n+2)/2) for u_a and (eps/N)^(n/2) for uhat_a,
// where N = eps^2 + (x_n - Tc*eps)^2 + |x' - xi|^2.
std::pair<double, double> eval_deriv_bubbles(const BubbleParams& p, long a,
                                             const std::vector<double>& x);

// Finite-difference residuals of the unit-bubble PDE
//   Delta W + n(n-2) W^((n+2)/(n-2)) = 0        in the half-space,
//   dW/dx_n = (n-2) Tc W^(n/(n-2))              on x_n = 0,
// at the given point: interior via central second differences in every
// coordinate, boundary at (x', 0) via the second-order one-sided stencil
// (-3f(0) + 4f(h) - f(2h)) / (2h).
std::pair<double, double> pde_residual_W(long n, double Tc, const std::vector<double>& x,
                                         double h);

// Normalized residual of the orthogonality identity
//   2n * int_{half-space} u * u_a  -  Tc * int_{boundary} u * uhat_a  =  0
// for the centered unit bubble (xi = 0, eps = 1), scaled by the corresponding
// absolute-value integrals.  For a < n the reduced integrand is identically
// zero (the angular moment of a single odd coordinate vanishes), so the
// residual is exactly 0.  For a = n the integrals reduce to 2D (1D on the
// boundary) quadrature in polar coordinates, split at the kernel's sign
// change, each piece to relative accuracy tol.  Requires n >= 5 (absolute
// convergence).
double orthogonality_residual(long n, double Tc, long a, double tol);

// Energy of the unit bubble, as the manifestly positive reduced form
//   S_c = 4/(n-2) * int |grad W|^2  +  4 c1 / n * int W^(2n/(n-2))
// with c1 = n(n-2), evaluated by reduced quadrature to relative accuracy tol.
double energy_Sc(long n, double Tc, double tol);

// Both algebraic forms of the energy: the reduced two-integral form above and
// the defining three-integral functional
//   4(n-1)/(n-2) int |grad W|^2 - 4(n-1)c1/n int W^(2n/(n-2))
//     - 4c int_boundary W^(2(n-1)/(n-2)),   c = -Tc (n-2).
// Their agreement is a consistency check on the quadrature and the algebra.
struct ScForms {
    double two_form = 0.0;
    double defining_form = 0.0;
};
ScForms energy_Sc_forms(long n, double Tc, double tol);

// Area of the unit k-sphere in R^{k+1}: 2 pi^((k+1)/2) / Gamma((k+1)/2).
double sphere_area(long k);

// Radial-reduction cross-check at n = 3: the integral of u_(0,1)^2 over the
// box [-R, R]^2 x [0, H], once by direct 3D quadrature and once reduced to
// (r, t) with the exact in-square angular measure
//   angle(r) = 2 pi                      for r <= R,
//   angle(r) = 2 pi - 8 arccos(R / r)    for R < r <= R sqrt(2).
double direct_box_bubble_sq_n3(double Tc, double R, double H, double tol);
double reduced_box_bubble_sq_n3(double Tc, double R, double H, double tol);

// One diagnostic check: name, rendered parameters, residual vs tolerance.
struct BubbleCheck {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// The standard diagnostic suite at one (n, Tc): tangential and normal
// orthogonality, energy positivity and form consistency, boundary PDE
// residual at five sample radii with h = 1e-5, and the interior
// second-order Richardson ratio.
std::vector<BubbleCheck> standard_bubble_checks(long n, double Tc);

// Byte-stable JSON report of a check list.
std::string bubble_report_json(const std::vector<BubbleCheck>& checks, int indent = 2);

}  // namespace bcert::bubble
