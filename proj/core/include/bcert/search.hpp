#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcert/certify.hpp"

namespace bcert::search {

using certify::Certificate;
using exact::Rational;

// One search result: a floating tail with its advisory feasibility margin and,
// after rationalization, the exact verdict.  Only a passing exact certificate
// makes a candidate "certified"; the floating margin never does.
struct Candidate {
    std::vector<double> tail;            // a_1..a_d, floating
    std::vector<Rational> tail_rational; // nearest rationals under the cap
    long n = 0;
    double margin = 0.0;
    std::optional<Certificate> certified;
    std::string note;  // rejection/skip note when not certified
};

// min of the four normalized quantities
//   { discrim/scaleD, I(1)/scaleI, -I''(1)/scaleII, -J(1)/scaleJ }
// in floating arithmetic with a_0 the largest root; each scale is the sum of
// absolute values of that quantity's contributing terms, so the margin is
// dimensionless and positive iff all four strict conditions hold numerically.
// A nonpositive discriminant yields discrim/scaleD (negative or zero), with
// the remaining quantities unevaluated (no real root to use).
double feasibility_margin(long n, const std::vector<double>& tail, double Tc);

// Nearest rational to x with denominator <= den_cap (continued-fraction best
// approximation, exact internal arithmetic; ties prefer the smaller
// denominator).
Rational rationalize(double x, long den_cap = 1000000);

// Replace the floating tail by its rationalization and run the exact
// certification at T_c = 0; the exact verdict wins regardless of the floating
// margin's sign.
Candidate rationalize_and_recheck(Candidate c, long den_cap = 1000000);

// Multi-start simplex descent plus perturbation polish on -feasibility_margin
// at T_c = 0, deterministic for fixed (d, n, budget, seed): per-task RNG
// substreams, index-ordered merge, stable sort by margin.  Positive-margin
// candidates are rationalized and exactly rechecked.
std::vector<Candidate> search(long d, long n, long budget, unsigned long long seed,
                              int threads = 0, long den_cap = 1000000);

// Byte-stable JSON report: parameters, per-candidate rational tail, margin,
// and the inlined certificate for certified candidates.
std::string search_report_json(long d, long n, long budget, unsigned long long seed,
                               long den_cap, const std::vector<Candidate>& candidates,
                               int indent = 2);

}  // namespace bcert::search
