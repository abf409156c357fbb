#include "bcert/certify.hpp"

namespace bcert::certify {

namespace {

Sign quadext_sign_to_verdict(const QuadExt& v) { return v.sign(); }

Overall combine(Overall a, Overall b) {
    if (a == Overall::Fail || b == Overall::Fail) return Overall::Fail;
    if (a == Overall::Indeterminate || b == Overall::Indeterminate)
        return Overall::Indeterminate;
    return Overall::Pass;
}

}  // namespace

QuadraticInA0<Rational> quadratic_in_a0_d6_closed_form(long n,
                                                       const std::vector<Rational>& tail,
                                                       const std::vector<Rational>& cq) {
    if (tail.size() != 6)
        throw std::invalid_argument("closed form requires a degree-6 tail");
    check_degree(n, 6);
    QuadraticInA0<Rational> out;
    out.A = Rational(2 * (n - 1) * (n + 1), n - 5) * cq[0];

    // B = 2(n-1) sum_{l=1}^{6} (l+2) a_l c_l prod_{j=0}^{l} (n+1+2j)/(n-5-2j)
    out.B = 0;
    for (long l = 1; l <= 6; ++l) {
        Rational prod = 1;
        for (long j = 0; j <= l; ++j) prod *= Rational(n + 1 + 2 * j, n - 5 - 2 * j);
        out.B += Rational(l + 2) * tail[static_cast<size_t>(l - 1)] *
                 cq[static_cast<size_t>(l)] * prod;
    }
    out.B *= Rational(2 * (n - 1));

    // C = sum_{q=2}^{12} (q+2) * (tail-only alpha_q) * c_q * prod_I(n, q)
    std::vector<Rational> a_tail_only(7, Rational(0));
    for (size_t i = 0; i < 6; ++i) a_tail_only[i + 1] = tail[i];
    std::vector<Rational> alpha = poly::alpha_d6_table(a_tail_only, n);
    out.C = 0;
    for (long q = 2; q <= 12; ++q)
        out.C += Rational(q + 2) * alpha[static_cast<size_t>(q)] *
                 cq[static_cast<size_t>(q)] * product_I(n, q);
    return out;
}

Rational i_second_d6_closed_form(long n, const std::vector<Rational>& a,
                                 const std::vector<Rational>& cq) {
    if (a.size() != 7)
        throw std::invalid_argument("closed form requires coefficients a_0..a_6");
    check_degree(n, 6);
    const Rational& a0 = a[0];
    Rational total = Rational(2 * (n - 1) * (n + 1), n - 5) * a0 * a0 * cq[0];

    Rational linear = 0;
    for (long l = 1; l <= 6; ++l) {
        Rational prod = 1;
        for (long j = 0; j <= l; ++j) prod *= Rational(n + 1 + 2 * j, n - 5 - 2 * j);
        linear += Rational((l + 1) * (l + 2)) * a[static_cast<size_t>(l)] *
                  cq[static_cast<size_t>(l)] * prod;
    }
    total += Rational(2 * (n - 1)) * a0 * linear;

    std::vector<Rational> a_tail_only = a;
    a_tail_only[0] = 0;
    std::vector<Rational> alpha = poly::alpha_d6_table(a_tail_only, n);
    for (long q = 2; q <= 12; ++q)
        total += Rational((q + 2) * (q + 1)) * alpha[static_cast<size_t>(q)] *
                 cq[static_cast<size_t>(q)] * product_I(n, q);
    return total;
}

Rational j_value_d6_closed_form(long n, const std::vector<Rational>& a,
                                const std::vector<Rational>& cq) {
    if (a.size() != 7)
        throw std::invalid_argument("closed form requires coefficients a_0..a_6");
    check_degree(n, 6);
    const Rational &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3], &a4 = a[4],
                   &a5 = a[5], &a6 = a[6];
    auto R = [](long v) { return Rational(v); };
    // Term-by-term restatement of the degree-6 J(1) expansion (coefficient of
    // c_6 is 14 a_1 a_6, matching 2ff' + sf').
    std::vector<Rational> coeff = {
        R(2) * a1 * a0,
        a1 + R(2) * a1 * a1 + R(4) * a2 * a0,
        R(2) * a2 + R(6) * a1 * a2 + R(6) * a3 * a0,
        R(4) * a2 * a2 + R(3) * a3 + R(8) * a1 * a3 + R(8) * a4 * a0,
        R(10) * a2 * a3 + R(4) * a4 + R(10) * a1 * a4 + R(10) * a5 * a0,
        R(6) * a3 * a3 + R(12) * a2 * a4 + R(5) * a5 + R(12) * a1 * a5 + R(12) * a6 * a0,
        R(14) * a3 * a4 + R(14) * a2 * a5 + R(6) * a6 + R(14) * a1 * a6,
        R(8) * a4 * a4 + R(16) * a3 * a5 + R(16) * a2 * a6,
        R(18) * a4 * a5 + R(18) * a3 * a6,
        R(10) * a5 * a5 + R(20) * a4 * a6,
        R(22) * a5 * a6,
        R(12) * a6 * a6,
    };
    Rational total = 0;
    for (long q = 0; q <= 11; ++q)
        total += coeff[static_cast<size_t>(q)] * cq[static_cast<size_t>(q)] *
                 product_J(n, q);
    return total;
}

QuadExt largest_root(const QuadraticInA0<Rational>& quad) {
    Rational disc = quad.B * quad.B - Rational(4) * quad.A * quad.C;
    if (disc.sign() <= 0) throw no_real_root("largest_root: discriminant <= 0");
    if (quad.A.sign() <= 0) throw no_real_root("largest_root: leading coefficient <= 0");
    Rational inv2A = (Rational(2) * quad.A).inverse();
    return QuadExt(-quad.B * inv2A, inv2A, disc);
}

std::optional<RatInterval> largest_root_interval(const QuadraticInA0<RatInterval>& quad,
                                                 const Rational& precision) {
    RatInterval disc = quad.B.square() - RatInterval(4) * quad.A * quad.C;
    if (disc.sign() != Sign::Positive) return std::nullopt;
    if (quad.A.sign() != Sign::Positive) return std::nullopt;
    RatInterval root = exact::enclose_sqrt(disc, precision);
    // Dyadic rounding here keeps the high powers of the root taken by the
    // assembly stage from dragging the quotient's denominator along.
    return exact::outward_round((-quad.B + root) / (RatInterval(2) * quad.A),
                                exact::scale_bits(precision / 8));
}

namespace {

Certificate certify_exact_at_zero(long n, const std::vector<Rational>& tail) {
    long d = static_cast<long>(tail.size());
    check_degree(n, d);
    Certificate cert;
    cert.n = n;
    cert.d = d;
    cert.tail = tail;
    cert.tc_lo = cert.tc_hi = 0;
    cert.mode = Mode::Exact;

    // kappa-free moment parts: the common positive factor (pi for odd n)
    // cancels in every sign and in the root.
    std::vector<Rational> cq = moments::moment_zero_row(n, 2 * d);

    QuadraticInA0<Rational> quad = quadratic_in_a0(n, tail, cq);
    Rational disc = quad.B * quad.B - Rational(4) * quad.A * quad.C;
    cert.disc_exact = disc;
    cert.disc_sign = exact::sign_of(disc.sign());
    cert.verdicts.disc_positive = (cert.disc_sign == Sign::Positive);

    if (!cert.verdicts.disc_positive) {
        cert.overall = Overall::Fail;
        return cert;
    }

    QuadExt a0 = largest_root(quad);
    cert.a0_exact = a0;

    std::vector<QuadExt> coeffs;
    coeffs.reserve(tail.size() + 1);
    coeffs.push_back(a0);
    for (const auto& t : tail) coeffs.push_back(QuadExt(t));
    std::vector<QuadExt> cq_ext(cq.begin(), cq.end());

    QuadExt one(Rational(1));
    QuadExt i1 = I_derivative(n, coeffs, cq_ext, 0, one);
    QuadExt ip1 = I_derivative(n, coeffs, cq_ext, 1, one);
    QuadExt i2 = I_derivative(n, coeffs, cq_ext, 2, one);
    QuadExt j1 = J_value(n, coeffs, cq_ext, one);

    cert.i1 = {i1, std::nullopt, quadext_sign_to_verdict(i1), false};
    cert.iprime1 = {ip1, std::nullopt, quadext_sign_to_verdict(ip1), false};
    cert.idoubleprime1 = {i2, std::nullopt, quadext_sign_to_verdict(i2), false};
    cert.j1 = {j1, std::nullopt, quadext_sign_to_verdict(j1), false};

    cert.verdicts.i1_positive = (cert.i1.sign == Sign::Positive);
    cert.verdicts.iprime1_zero = (cert.iprime1.sign == Sign::Zero);
    cert.verdicts.idoubleprime1_negative = (cert.idoubleprime1.sign == Sign::Negative);
    cert.verdicts.j1_negative = (cert.j1.sign == Sign::Negative);

    bool pass = cert.verdicts.disc_positive && cert.verdicts.i1_positive &&
                cert.verdicts.iprime1_zero && cert.verdicts.idoubleprime1_negative &&
                cert.verdicts.j1_negative;
    cert.overall = pass ? Overall::Pass : Overall::Fail;
    return cert;
}

// Per-unit-moment interpolation rows: A, B, C are linear in the moments, so
// interpolating once per unit moment in exact rational arithmetic recovers the
// coefficient of each c_q with the interpolation's cancellations performed
// exactly.  The rows depend only on (n, tail), not on Tc, so they are computed
// once per certification and shared by every atom of the splitting recursion.
struct MomentRows {
    std::vector<Rational> A, B, C;
};

MomentRows unit_moment_rows(long n, const std::vector<Rational>& tail, size_t qcount) {
    MomentRows rows;
    rows.A.reserve(qcount);
    rows.B.reserve(qcount);
    rows.C.reserve(qcount);
    std::vector<Rational> unit(qcount, Rational(0));
    for (size_t q = 0; q < qcount; ++q) {
        unit[q] = 1;
        QuadraticInA0<Rational> row = quadratic_in_a0(n, tail, unit);
        unit[q] = 0;
        rows.A.push_back(row.A);
        rows.B.push_back(row.B);
        rows.C.push_back(row.C);
    }
    return rows;
}

// d c_q / dT in closed form: differentiating the head integral F_p(-T) gives
// (1 + T^2)^(-(n-5-2q)/2), enclosed over the Tc box (one sqrt for even n).
RatInterval moment_slope_box(long n, long q, const RatInterval& Tc,
                             const Rational& precision) {
    long k = n - 5 - 2 * q;
    long bits = exact::scale_bits(precision / 8);
    RatInterval base = RatInterval(1) + Tc.square();
    RatInterval denom = k % 2 == 0
                            ? base.pow(k / 2)
                            : base.pow((k - 1) / 2) *
                                  exact::enclose_sqrt(base, precision / 8);
    return exact::outward_round(RatInterval(1) / denom, bits);
}

// One interval-mode evaluation over a fixed Tc box (no splitting).
//
// Mean-value evaluation: with m the box midpoint and delta = Tc - m,
//   c_q(T) in c_q(m) + slope_q(Tc) * delta
// for every T in the box, and A, B, C split into value-at-m plus
// derivative-box parts (A = A_m + A' delta, ...).  The discriminant is then
// evaluated in the grouped form
//   disc_m + (2 B_m B' - 4 A_m C' - 4 C_m A') delta + (B'^2 - 4 A' C') delta^2,
// which captures the near-total cancellation in d(disc)/dT.  Treating the
// moments as independent intervals instead loses that correlation and needs
// sub-intervals several hundred times narrower for the same sign decisions.
Certificate interval_atom(long n, const std::vector<Rational>& tail,
                          const RatInterval& Tc, const Rational& precision,
                          const MomentRows& rows) {
    long d = static_cast<long>(tail.size());
    check_degree(n, d);
    Certificate cert;
    cert.n = n;
    cert.d = d;
    cert.tail = tail;
    cert.tc_lo = Tc.lo();
    cert.tc_hi = Tc.hi();
    cert.mode = Mode::Interval;

    size_t qcount = static_cast<size_t>(2 * d) + 1;
    Rational m = Tc.mid();
    RatInterval delta(Tc.lo() - m, Tc.hi() - m);
    long bits = exact::scale_bits(precision / 8);

    std::vector<RatInterval> cm =
        moments::moment_general_row(n, 2 * d, RatInterval(m), precision);
    std::vector<RatInterval> slopes, cq;
    slopes.reserve(qcount);
    cq.reserve(qcount);
    for (size_t q = 0; q < qcount; ++q) {
        slopes.push_back(moment_slope_box(n, static_cast<long>(q), Tc, precision));
        cq.push_back(exact::outward_round(cm[q] + slopes[q] * delta, bits));
    }

    RatInterval Am(0), Bm(0), Cm(0), Ad(0), Bd(0), Cd(0);
    for (size_t q = 0; q < qcount; ++q) {
        RatInterval ra(rows.A[q]), rb(rows.B[q]), rc(rows.C[q]);
        Am += ra * cm[q];
        Bm += rb * cm[q];
        Cm += rc * cm[q];
        Ad += ra * slopes[q];
        Bd += rb * slopes[q];
        Cd += rc * slopes[q];
    }

    RatInterval disc = exact::outward_round(
        (Bm.square() - RatInterval(4) * Am * Cm) +
            (RatInterval(2) * Bm * Bd - RatInterval(4) * (Am * Cd + Cm * Ad)) * delta +
            (Bd.square() - RatInterval(4) * Ad * Cd) * delta.square(),
        bits);
    RatInterval Abox = exact::outward_round(Am + Ad * delta, bits);
    RatInterval Bbox = exact::outward_round(Bm + Bd * delta, bits);
    cert.disc_interval = disc;
    cert.disc_sign = disc.sign();
    cert.verdicts.disc_positive = (cert.disc_sign == Sign::Positive);

    std::optional<RatInterval> a0;
    if (cert.verdicts.disc_positive && Abox.sign() == Sign::Positive) {
        RatInterval root = exact::enclose_sqrt(disc, precision);
        a0 = exact::outward_round((-Bbox + root) / (RatInterval(2) * Abox),
                                  exact::scale_bits(precision / 8));
    }
    if (!a0) {
        // Discriminant (or leading coefficient) box not sign-definite.
        cert.overall = (cert.disc_sign == Sign::Negative) ? Overall::Fail
                                                          : Overall::Indeterminate;
        return cert;
    }
    cert.a0_interval = a0;

    std::vector<RatInterval> coeffs;
    coeffs.reserve(tail.size() + 1);
    coeffs.push_back(*a0);
    for (const auto& t : tail) coeffs.push_back(RatInterval(t));

    RatInterval one(1);
    RatInterval i1 = I_derivative(n, coeffs, cq, 0, one);
    RatInterval i2 = I_derivative(n, coeffs, cq, 2, one);
    RatInterval j1 = J_value(n, coeffs, cq, one);

    cert.i1 = {std::nullopt, i1, i1.sign(), false};
    cert.iprime1 = {std::nullopt, std::nullopt, Sign::Zero, true};
    cert.idoubleprime1 = {std::nullopt, i2, i2.sign(), false};
    cert.j1 = {std::nullopt, j1, j1.sign(), false};

    cert.verdicts.i1_positive = (cert.i1.sign == Sign::Positive);
    cert.verdicts.iprime1_zero = true;  // structural: a0 is the root for each t
    cert.verdicts.idoubleprime1_negative = (cert.idoubleprime1.sign == Sign::Negative);
    cert.verdicts.j1_negative = (cert.j1.sign == Sign::Negative);

    bool pass = cert.verdicts.disc_positive && cert.verdicts.i1_positive &&
                cert.verdicts.idoubleprime1_negative && cert.verdicts.j1_negative;
    if (pass) {
        cert.overall = Overall::Pass;
    } else if (cert.i1.sign == Sign::Negative || cert.idoubleprime1.sign == Sign::Positive ||
               cert.j1.sign == Sign::Positive || cert.disc_sign == Sign::Negative) {
        // A sign is definitively wrong for every t in the box.
        cert.overall = Overall::Fail;
    } else {
        cert.overall = Overall::Indeterminate;
    }
    return cert;
}

Overall certify_interval_rec(long n, const std::vector<Rational>& tail,
                             const RatInterval& Tc, const Rational& precision,
                             int depth_left, const MomentRows& rows) {
    Certificate atom = interval_atom(n, tail, Tc, precision, rows);
    if (atom.overall != Overall::Indeterminate) return atom.overall;
    if (depth_left <= 0 || Tc.is_point()) return Overall::Indeterminate;
    Rational mid = Tc.mid();
    Overall left = certify_interval_rec(n, tail, RatInterval(Tc.lo(), mid), precision,
                                        depth_left - 1, rows);
    if (left == Overall::Fail) return Overall::Fail;
    Overall right = certify_interval_rec(n, tail, RatInterval(mid, Tc.hi()), precision,
                                         depth_left - 1, rows);
    return combine(left, right);
}

}  // namespace

Certificate certify_dimension(long n, const std::vector<Rational>& tail,
                              const Rational& Tc) {
    if (Tc.sign() > 0)
        throw std::domain_error("certify_dimension: requires Tc <= 0");
    if (Tc.is_zero()) return certify_exact_at_zero(n, tail);
    return certify_interval(n, tail, RatInterval(Tc), Rational(1, 1000000));
}

Certificate certify_interval(long n, const std::vector<Rational>& tail,
                             const RatInterval& Tc, const Rational& precision,
                             int split_depth) {
    if (Tc.hi().sign() > 0)
        throw std::domain_error("certify_interval: requires Tc <= 0");
    if (precision.sign() <= 0)
        throw std::invalid_argument("certify_interval: precision <= 0");
    // Exact degeneration: a zero-width range at the origin is the exact case.
    if (Tc.is_point() && Tc.lo().is_zero()) {
        Certificate cert = certify_exact_at_zero(n, tail);
        return cert;
    }
    MomentRows rows =
        unit_moment_rows(n, tail, static_cast<size_t>(2 * tail.size()) + 1);
    Certificate top = interval_atom(n, tail, Tc, precision, rows);
    if (top.overall == Overall::Indeterminate && !Tc.is_point()) {
        top.overall = certify_interval_rec(n, tail, Tc, precision, split_depth, rows);
        if (top.overall == Overall::Pass) {
            // Every sub-box of the split certified all four sign conditions,
            // so the signs hold across the whole range even though the
            // top-level enclosures (kept below as honest supersets) were too
            // wide to show it.  Record the proven signs and verdicts.
            top.disc_sign = Sign::Positive;
            top.i1.sign = Sign::Positive;
            top.iprime1 = {std::nullopt, std::nullopt, Sign::Zero, true};
            top.idoubleprime1.sign = Sign::Negative;
            top.j1.sign = Sign::Negative;
            top.verdicts.disc_positive = true;
            top.verdicts.i1_positive = true;
            top.verdicts.iprime1_zero = true;
            top.verdicts.idoubleprime1_negative = true;
            top.verdicts.j1_negative = true;
        }
    }
    return top;
}

CbarResult find_cbar(long n, const std::vector<Rational>& tail, const Rational& precision) {
    if (precision.sign() <= 0)
        throw std::invalid_argument("find_cbar: precision <= 0");
    Certificate base = certify_dimension(n, tail, Rational(0));
    if (!base.passed())
        throw precondition_error("find_cbar: exact certification at Tc = 0 fails");

    Rational internal = precision / 1024;  // enclosure precision for probes
    const int probe_depth = 12;
    auto passes = [&](const Rational& t) {
        Certificate probe =
            certify_interval(n, tail, RatInterval(-t, Rational(0)), internal, probe_depth);
        return probe.passed();
    };

    // Fixed geometric start so the probe sequence (hence the result) is
    // monotone under precision refinement rather than tied to the precision.
    Rational t = Rational(1, 1 << 20);
    while (!passes(t)) {
        t /= 2;
        if (t.num() == 1 && t.den() > Rational(10).pow(40).num())
            throw precondition_error("find_cbar: no certifiable neighborhood found");
    }
    Rational lo = t, hi;
    bool found_fail = false;
    for (int k = 0; k < 64 && !found_fail; ++k) {
        Rational next = lo * 2;
        if (passes(next)) {
            lo = next;
        } else {
            hi = next;
            found_fail = true;
        }
    }
    if (!found_fail) hi = lo * 2;  // absurdly large pass region; report lo

    while ((hi - lo) > lo * precision) {
        Rational mid = (lo + hi) / 2;
        if (passes(mid)) lo = mid;
        else hi = mid;
    }

    CbarResult out;
    out.cbar = lo * Rational(n - 2);
    out.certificate = certify_interval(n, tail, RatInterval(-lo, Rational(0)), internal,
                                       probe_depth);
    return out;
}

Certificate certify_degree1(long n) {
    if (n < 31) throw precondition_error("certify_degree1: requires n >= 31");
    return certify_dimension(n, {Rational(-1)}, Rational(0));
}

}  // namespace bcert::certify
