#include "bcert/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include <nlohmann/json.hpp>

#include "bcert/certificate.hpp"
#include "bcert/moments.hpp"
#include "bcert/parallel.hpp"
#include "bcert/poly.hpp"
#include "bcert/version.hpp"

namespace bcert::search {

namespace {

constexpr double kBox = 1e3;  // search box: |a_i| <= 10^3

double product_I_d(long n, long q) {
    double out = 1.0;
    for (long j = 0; j <= q; ++j)
        out *= static_cast<double>(n - 1 + 2 * j) / static_cast<double>(n - 5 - 2 * j);
    return out;
}

double product_J_d(long n, long q) {
    double out = 1.0;
    for (long j = 0; j <= q; ++j)
        out *= static_cast<double>(n + 3 + 2 * j) / static_cast<double>(n - 5 - 2 * j);
    return out;
}

struct ValueScale {
    double value = 0.0;
    double scale = 0.0;
};

ValueScale i_derivative_scaled(long n, const std::vector<double>& coeffs,
                               const std::vector<double>& cq, int order) {
    std::vector<double> alpha = poly::expand_alpha(coeffs, n);
    ValueScale out;
    for (long q = 0; q < static_cast<long>(alpha.size()); ++q) {
        long m = order == 0 ? 1 : (order == 1 ? q + 2 : (q + 2) * (q + 1));
        double term = cq[static_cast<size_t>(q)] * alpha[static_cast<size_t>(q)] *
                      static_cast<double>(m) * product_I_d(n, q);
        out.value += term;
        out.scale += std::fabs(term);
    }
    return out;
}

ValueScale j_value_scaled(long n, const std::vector<double>& coeffs,
                          const std::vector<double>& cq) {
    std::vector<double> beta = poly::expand_beta(coeffs);
    ValueScale out;
    for (long q = 0; q < static_cast<long>(beta.size()); ++q) {
        double term = cq[static_cast<size_t>(q)] * beta[static_cast<size_t>(q)] *
                      product_J_d(n, q);
        out.value += term;
        out.scale += std::fabs(term);
    }
    return out;
}

// --- deterministic RNG substreams (raw 64-bit draws; no std distributions,
// --- whose output is implementation-defined) -------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream + 1)));
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng), u2 = uniform01(rng);
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// --- objective --------------------------------------------------------------

struct Objective {
    long n;
    double Tc;
    long evals = 0;
    long max_evals = 0;

    bool exhausted() const { return evals >= max_evals; }

    double operator()(const std::vector<double>& x) {
        ++evals;
        for (double v : x)
            if (!(std::fabs(v) <= kBox)) return 1e9 + std::fabs(v);
        double m = feasibility_margin(n, x, Tc);
        if (!std::isfinite(m)) return 1e6;
        return -m;
    }
};

struct NMPoint {
    std::vector<double> x;
    double f = 0.0;
};

// Textbook Nelder-Mead (reflect 1, expand 2, contract 1/2, shrink 1/2),
// stopping when the evaluation budget runs out or the simplex degenerates.
NMPoint nelder_mead(Objective& obj, const std::vector<double>& x0) {
    size_t d = x0.size();
    std::vector<NMPoint> simplex;
    simplex.reserve(d + 1);
    auto try_add = [&](std::vector<double> x) {
        if (obj.exhausted()) return false;
        NMPoint p;
        p.f = obj(x);
        p.x = std::move(x);
        simplex.push_back(std::move(p));
        return true;
    };
    if (!try_add(x0)) return {x0, 1e18};
    for (size_t i = 0; i < d; ++i) {
        std::vector<double> v = x0;
        v[i] = v[i] != 0.0 ? v[i] * 1.5 : 1e-4;
        if (!try_add(std::move(v))) break;
    }
    auto best = [&] {
        return *std::min_element(simplex.begin(), simplex.end(),
                                 [](const NMPoint& a, const NMPoint& b) { return a.f < b.f; });
    };
    if (simplex.size() < d + 1) return best();

    while (!obj.exhausted()) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const NMPoint& a, const NMPoint& b) { return a.f < b.f; });
        double spread = 0.0;
        for (size_t i = 0; i < d; ++i)
            spread = std::max(spread, std::fabs(simplex[d].x[i] - simplex[0].x[i]));
        if (spread < 1e-13 * (1.0 + std::fabs(simplex[0].x[0]))) break;

        std::vector<double> centroid(d, 0.0);
        for (size_t v = 0; v < d; ++v)
            for (size_t i = 0; i < d; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(d);

        auto affine = [&](double t) {
            std::vector<double> x(d);
            for (size_t i = 0; i < d; ++i) x[i] = centroid[i] + t * (simplex[d].x[i] - centroid[i]);
            return x;
        };

        std::vector<double> xr = affine(-1.0);
        double fr = obj(xr);
        if (fr < simplex[0].f) {
            if (obj.exhausted()) {
                simplex[d] = {std::move(xr), fr};
                break;
            }
            std::vector<double> xe = affine(-2.0);
            double fe = obj(xe);
            simplex[d] = fe < fr ? NMPoint{std::move(xe), fe} : NMPoint{std::move(xr), fr};
        } else if (fr < simplex[d - 1].f) {
            simplex[d] = {std::move(xr), fr};
        } else {
            if (obj.exhausted()) break;
            std::vector<double> xc = affine(0.5);
            double fc = obj(xc);
            if (fc < simplex[d].f) {
                simplex[d] = {std::move(xc), fc};
            } else {
                for (size_t v = 1; v <= d; ++v) {
                    if (obj.exhausted()) break;
                    for (size_t i = 0; i < d; ++i)
                        simplex[v].x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
                    simplex[v].f = obj(simplex[v].x);
                }
            }
        }
    }
    return best();
}

std::vector<double> random_start(std::mt19937_64& rng, long d, bool pattern_signs) {
    std::vector<double> x(static_cast<size_t>(d));
    for (long i = 0; i < d; ++i) {
        double mag = std::pow(10.0, -7.0 + 9.0 * uniform01(rng));
        double u = uniform01(rng);  // always drawn, keeps streams aligned
        double sign;
        if (pattern_signs) {
            sign = (i % 2 == 0) ? -1.0 : 1.0;  // a_1,a_3,a_5 < 0; a_2,a_4,a_6 > 0
        } else {
            sign = u < 0.5 ? -1.0 : 1.0;
        }
        x[static_cast<size_t>(i)] = sign * mag;
    }
    return x;
}

}  // namespace

double feasibility_margin(long n, const std::vector<double>& tail, double Tc) {
    long d = static_cast<long>(tail.size());
    certify::check_degree(n, d);
    std::vector<double> cq(static_cast<size_t>(2 * d + 1));
    for (long q = 0; q <= 2 * d; ++q)
        cq[static_cast<size_t>(q)] = moments::moment_double(n, q, Tc);

    double g[3];
    for (long a0 = 0; a0 <= 2; ++a0) {
        std::vector<double> coeffs;
        coeffs.reserve(tail.size() + 1);
        coeffs.push_back(static_cast<double>(a0));
        coeffs.insert(coeffs.end(), tail.begin(), tail.end());
        g[a0] = i_derivative_scaled(n, coeffs, cq, 1).value;
    }
    double A = (g[0] - 2.0 * g[1] + g[2]) / 2.0;
    double B = (4.0 * g[1] - 3.0 * g[0] - g[2]) / 2.0;
    double C = g[0];

    double disc = B * B - 4.0 * A * C;
    double scaleD = B * B + std::fabs(4.0 * A * C);
    if (!(disc > 0.0) || !(A > 0.0)) return scaleD > 0.0 ? disc / scaleD : 0.0;

    double a0 = (-B + std::sqrt(disc)) / (2.0 * A);
    std::vector<double> coeffs;
    coeffs.reserve(tail.size() + 1);
    coeffs.push_back(a0);
    coeffs.insert(coeffs.end(), tail.begin(), tail.end());

    ValueScale i1 = i_derivative_scaled(n, coeffs, cq, 0);
    ValueScale i2 = i_derivative_scaled(n, coeffs, cq, 2);
    ValueScale j1 = j_value_scaled(n, coeffs, cq);

    auto normed = [](double v, double s) { return s > 0.0 ? v / s : 0.0; };
    double m = disc / scaleD;
    m = std::min(m, normed(i1.value, i1.scale));
    m = std::min(m, normed(-i2.value, i2.scale));
    m = std::min(m, normed(-j1.value, j1.scale));
    return m;
}

Rational rationalize(double x, long den_cap) {
    if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
    if (den_cap < 1) throw std::invalid_argument("rationalize: denominator cap < 1");
    mpq_class exact_val(x);  // exact binary value
    bool neg = exact_val < 0;
    if (neg) exact_val = -exact_val;
    Rational target{exact_val};
    Rational cap(den_cap);

    // Continued-fraction convergents with exact arithmetic; when the next
    // convergent would break the cap, compare the last convergent against the
    // largest admissible semiconvergent and keep the closer (ties: smaller
    // denominator).
    mpz_class hp = 1, kp = 0;                      // h_{-1}/k_{-1}
    mpz_class a0 = exact_val.get_num() / exact_val.get_den();
    mpz_class h = a0, k = 1;
    Rational frac = target - Rational(mpz_class(a0));
    while (!frac.is_zero()) {
        Rational inv = frac.inverse();
        mpz_class a = inv.num() / inv.den();
        frac = inv - Rational(a);
        mpz_class hn = a * h + hp, kn = a * k + kp;
        if (Rational(kn) > cap) {
            mpz_class j = (den_cap - kp) / k;
            Rational conv{mpq_class(h, k)};
            Rational best = conv;
            if (j > 0) {
                Rational semi{mpq_class(j * h + hp, j * k + kp)};
                Rational dc = (target - conv).abs(), ds = (target - semi).abs();
                if (ds < dc || (ds == dc && semi.den() < conv.den())) best = semi;
            }
            return neg ? -best : best;
        }
        hp = h; kp = k; h = hn; k = kn;
    }
    Rational out{mpq_class(h, k)};
    return neg ? -out : out;
}

Candidate rationalize_and_recheck(Candidate c, long den_cap) {
    c.tail_rational.clear();
    c.tail_rational.reserve(c.tail.size());
    for (double v : c.tail) c.tail_rational.push_back(rationalize(v, den_cap));
    c.certified.reset();
    try {
        certify::Certificate cert = certify::certify_dimension(c.n, c.tail_rational);
        if (cert.passed()) {
            c.certified = std::move(cert);
            c.note.clear();
        } else {
            c.note = "exact recheck failed: " + certify::overall_string(cert.overall);
        }
    } catch (const std::exception& e) {
        c.note = std::string("exact recheck error: ") + e.what();
    }
    return c;
}

std::vector<Candidate> search(long d, long n, long budget, unsigned long long seed,
                              int threads, long den_cap) {
    if (d < 1) throw std::invalid_argument("search: degree must be >= 1");
    certify::check_degree(n, d);
    if (budget <= 0) throw std::invalid_argument("search: budget must be positive");

    long nm_budget = std::max<long>(1, budget * 3 / 4);
    long num_starts = std::clamp<long>(budget / 500, 1, 40);
    long per_start = std::max<long>(1, nm_budget / num_starts);

    std::vector<Candidate> candidates(static_cast<size_t>(num_starts) + 1);
    std::vector<long> used(static_cast<size_t>(num_starts), 0);

    util::parallel_for(num_starts, threads, [&](long k) {
        std::mt19937_64 rng = make_stream(seed, static_cast<std::uint64_t>(k));
        std::vector<double> x0 = random_start(rng, d, k % 2 == 0);
        Objective obj{n, 0.0, 0, per_start};
        NMPoint p = nelder_mead(obj, x0);
        used[static_cast<size_t>(k)] = obj.evals;
        Candidate& c = candidates[static_cast<size_t>(k)];
        c.tail = std::move(p.x);
        c.n = n;
        c.margin = p.f >= 1e6 ? -1e6 : -p.f;
    });

    long spent = 0;
    for (long u : used) spent += u;
    long remaining = budget - spent;

    // Perturbation polish of the best start on the remaining budget: a simple
    // accept-if-better random walk scaling each coordinate, own RNG substream.
    if (remaining <= 0) {
        candidates.resize(static_cast<size_t>(num_starts));
    } else {
        long best_idx = 0;
        for (long k = 1; k < num_starts; ++k)
            if (candidates[static_cast<size_t>(k)].margin >
                candidates[static_cast<size_t>(best_idx)].margin)
                best_idx = k;
        Candidate& polished = candidates[static_cast<size_t>(num_starts)];
        polished = candidates[static_cast<size_t>(best_idx)];
        std::mt19937_64 rng = make_stream(seed, static_cast<std::uint64_t>(num_starts));
        std::vector<double> x = polished.tail;
        double m = polished.margin;
        for (long it = 0; it < remaining; ++it) {
            std::vector<double> y = x;
            for (double& v : y) v *= 1.0 + 0.15 * gaussian(rng);
            bool inside = true;
            for (double v : y)
                if (!(std::fabs(v) <= kBox)) inside = false;
            if (!inside) continue;
            double my = feasibility_margin(n, y, 0.0);
            if (std::isfinite(my) && my > m) {
                m = my;
                x = std::move(y);
            }
        }
        polished.tail = std::move(x);
        polished.margin = m;
    }

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.margin > b.margin; });

    util::parallel_for(static_cast<long>(candidates.size()), threads, [&](long i) {
        Candidate& c = candidates[static_cast<size_t>(i)];
        if (c.margin > 0.0) {
            c = rationalize_and_recheck(std::move(c), den_cap);
        } else {
            c.tail_rational.clear();
            for (double v : c.tail) c.tail_rational.push_back(rationalize(v, den_cap));
            c.note = "not rechecked: nonpositive floating margin";
        }
    });
    return candidates;
}

std::string search_report_json(long d, long n, long budget, unsigned long long seed,
                               long den_cap, const std::vector<Candidate>& candidates,
                               int indent) {
    nlohmann::ordered_json j;
    j["version"] = std::string(BCERT_VERSION_STRING);
    nlohmann::ordered_json params;
    params["d"] = d;
    params["n"] = n;
    params["budget"] = budget;
    params["seed"] = seed;
    params["den_cap"] = den_cap;
    j["parameters"] = params;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : candidates) {
        nlohmann::ordered_json e;
        nlohmann::ordered_json tail = nlohmann::ordered_json::array();
        for (const auto& a : c.tail_rational) tail.push_back(a.str());
        e["tail"] = tail;
        e["margin"] = c.margin;
        e["certified"] = c.certified.has_value();
        if (!c.note.empty()) e["note"] = c.note;
        if (c.certified)
            e["certificate"] =
                nlohmann::ordered_json::parse(certify::certificate_to_json(*c.certified));
        arr.push_back(e);
    }
    j["candidates"] = arr;
    return j.dump(indent);
}

}  // namespace bcert::search
