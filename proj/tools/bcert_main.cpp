// bcert: command-line front end for the certification library.
//
// Subcommands: certify, table, cbar, search, bubble-check.  Certification
// inputs are exact rational strings ("p/q"); floating-point notation is
// refused so that every certificate is reproducible bit for bit.  Exit codes:
// 0 = everything requested passed, 1 = at least one verdict failed or stayed
// indeterminate, 2 = usage or precondition error (diagnostic on stderr).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcert/bubble.hpp"
#include "bcert/certificate.hpp"
#include "bcert/certify.hpp"
#include "bcert/parallel.hpp"
#include "bcert/search.hpp"
#include "bcert/version.hpp"

namespace {

using bcert::exact::RatInterval;
using bcert::exact::Rational;

// Usage/precondition failure: maps to exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text, const std::string& what) {
    auto r = Rational::parse(text);
    if (!r)
        throw usage_error(what + ": not an exact rational: '" + text +
                          "' (use integer or p/q form; decimals are not accepted)");
    return *r;
}

std::vector<Rational> load_tail(const std::string& source) {
    if (source == "paper-d6") {
        return {Rational(-10),        Rational(1, 10000),   Rational(-1, 1000),
                Rational(184, 1000),  Rational(-265, 10000), Rational(737, 1000000)};
    }
    if (source == "chenwu-d1") return {Rational(-1)};
    std::ifstream in(source);
    if (!in)
        throw usage_error("tail: '" + source +
                          "' is neither a built-in name (paper-d6, chenwu-d1) nor a "
                          "readable file");
    std::vector<Rational> tail;
    std::string token;
    while (in >> token) {
        while (!token.empty() && token.back() == ',') token.pop_back();
        if (token.empty()) continue;
        tail.push_back(parse_rational(token, "tail file entry"));
    }
    if (tail.empty()) throw usage_error("tail: file '" + source + "' holds no coefficients");
    return tail;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw usage_error("output: cannot open '" + path + "' for writing");
    out << content;
    if (content.empty() || content.back() != '\n') out << '\n';
}

long elapsed_ms_since(const std::chrono::steady_clock::time_point& t0) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count());
}

struct CertifyOptions {
    long n = 0;
    std::string tail_source = "paper-d6";
    std::string tc = "0";
    std::optional<std::string> tc_lo, tc_hi;
    std::string precision = "1/1000000";
    int split_depth = 20;
    std::string format = "json";
    std::string output;
    bool timings = false;
};

bcert::certify::Certificate run_one_certification(const CertifyOptions& opt,
                                                  const std::vector<Rational>& tail) {
    Rational precision = parse_rational(opt.precision, "precision");
    if (precision.sign() <= 0) throw usage_error("precision: must be > 0");
    auto t0 = std::chrono::steady_clock::now();
    bcert::certify::Certificate cert;
    if (opt.tc_lo || opt.tc_hi) {
        if (!(opt.tc_lo && opt.tc_hi))
            throw usage_error("tc range: --tc-lo and --tc-hi must be given together");
        Rational lo = parse_rational(*opt.tc_lo, "tc-lo");
        Rational hi = parse_rational(*opt.tc_hi, "tc-hi");
        if (lo > hi) throw usage_error("tc range: lo > hi");
        cert = bcert::certify::certify_interval(opt.n, tail, RatInterval(lo, hi),
                                                precision, opt.split_depth);
    } else {
        Rational tc = parse_rational(opt.tc, "tc");
        if (tc.is_zero()) {
            cert = bcert::certify::certify_dimension(opt.n, tail, tc);
        } else {
            cert = bcert::certify::certify_interval(opt.n, tail, RatInterval(tc),
                                                    precision, opt.split_depth);
        }
    }
    if (opt.timings) cert.elapsed_ms = elapsed_ms_since(t0);
    return cert;
}

int cmd_certify(const CertifyOptions& opt) {
    std::vector<Rational> tail = load_tail(opt.tail_source);
    bcert::certify::Certificate cert = run_one_certification(opt, tail);
    if (opt.format == "csv") {
        write_output(opt.output, bcert::certify::certificate_csv_header() + "\n" +
                                     bcert::certify::certificate_csv_row(cert));
    } else {
        write_output(opt.output, bcert::certify::certificate_to_json(cert));
    }
    return cert.passed() ? 0 : 1;
}

struct TableOptions {
    long n_min = 0, n_max = 0;
    std::string tail_source = "paper-d6";
    std::string tc = "0";
    std::string precision = "1/1000000";
    int split_depth = 20;
    std::string format = "csv";
    std::string output;
    int threads = 0;
    bool timings = false;
};

int cmd_table(const TableOptions& opt) {
    if (opt.n_min > opt.n_max) throw usage_error("table: n-min > n-max");
    std::vector<Rational> tail = load_tail(opt.tail_source);
    long count = opt.n_max - opt.n_min + 1;
    std::vector<bcert::certify::Certificate> rows(static_cast<size_t>(count));
    CertifyOptions one;
    one.tail_source = opt.tail_source;
    one.tc = opt.tc;
    one.precision = opt.precision;
    one.split_depth = opt.split_depth;
    one.timings = opt.timings;
    bcert::util::parallel_for(count, opt.threads, [&](long i) {
        CertifyOptions local = one;
        local.n = opt.n_min + i;
        rows[static_cast<size_t>(i)] = run_one_certification(local, tail);
    });
    bool all_pass = true;
    for (const auto& cert : rows) all_pass = all_pass && cert.passed();
    if (opt.format == "json") {
        std::string body = "[\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            std::istringstream cert_json(bcert::certify::certificate_to_json(rows[i]));
            std::string line;
            while (std::getline(cert_json, line)) body += "  " + line + "\n";
            if (i + 1 < rows.size()) {
                body.insert(body.size() - 1, ",");
            }
        }
        body += "]";
        write_output(opt.output, body);
    } else {
        std::string body = bcert::certify::certificate_csv_header();
        for (const auto& cert : rows) body += "\n" + bcert::certify::certificate_csv_row(cert);
        write_output(opt.output, body);
    }
    return all_pass ? 0 : 1;
}

struct CbarOptions {
    long n = 0;
    std::string tail_source;
    std::string precision = "1/10000";
    std::string output;
    bool timings = false;
};

int cmd_cbar(const CbarOptions& opt) {
    std::vector<Rational> tail = load_tail(opt.tail_source);
    Rational precision = parse_rational(opt.precision, "precision");
    if (precision.sign() <= 0) throw usage_error("precision: must be > 0");
    auto t0 = std::chrono::steady_clock::now();
    bcert::certify::CbarResult result = bcert::certify::find_cbar(opt.n, tail, precision);
    if (opt.timings) result.certificate.elapsed_ms = elapsed_ms_since(t0);
    std::string body = "{\n";
    body += "  \"version\": \"" + std::string(BCERT_VERSION_STRING) + "\",\n";
    body += "  \"n\": " + std::to_string(opt.n) + ",\n";
    body += "  \"precision\": \"" + precision.str() + "\",\n";
    body += "  \"cbar\": \"" + result.cbar.str() + "\",\n";
    body += "  \"tc_lo\": \"" + (-(result.cbar / Rational(opt.n - 2))).str() + "\",\n";
    body += "  \"certificate\": ";
    {
        std::istringstream cert_json(
            bcert::certify::certificate_to_json(result.certificate));
        std::string line;
        bool first = true;
        while (std::getline(cert_json, line)) {
            if (!first) body += "\n  ";
            body += line;
            first = false;
        }
    }
    body += "\n}";
    write_output(opt.output, body);
    return result.certificate.passed() ? 0 : 1;
}

struct SearchOptions {
    long d = 6;
    long n = 0;
    long budget = 20000;
    unsigned long long seed = 42;
    long den_cap = 1000000;
    int threads = 0;
    std::string output;
};

int cmd_search(const SearchOptions& opt) {
    if (opt.d < 1) throw usage_error("search: d must be >= 1");
    if (opt.budget < 1) throw usage_error("search: budget must be >= 1");
    std::vector<bcert::search::Candidate> candidates = bcert::search::search(
        opt.d, opt.n, opt.budget, opt.seed, opt.threads, opt.den_cap);
    write_output(opt.output,
                 bcert::search::search_report_json(opt.d, opt.n, opt.budget, opt.seed,
                                                   opt.den_cap, candidates));
    for (const auto& c : candidates)
        if (c.certified) return 0;
    return 1;
}

struct BubbleOptions {
    long n = 0;
    std::string tc = "0";
    std::string output;
};

int cmd_bubble_check(const BubbleOptions& opt) {
    double tc;
    if (auto r = Rational::parse(opt.tc)) {
        tc = r->to_double();
    } else {
        // Diagnostics only: floating input is acceptable here.
        try {
            size_t pos = 0;
            tc = std::stod(opt.tc, &pos);
            if (pos != opt.tc.size()) throw std::invalid_argument(opt.tc);
        } catch (const std::exception&) {
            throw usage_error("tc: cannot parse '" + opt.tc + "'");
        }
    }
    std::vector<bcert::bubble::BubbleCheck> checks =
        bcert::bubble::standard_bubble_checks(opt.n, tc);
    write_output(opt.output, bcert::bubble::bubble_report_json(checks));
    for (const auto& c : checks)
        if (!c.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact sign-condition certification for polynomial perturbation "
                 "profiles: certificates, range tables, certified parameter bounds, "
                 "coefficient search, and bubble diagnostics."};
    app.set_version_flag("--version", std::string("bcert ") + BCERT_VERSION_STRING);
    app.require_subcommand(1);

    CertifyOptions certify_opt;
    CLI::App* certify = app.add_subcommand("certify", "Certify one (n, tail, Tc)");
    certify->add_option("--n", certify_opt.n, "Dimension n")->required();
    certify->add_option("--tail", certify_opt.tail_source,
                        "Built-in tail (paper-d6 | chenwu-d1) or file of rationals");
    certify->add_option("--tc", certify_opt.tc, "Boundary parameter Tc (rational <= 0)");
    certify->add_option("--tc-lo", certify_opt.tc_lo, "Range mode: lower Tc endpoint");
    certify->add_option("--tc-hi", certify_opt.tc_hi, "Range mode: upper Tc endpoint");
    certify->add_option("--precision", certify_opt.precision,
                        "Interval-mode enclosure precision (rational)");
    certify->add_option("--split-depth", certify_opt.split_depth,
                        "Max automatic Tc-splitting depth in interval mode");
    certify->add_option("--format", certify_opt.format, "Output format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    certify->add_option("--output,-o", certify_opt.output, "Output path (default stdout)");
    certify->add_flag("--timings", certify_opt.timings,
                      "Record wall time (off by default so output bytes are stable)");

    TableOptions table_opt;
    CLI::App* table = app.add_subcommand("table", "Certify every n in a range");
    table->add_option("--n-min", table_opt.n_min, "Smallest n")->required();
    table->add_option("--n-max", table_opt.n_max, "Largest n")->required();
    table->add_option("--tail", table_opt.tail_source, "Tail source");
    table->add_option("--tc", table_opt.tc, "Boundary parameter Tc (rational <= 0)");
    table->add_option("--precision", table_opt.precision, "Interval-mode precision");
    table->add_option("--split-depth", table_opt.split_depth, "Interval split depth");
    table->add_option("--format", table_opt.format, "Output format: csv | json")
        ->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--output,-o", table_opt.output, "Output path (default stdout)");
    table->add_option("--threads", table_opt.threads,
                      "Worker threads (0 = BCERT_THREADS env or hardware)");
    table->add_flag("--timings", table_opt.timings, "Record wall times");

    CbarOptions cbar_opt;
    CLI::App* cbar = app.add_subcommand(
        "cbar", "Largest certified c with Tc = -c/(n-2) (certified bisection)");
    cbar->add_option("--n", cbar_opt.n, "Dimension n")->required();
    cbar->add_option("--tail", cbar_opt.tail_source, "Tail source")->required();
    cbar->add_option("--precision", cbar_opt.precision,
                     "Relative bisection precision (rational)");
    cbar->add_option("--output,-o", cbar_opt.output, "Output path (default stdout)");
    cbar->add_flag("--timings", cbar_opt.timings, "Record wall time");

    SearchOptions search_opt;
    CLI::App* search = app.add_subcommand(
        "search", "Feasibility search over tail coefficients with exact recheck");
    search->add_option("--n", search_opt.n, "Dimension n")->required();
    search->add_option("--d", search_opt.d, "Tail degree d (default 6)");
    search->add_option("--budget", search_opt.budget, "Margin evaluation budget");
    search->add_option("--seed", search_opt.seed, "Deterministic RNG seed");
    search->add_option("--den-cap", search_opt.den_cap,
                       "Denominator cap for rationalization");
    search->add_option("--threads", search_opt.threads,
                       "Worker threads (0 = BCERT_THREADS env or hardware)");
    search->add_option("--output,-o", search_opt.output, "Output path (default stdout)");

    BubbleOptions bubble_opt;
    CLI::App* bubble = app.add_subcommand(
        "bubble-check", "Bubble diagnostics: orthogonality, energy, PDE residuals");
    bubble->add_option("--n", bubble_opt.n, "Dimension n")->required();
    bubble->add_option("--tc", bubble_opt.tc, "Boundary parameter Tc (rational or float)");
    bubble->add_option("--output,-o", bubble_opt.output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (certify->parsed()) return cmd_certify(certify_opt);
        if (table->parsed()) return cmd_table(table_opt);
        if (cbar->parsed()) return cmd_cbar(cbar_opt);
        if (search->parsed()) return cmd_search(search_opt);
        if (bubble->parsed()) return cmd_bubble_check(bubble_opt);
    } catch (const std::exception& e) {
        std::cerr << "bcert: error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "bcert: error: no subcommand\n";
    return 2;
}
