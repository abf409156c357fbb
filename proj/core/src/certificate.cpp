#include "bcert/certificate.hpp"

#include <nlohmann/json.hpp>

#include "bcert/version.hpp"

namespace bcert::certify {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json quadext_json(const QuadExt& v) {
    ordered_json j;
    j["p"] = v.p().str();
    j["q"] = v.q().str();
    j["D"] = v.D().str();
    return j;
}

ordered_json interval_json(const RatInterval& v) {
    ordered_json j;
    j["lo"] = v.lo().str();
    j["hi"] = v.hi().str();
    return j;
}

ordered_json certified_value_json(const CertifiedValue& v, bool include_structural) {
    ordered_json j;
    if (v.exact) j["value"] = quadext_json(*v.exact);
    if (v.interval) j["interval"] = interval_json(*v.interval);
    j["sign"] = sign_char(v.sign);
    if (include_structural && v.structural) j["structural"] = true;
    return j;
}

}  // namespace

std::string sign_char(Sign s) {
    switch (s) {
        case Sign::Positive: return "+";
        case Sign::Negative: return "-";
        case Sign::Zero: return "0";
        default: return "?";
    }
}

std::string overall_string(Overall o) {
    switch (o) {
        case Overall::Pass: return "pass";
        case Overall::Fail: return "fail";
        default: return "indeterminate";
    }
}

std::string certificate_to_json(const Certificate& cert, int indent) {
    ordered_json j;
    j["version"] = std::string(BCERT_VERSION_STRING);
    j["n"] = cert.n;
    j["d"] = cert.d;
    ordered_json tail = ordered_json::array();
    for (const auto& a : cert.tail) tail.push_back(a.str());
    j["tail"] = tail;
    j["tc_lo"] = cert.tc_lo.str();
    j["tc_hi"] = cert.tc_hi.str();
    j["mode"] = cert.mode == Mode::Exact ? "exact" : "interval";

    ordered_json disc;
    if (cert.disc_exact) disc["value"] = cert.disc_exact->str();
    if (cert.disc_interval) disc["interval"] = interval_json(*cert.disc_interval);
    disc["sign"] = sign_char(cert.disc_sign);
    j["discriminant"] = disc;

    ordered_json a0;
    if (cert.a0_exact) a0 = quadext_json(*cert.a0_exact);
    if (cert.a0_interval) a0["interval"] = interval_json(*cert.a0_interval);
    j["a0"] = a0;

    j["i1"] = certified_value_json(cert.i1, false);
    j["iprime1"] = certified_value_json(cert.iprime1, true);
    j["idoubleprime1"] = certified_value_json(cert.idoubleprime1, false);
    j["j1"] = certified_value_json(cert.j1, false);

    ordered_json v;
    v["discriminant_positive"] = cert.verdicts.disc_positive;
    v["i1_positive"] = cert.verdicts.i1_positive;
    v["iprime1_zero"] = cert.verdicts.iprime1_zero;
    v["idoubleprime1_negative"] = cert.verdicts.idoubleprime1_negative;
    v["j1_negative"] = cert.verdicts.j1_negative;
    j["verdicts"] = v;

    j["overall"] = overall_string(cert.overall);
    j["elapsed_ms"] = cert.elapsed_ms;
    return j.dump(indent);
}

std::string certificate_csv_header() {
    return "n,d,discrim_sign,i1_sign,iprime1_zero,i2_sign,j1_sign,pass";
}

std::string certificate_csv_row(const Certificate& cert) {
    std::string row = std::to_string(cert.n) + "," + std::to_string(cert.d) + "," +
                      sign_char(cert.disc_sign) + "," + sign_char(cert.i1.sign) + "," +
                      (cert.verdicts.iprime1_zero ? "1" : "0") + "," +
                      sign_char(cert.idoubleprime1.sign) + "," + sign_char(cert.j1.sign) +
                      "," + (cert.passed() ? "1" : "0");
    return row;
}

}  // namespace bcert::certify
