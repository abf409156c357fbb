#pragma once

#include <string>

#include "bcert/certify.hpp"

namespace bcert::certify {

// Sign as a one-character tag: "+", "-", "0", "?".
std::string sign_char(Sign s);

// Overall verdict as "pass" | "fail" | "indeterminate".
std::string overall_string(Overall o);

// Byte-stable JSON rendering (insertion-ordered keys, exact rational strings,
// no floating-point fields).  elapsed_ms is emitted as stored; callers that
// want reproducible bytes leave it at 0.
std::string certificate_to_json(const Certificate& cert, int indent = 2);

// One CSV row matching the header
//   n,d,discrim_sign,i1_sign,iprime1_zero,i2_sign,j1_sign,pass
std::string certificate_csv_header();
std::string certificate_csv_row(const Certificate& cert);

}  // namespace bcert::certify
