#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bnclass/picard.hpp"
#include "bnclass/teichmuller.hpp"
#include "bnclass/test_families.hpp"

namespace bnclass {

using Json = nlohmann::ordered_json;

// Shared class format:
// {"space": "PEk_g" | "PEk_g1", "g": int, "k": int,
//  "coeffs": {"eta": "p/q", "lambda": "p/q", ["psi": "p/q",] "delta": ["p/q", ...]}}

Json to_json(const DownClass& c);
Json to_json(const UpClass& c);
DownClass down_class_from_json(const Json& j);
UpClass up_class_from_json(const Json& j);

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

Json to_json(const IntersectionTable& t);

Json to_json(const TeichCurve& tc);
/// Accepts rationals as "p/q" strings or JSON integers.
TeichCurve teich_curve_from_json(const Json& j);
std::vector<TeichCurve> teich_curves_from_json(const Json& j);

/// Reads a rational from a JSON string or integer.
Rational rational_from_json(const Json& j);

/// Human-readable form, e.g. "-24*eta + 68*lambda - 6*delta0 - 12*delta1".
std::string to_text(const DownClass& c);
/// Pointed classes list psi first: "2*psi - 1*eta".
std::string to_text(const UpClass& c);

/// CSV header and row: eta,lambda,[psi,]delta0,...
std::string csv_header(const DownClass& c);
std::string csv_row(const DownClass& c);
std::string csv_header(const UpClass& c);
std::string csv_row(const UpClass& c);

}  // namespace bnclass
