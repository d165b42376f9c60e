#include "bnclass/serialize.hpp"

#include <sstream>

#include "bnclass/error.hpp"

namespace bnclass {

namespace {

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<Rational> rationals_from(const Json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::InvalidInput, "expected a JSON array of rationals");
  }
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorCode::InvalidInput, std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

struct Term {
  Rational coeff;
  std::string name;
};

std::string terms_to_text(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    const bool negative = t.coeff < 0;
    const std::string mag = to_string(Rational(abs(t.coeff)));
    if (out.empty()) {
      out = (negative ? "-" : "") + mag + "*" + t.name;
    } else {
      out += (negative ? " - " : " + ") + mag + "*" + t.name;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<Term> down_terms(const DownClass& c) {
  std::vector<Term> terms{{c.eta, "eta"}, {c.lambda, "lambda"}};
  for (std::size_t i = 0; i < c.delta.size(); ++i) terms.push_back({c.delta[i], "delta" + std::to_string(i)});
  return terms;
}

std::vector<Term> up_terms(const UpClass& c) {
  std::vector<Term> terms{{c.psi, "psi"}, {c.eta, "eta"}, {c.lambda, "lambda"}};
  for (std::size_t i = 0; i < c.delta.size(); ++i) terms.push_back({c.delta[i], "delta" + std::to_string(i)});
  return terms;
}

// CSV keeps the eta, lambda, psi, delta order of the JSON format.
std::vector<Term> up_columns(const UpClass& c) {
  std::vector<Term> terms{{c.eta, "eta"}, {c.lambda, "lambda"}, {c.psi, "psi"}};
  for (std::size_t i = 0; i < c.delta.size(); ++i) terms.push_back({c.delta[i], "delta" + std::to_string(i)});
  return terms;
}

std::string join_names(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) out += (out.empty() ? "" : ",") + t.name;
  return out;
}

std::string join_values(const std::vector<Term>& terms) {
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    out += (first ? "" : ",") + to_string(t.coeff);
    first = false;
  }
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<long>());
  }
  throw Error(ErrorCode::InvalidInput, "rational must be a \"p/q\" string or an integer");
}

Json to_json(const DownClass& c) {
  Json coeffs;
  coeffs["eta"] = to_string(c.eta);
  coeffs["lambda"] = to_string(c.lambda);
  coeffs["delta"] = rational_list(c.delta);
  return Json{{"space", "PEk_g"}, {"g", c.g}, {"k", c.k}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const UpClass& c) {
  Json coeffs;
  coeffs["eta"] = to_string(c.eta);
  coeffs["lambda"] = to_string(c.lambda);
  coeffs["psi"] = to_string(c.psi);
  coeffs["delta"] = rational_list(c.delta);
  return Json{{"space", "PEk_g1"}, {"g", c.g}, {"k", c.k}, {"coeffs", std::move(coeffs)}};
}

DownClass down_class_from_json(const Json& j) {
  if (field(j, "space") != "PEk_g") {
    throw Error(ErrorCode::InvalidInput, "expected space \"PEk_g\"");
  }
  const Json& coeffs = field(j, "coeffs");
  DownClass c;
  c.g = int_field(j, "g");
  c.k = int_field(j, "k");
  c.eta = rational_from_json(field(coeffs, "eta"));
  c.lambda = rational_from_json(field(coeffs, "lambda"));
  c.delta = rationals_from(field(coeffs, "delta"));
  validate(c);
  return c;
}

UpClass up_class_from_json(const Json& j) {
  if (field(j, "space") != "PEk_g1") {
    throw Error(ErrorCode::InvalidInput, "expected space \"PEk_g1\"");
  }
  const Json& coeffs = field(j, "coeffs");
  UpClass c;
  c.g = int_field(j, "g");
  c.k = int_field(j, "k");
  c.eta = rational_from_json(field(coeffs, "eta"));
  c.lambda = rational_from_json(field(coeffs, "lambda"));
  c.psi = rational_from_json(field(coeffs, "psi"));
  c.delta = rationals_from(field(coeffs, "delta"));
  validate(c);
  return c;
}

Json to_json(const VerificationReport& r) {
  Json input{{"g", r.g}, {"k", r.k}, {"d", r.d}, {"a", r.a}};
  Json routes;
  const auto route = [](const std::optional<DownClass>& c) { return c ? to_json(*c) : Json(nullptr); };
  routes["direct"] = route(r.direct);
  routes["pushforward"] = route(r.pushforward);
  routes["families"] = route(r.families);
  Json residuals = Json::array();
  for (const auto& res : r.residuals) {
    residuals.push_back(Json{{"row", res.row}, {"value", to_string(res.value)}});
  }
  Json out;
  out["input"] = std::move(input);
  out["n"] = r.n ? Json(to_string(*r.n)) : Json(nullptr);
  out["mu"] = r.mu_nu ? Json(to_string(r.mu_nu->mu)) : Json(nullptr);
  out["nu"] = r.mu_nu ? Json(to_string(r.mu_nu->nu)) : Json(nullptr);
  out["routes"] = std::move(routes);
  out["agreement"] = Json{{"direct_pushforward", r.direct_equals_pushforward},
                          {"direct_families", r.direct_equals_families},
                          {"pushforward_families", r.pushforward_equals_families}};
  out["residuals"] = std::move(residuals);
  out["status"] = std::string(status_name(r.status));
  if (!r.message.empty()) {
    out["message"] = r.message;
  }
  return out;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  const Json& input = field(j, "input");
  r.g = int_field(input, "g");
  r.k = int_field(input, "k");
  r.d = int_field(input, "d");
  r.a = field(input, "a").get<std::vector<int>>();
  if (!field(j, "n").is_null()) {
    r.n = Integer(field(j, "n").get<std::string>(), 10);
  }
  if (!field(j, "mu").is_null()) {
    r.mu_nu = MuNu{rational_from_json(j.at("mu")), rational_from_json(field(j, "nu"))};
  }
  const Json& routes = field(j, "routes");
  const auto route = [&](const char* key) -> std::optional<DownClass> {
    const Json& c = field(routes, key);
    if (c.is_null()) return std::nullopt;
    return down_class_from_json(c);
  };
  r.direct = route("direct");
  r.pushforward = route("pushforward");
  r.families = route("families");
  const Json& agreement = field(j, "agreement");
  r.direct_equals_pushforward = field(agreement, "direct_pushforward").get<bool>();
  r.direct_equals_families = field(agreement, "direct_families").get<bool>();
  r.pushforward_equals_families = field(agreement, "pushforward_families").get<bool>();
  for (const auto& res : field(j, "residuals")) {
    r.residuals.push_back({field(res, "row").get<std::string>(), rational_from_json(field(res, "value"))});
  }
  const std::string status = field(j, "status").get<std::string>();
  if (status == "PASS") {
    r.status = VerificationStatus::Pass;
  } else if (status == "FAIL") {
    r.status = VerificationStatus::Fail;
  } else if (status == "UNSUPPORTED") {
    r.status = VerificationStatus::Unsupported;
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown report status '" + status + "'");
  }
  r.message = j.value("message", std::string());
  return r;
}

Json to_json(const IntersectionTable& t) {
  Json out;
  out["lambda"] = to_string(t.lambda);
  out[t.k == 1 ? "delta0" : "delta"] = to_string(t.boundary);
  out["psi"] = to_string(t.psi);
  out["eta"] = to_string(t.eta);
  out["H"] = to_string(t.incidence);
  return out;
}

Json to_json(const TeichCurve& tc) {
  Json out{{"k", tc.k}, {"g", tc.g}, {"chi", to_string(tc.chi)}};
  if (tc.lyapunov_sum) out["L"] = to_string(*tc.lyapunov_sum);
  if (tc.c_sv) out["c_sv"] = to_string(*tc.c_sv);
  return out;
}

TeichCurve teich_curve_from_json(const Json& j) {
  TeichCurve tc;
  tc.k = int_field(j, "k");
  tc.g = int_field(j, "g");
  tc.chi = j.contains("chi") ? rational_from_json(j.at("chi")) : Rational(-1);
  if (j.contains("L")) tc.lyapunov_sum = rational_from_json(j.at("L"));
  if (j.contains("c_sv")) tc.c_sv = rational_from_json(j.at("c_sv"));
  tc.validate();
  return tc;
}

std::vector<TeichCurve> teich_curves_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::InvalidInput, "curves file must hold a JSON array");
  }
  std::vector<TeichCurve> out;
  for (const auto& c : j) out.push_back(teich_curve_from_json(c));
  return out;
}

std::string to_text(const DownClass& c) { return terms_to_text(down_terms(c)); }
std::string to_text(const UpClass& c) { return terms_to_text(up_terms(c)); }
std::string csv_header(const DownClass& c) { return join_names(down_terms(c)); }
std::string csv_row(const DownClass& c) { return join_values(down_terms(c)); }

std::string csv_header(const UpClass& c) { return join_names(up_columns(c)); }
std::string csv_row(const UpClass& c) { return join_values(up_columns(c)); }

}  // namespace bnclass
