#pragma once

#include <json.hpp>

#include "qlin/exact/io.hpp"
#include "qlin/linearize/double_rep.hpp"
#include "qlin/words/io.hpp"

namespace qlin::linearize {

namespace detail {

inline void check_fields(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ValidationError(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

}  // namespace detail

// {"d": 2, "m": 5, "generators": [matrix, ...], "w": [[gen, exp], ...],
//  "weights": ["1", "-1"], "h": matrix (optional), "name": ... (optional)}
inline RepSpec rep_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("spec: expected a JSON object");
  detail::check_fields(j, {"d", "m", "generators", "w", "weights", "h", "name"}, "spec");
  for (const char* required : {"d", "generators", "w", "weights"})
    if (!j.contains(required))
      throw ValidationError(std::string("spec: missing field \"") + required + "\"");

  RepSpec spec;
  if (!j.at("d").is_number_integer()) throw ValidationError("spec: \"d\" must be an integer");
  spec.d = j.at("d").get<int>();
  if (j.contains("m")) {
    if (!j.at("m").is_number_integer()) throw ValidationError("spec: \"m\" must be an integer");
    spec.m = j.at("m").get<long>();
  }
  if (!j.at("generators").is_array() || j.at("generators").empty())
    throw ValidationError("spec: \"generators\" must be a non-empty array");
  for (const auto& g : j.at("generators"))
    spec.generators.push_back(exact::parse_scalar_matrix(g, "generator"));
  spec.w = words::gamma_from_json(j.at("w"), "w");
  if (spec.w.empty_word()) throw ValidationError("spec: \"w\" must be a nonempty word");

  if (!j.at("weights").is_array()) throw ValidationError("spec: \"weights\" must be an array");
  for (const auto& c : j.at("weights")) {
    if (c.is_string())
      spec.weights.chi.push_back(exact::parse_rational(c.get<std::string>()));
    else if (c.is_number_integer())
      spec.weights.chi.push_back(exact::Rational(c.get<long>()));
    else
      throw ValidationError("spec: weight entries must be rational strings or integers");
  }

  if (j.contains("h")) spec.conjugator = exact::parse_scalar_matrix(j.at("h"), "h");
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ValidationError("spec: \"name\" must be a string");
    spec.name = j.at("name").get<std::string>();
  }
  return spec;
}

inline nlohmann::json to_json(const RepSpec& spec) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : spec.generators) gens.push_back(exact::to_json(g));
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& c : spec.weights.chi) weights.push_back(exact::to_string(c));
  nlohmann::json j{{"d", spec.d},           {"m", spec.m}, {"generators", gens},
                   {"w", words::to_json(spec.w)}, {"weights", weights}};
  if (spec.conjugator) j["h"] = exact::to_json(*spec.conjugator);
  if (!spec.name.empty()) j["name"] = spec.name;
  return j;
}

inline nlohmann::json to_json(const Certificate& cert, const words::GammaElement& w) {
  nlohmann::json j;
  j["word"] = words::to_json(cert.word);
  j["reduced"] = words::to_json(cert.reduced);
  j["canonical"] = words::to_json(cert.canonical.as_word(w));
  switch (cert.canonical.kind) {
    case CanonicalForm::Kind::base: j["class"] = "base"; break;
    case CanonicalForm::Kind::axis: j["class"] = "axis"; break;
    case CanonicalForm::Kind::standard: j["class"] = "standard"; break;
  }
  j["d_k"] = cert.ledger_degree ? nlohmann::json(exact::to_string(*cert.ledger_degree))
                                : nlohmann::json(nullptr);
  j["observed_deg_11"] = cert.observed_deg_11
                             ? nlohmann::json(exact::to_string(*cert.observed_deg_11))
                             : nlohmann::json(nullptr);
  j["observed_deg_1d"] = cert.observed_deg_1d
                             ? nlohmann::json(exact::to_string(*cert.observed_deg_1d))
                             : nlohmann::json(nullptr);
  j["corner_check"] = cert.corner_ok;
  j["verdict"] = to_string(cert.verdict);
  return j;
}

inline nlohmann::json to_json(const DoubleCertificate& cert) {
  nlohmann::json j;
  j["word"] = words::to_json(cert.word);
  j["normal_form"] = words::to_json(cert.normal_form);
  j["normal_form_length"] = cert.normal_form.letters.size();
  j["canonical"] = words::to_json(cert.canonical);
  j["expected_degree"] = cert.expected_degree
                             ? nlohmann::json(exact::to_string(*cert.expected_degree))
                             : nlohmann::json(nullptr);
  j["observed_deg_11"] = cert.observed_deg_11
                             ? nlohmann::json(exact::to_string(*cert.observed_deg_11))
                             : nlohmann::json(nullptr);
  j["observed_deg_1d"] = cert.observed_deg_1d
                             ? nlohmann::json(exact::to_string(*cert.observed_deg_1d))
                             : nlohmann::json(nullptr);
  j["verdict"] = to_string(cert.verdict);
  return j;
}

}  // namespace qlin::linearize
