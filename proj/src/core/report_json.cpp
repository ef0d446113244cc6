#include "cei/report_json.hpp"

#include "cei/errors.hpp"

namespace cei {

namespace {

Json labels_to_json(const std::vector<CanonicalLabel>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l.graph6);
  return out;
}

std::vector<CanonicalLabel> labels_from_json(const Json& j) {
  std::vector<CanonicalLabel> out;
  for (const auto& e : j) out.push_back({e.get<std::string>()});
  return out;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " document: " + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed ") + what + " document: " + e.what());
  }
}

}  // namespace

Json to_json(const ClassSpec& spec) {
  Json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["value"] = spec.value;
  j["connectivity"] = std::string(to_string(spec.connectivity));
  return j;
}

Json to_json(const InvariantSummary& s) {
  Json j;
  j["n"] = s.n;
  j["edges"] = s.edges;
  j["min_degree"] = s.min_degree;
  j["max_degree"] = s.max_degree;
  j["radius"] = s.radius;
  j["diameter"] = s.diameter;
  j["connectivity"] = s.connectivity;
  j["independence_number"] = s.independence_number;
  j["cei"] = s.cei.str();
  j["cei_decimal"] = s.cei.decimal();
  j["eci"] = s.eci;
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["spec"] = to_json(r.spec);
  j["class_size"] = r.class_size;
  j["max_cei"] = r.max_cei ? Json(r.max_cei->str()) : Json(nullptr);
  j["maximizers"] = labels_to_json(r.maximizers);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["theorem"] = std::string(to_string(r.theorem));
  Json params;
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = params;
  j["spec"] = to_json(r.spec);
  j["expected"] = labels_to_json(r.expected);
  j["observed"] = to_json(r.observed);
  j["verdict"] = std::string(to_string(r.verdict));
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const Lemma1Report& r) {
  Json j;
  j["theorem"] = std::string(to_string(Theorem::Lemma1));
  j["max_n"] = r.max_n;
  j["graphs_checked"] = r.graphs_checked;
  j["pairs_checked"] = r.pairs_checked;
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"graph6", v.graph6}, {"u", v.u}, {"v", v.v}});
  j["violations"] = violations;
  j["verdict"] = std::string(to_string(r.holds() ? Verdict::Confirmed : Verdict::Refuted));
  return j;
}

ClassSpec class_spec_from_json(const Json& j) {
  return guarded("class spec", [&] {
    return ClassSpec{parse_class_kind(j.at("kind").get<std::string>()), j.at("n").get<std::size_t>(),
                     j.at("k").get<std::size_t>(), j.at("value").get<std::size_t>(),
                     parse_connectivity(j.at("connectivity").get<std::string>())};
  });
}

SearchReport search_report_from_json(const Json& j) {
  return guarded("search report", [&] {
    SearchReport r;
    r.spec = class_spec_from_json(j.at("spec"));
    r.class_size = j.at("class_size").get<std::size_t>();
    if (!j.at("max_cei").is_null()) r.max_cei = Rational::parse(j.at("max_cei").get<std::string>());
    r.maximizers = labels_from_json(j.at("maximizers"));
    return r;
  });
}

VerificationReport verification_report_from_json(const Json& j) {
  return guarded("verification report", [&] {
    VerificationReport r;
    r.theorem = parse_theorem(j.at("theorem").get<std::string>());
    for (const auto& [name, value] : j.at("params").items()) r.params.emplace_back(name, value.get<std::size_t>());
    r.spec = class_spec_from_json(j.at("spec"));
    r.expected = labels_from_json(j.at("expected"));
    r.observed = search_report_from_json(j.at("observed"));
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
    return r;
  });
}

Lemma1Report lemma1_report_from_json(const Json& j) {
  return guarded("lemma report", [&] {
    Lemma1Report r;
    r.max_n = j.at("max_n").get<std::size_t>();
    r.graphs_checked = j.at("graphs_checked").get<std::uint64_t>();
    r.pairs_checked = j.at("pairs_checked").get<std::uint64_t>();
    for (const auto& v : j.at("violations")) {
      r.violations.push_back({v.at("graph6").get<std::string>(), v.at("u").get<std::size_t>(),
                              v.at("v").get<std::size_t>()});
    }
    return r;
  });
}

}  // namespace cei
