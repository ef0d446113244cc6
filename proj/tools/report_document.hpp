#pragma once

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace cei_cli {

using Json = nlohmann::ordered_json;

struct Timing {
  double elapsed_ms = 0;
  unsigned workers = 0;

  friend bool operator==(const Timing&, const Timing&) = default;
};

// Everything but `timing` is deterministic for a given invocation.
struct ReportDocument {
  std::string command;
  Json parameters = Json::object();
  Json results;
  std::string version;
  std::optional<Timing> timing;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline Json to_json(const ReportDocument& doc) {
  Json j;
  j["command"] = doc.command;
  j["parameters"] = doc.parameters;
  j["results"] = doc.results;
  j["version"] = doc.version;
  if (doc.timing) j["timing"] = Json{{"elapsed_ms", doc.timing->elapsed_ms}, {"workers", doc.timing->workers}};
  return j;
}

inline ReportDocument report_document_from_json(const Json& j) {
  auto need = [&](const char* key) -> const Json& {
    if (!j.is_object() || !j.contains(key)) throw std::runtime_error(std::string("report document lacks '") + key + "'");
    return j.at(key);
  };
  ReportDocument doc;
  try {
    doc.command = need("command").get<std::string>();
    doc.parameters = need("parameters");
    if (!doc.parameters.is_object()) throw std::runtime_error("report parameters must be an object");
    doc.results = need("results");
    doc.version = need("version").get<std::string>();
    if (j.contains("timing")) {
      const Json& t = j.at("timing");
      doc.timing = Timing{t.at("elapsed_ms").get<double>(), t.at("workers").get<unsigned>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report document: ") + e.what());
  }
  return doc;
}

}  // namespace cei_cli
