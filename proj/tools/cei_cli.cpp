#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cei/cei.h"
#include "report_document.hpp"

namespace {

using cei_cli::Json;

constexpr int kExitConfirmed = 0;
constexpr int kExitError = 1;
constexpr int kExitRefuted = 2;
constexpr int kExitEmpty = 3;

struct Failure : std::runtime_error {
  Failure(cei_status status, const std::string& message)
      : std::runtime_error(std::string(cei_status_name(status)) + ": " + message) {}
  explicit Failure(const std::string& message) : std::runtime_error(message) {}
};

void check(cei_status status) {
  if (status != CEI_OK) throw Failure(status, cei_last_error());
}

struct GraphFree {
  void operator()(cei_graph* g) const { cei_graph_free(g); }
};
struct ListFree {
  void operator()(cei_graph_list* l) const { cei_graph_list_free(l); }
};
struct ReportFree {
  void operator()(cei_report* r) const { cei_report_free(r); }
};
using GraphPtr = std::unique_ptr<cei_graph, GraphFree>;
using ListPtr = std::unique_ptr<cei_graph_list, ListFree>;
using ReportPtr = std::unique_ptr<cei_report, ReportFree>;

std::string take(char* s) {
  std::string out(s);
  cei_string_free(s);
  return out;
}

std::string graph6_of(const cei_graph* g) {
  char* s = nullptr;
  check(cei_graph_to_graph6(g, &s));
  return take(s);
}

struct Globals {
  uint32_t cap = 9;
  uint32_t workers = 0;
  std::string input;
  bool no_timing = false;
  bool at_least = false;
  bool exact = false;
};

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto first = std::find_if_not(raw.begin(), raw.end(), [](unsigned char c) { return std::isspace(c); });
    auto last = std::find_if_not(raw.rbegin(), raw.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    if (first >= last) continue;
    lines.push_back({number, std::string(first, last)});
  }
  return lines;
}

std::vector<Line> read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_lines(std::cin);
  std::ifstream in(path);
  if (!in) throw Failure("cannot open input '" + path + "'");
  return read_lines(in);
}

// External graph source for enumerate/verify; null when --input is unset.
ListPtr external_source(const Globals& g) {
  if (g.input.empty()) return nullptr;
  ListPtr list(cei_graph_list_new());
  if (!list) throw Failure("out of memory");
  for (const auto& line : read_input(g.input)) {
    if (cei_graph_list_push_graph6(list.get(), line.text.c_str()) != CEI_OK)
      throw Failure("input line " + std::to_string(line.number) + ": " + cei_last_error());
  }
  return list;
}

cei_search_options search_options(const Globals& g, const cei_graph_list* external) {
  return cei_search_options{g.cap, g.workers, external};
}

unsigned effective_workers(uint32_t requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit_document(const Globals& g, cei_cli::ReportDocument doc, double elapsed_ms) {
  doc.version = cei_version();
  if (!g.no_timing) doc.timing = cei_cli::Timing{elapsed_ms, effective_workers(g.workers)};
  std::cout << cei_cli::to_json(doc).dump(2) << '\n';
  std::cout.flush();
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// compute

Json compute_record(const Line& line, const std::string& index, bool& failed) {
  Json rec;
  rec["line"] = line.number;
  rec["graph6"] = line.text;
  auto error = [&](cei_status status, const std::string& message) {
    rec["error"] = Json{{"status", cei_status_name(status)}, {"message", message}};
    failed = true;
    return rec;
  };

  cei_graph* raw = nullptr;
  if (cei_status s = cei_graph_from_graph6(line.text.c_str(), &raw); s != CEI_OK) return error(s, cei_last_error());
  GraphPtr graph(raw);
  int connected = 0;
  check(cei_graph_is_connected(graph.get(), &connected));
  if (!connected) return error(CEI_ERR_NOT_CONNECTED, "graph is disconnected");

  rec["n"] = cei_graph_order(graph.get());
  rec["edges"] = cei_graph_edge_count(graph.get());
  if (index == "cei" || index == "all") {
    char* s = nullptr;
    check(cei_graph_cei(graph.get(), &s));
    rec["cei"] = take(s);
    check(cei_graph_cei_decimal(graph.get(), 12, &s));
    rec["cei_decimal"] = take(s);
  }
  if (index == "eci" || index == "all") {
    uint64_t eci = 0;
    check(cei_graph_eci(graph.get(), &eci));
    rec["eci"] = eci;
  }
  if (index == "all") {
    using Query = cei_status (*)(const cei_graph*, size_t*);
    const std::pair<const char*, Query> queries[] = {
        {"diameter", cei_graph_diameter},
        {"radius", cei_graph_radius},
        {"connectivity", cei_graph_connectivity},
        {"independence_number", cei_graph_independence_number},
        {"min_degree", cei_graph_min_degree},
        {"max_degree", cei_graph_max_degree},
    };
    for (const auto& [name, query] : queries) {
      size_t value = 0;
      check(query(graph.get(), &value));
      rec[name] = value;
    }
  }
  return rec;
}

int cmd_compute(const Globals& g, const std::string& index) {
  bool failed = false;
  for (const auto& line : read_input(g.input)) {
    std::cout << compute_record(line, index, failed).dump() << '\n';
  }
  std::cout.flush();
  return failed ? kExitError : 0;
}

// construct

struct ConstructArgs {
  std::string family;
  std::optional<uint32_t> n, k, d, s, alpha, delta;
};

uint32_t need(const std::optional<uint32_t>& v, const char* flag) {
  if (!v) throw Failure(std::string("missing required option ") + flag);
  return *v;
}

int cmd_construct(const ConstructArgs& a) {
  const uint32_t n = need(a.n, "--n");
  const uint32_t k = need(a.k, "--k");
  std::vector<std::string> lines;
  if (a.family == "h-family" || (a.family == "h-nkd" && !a.s)) {
    cei_graph_list* raw = nullptr;
    check(cei_construct_h_family(n, k, need(a.d, "--d"), &raw));
    ListPtr list(raw);
    for (size_t i = 0; i < cei_graph_list_size(list.get()); ++i)
      lines.push_back(graph6_of(cei_graph_list_at(list.get(), i)));
  } else {
    cei_construct_params p{};
    p.n = n;
    p.k = k;
    if (a.family == "g-nkd") {
      p.family = CEI_FAMILY_G_NKD;
      p.d = need(a.d, "--d");
    } else if (a.family == "h-nkd") {
      p.family = CEI_FAMILY_H_NKD;
      p.d = need(a.d, "--d");
      p.s = *a.s;
    } else if (a.family == "s-alpha") {
      p.family = CEI_FAMILY_S_NALPHA;
      p.alpha = need(a.alpha, "--alpha");
    } else {
      p.family = CEI_FAMILY_M_NDELTA;
      p.delta = need(a.delta, "--delta");
    }
    cei_graph* raw = nullptr;
    check(cei_construct(&p, &raw));
    GraphPtr graph(raw);
    lines.push_back(graph6_of(graph.get()));
  }
  for (const auto& line : lines) std::cout << line << '\n';
  std::cout.flush();
  return 0;
}

// enumerate

struct EnumerateArgs {
  std::string kind;
  std::optional<uint32_t> n, k, value;
};

cei_connectivity class_connectivity(const Globals& g) {
  return g.exact ? CEI_CONNECTIVITY_EXACTLY : CEI_CONNECTIVITY_AT_LEAST;
}

int cmd_enumerate(const Globals& g, const EnumerateArgs& a) {
  const uint32_t n = need(a.n, "--n");
  ListPtr external = external_source(g);
  const cei_search_options opts = search_options(g, external.get());
  cei_graph_list* raw = nullptr;
  if (a.kind.empty()) {
    check(cei_enumerate_connected(n, &opts, &raw));
  } else {
    static const std::map<std::string, cei_class_kind> kinds = {
        {"diam", CEI_CLASS_DIAMETER}, {"alpha", CEI_CLASS_INDEPENDENCE}, {"delta", CEI_CLASS_MIN_DEGREE}};
    cei_class_spec spec{kinds.at(a.kind), n, need(a.k, "--k"), need(a.value, "--value"), class_connectivity(g)};
    check(cei_enumerate_class(&spec, &opts, &raw));
  }
  ListPtr list(raw);
  const size_t count = cei_graph_list_size(list.get());
  for (size_t i = 0; i < count; ++i) std::cout << graph6_of(cei_graph_list_at(list.get(), i)) << '\n';
  std::cout.flush();
  Json summary;
  summary["command"] = "enumerate";
  if (!a.kind.empty()) summary["class"] = a.kind;
  summary["n"] = n;
  summary["count"] = count;
  std::cerr << summary.dump() << '\n';
  return 0;
}

// verify

struct VerifyArgs {
  std::string theorem;
  std::optional<uint32_t> n, k, d, alpha, delta, max_n;
};

int exit_for(cei_verdict v) {
  switch (v) {
    case CEI_VERDICT_CONFIRMED: return kExitConfirmed;
    case CEI_VERDICT_REFUTED: return kExitRefuted;
    case CEI_VERDICT_EMPTY_CLASS: return kExitEmpty;
  }
  return kExitError;
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  std::string theorem = a.theorem;
  std::transform(theorem.begin(), theorem.end(), theorem.begin(), [](unsigned char c) { return std::toupper(c); });

  cei_cli::ReportDocument doc;
  doc.command = "verify";
  doc.parameters["theorem"] = theorem;

  ListPtr external = external_source(g);
  const cei_search_options opts = search_options(g, external.get());
  cei_report* raw = nullptr;
  const auto start = std::chrono::steady_clock::now();

  if (theorem == "LEMMA1") {
    const uint32_t max_n = need(a.max_n, "--max-n");
    doc.parameters["max_n"] = max_n;
    check(cei_check_lemma1(max_n, &opts, &raw));
  } else {
    const uint32_t n = need(a.n, "--n");
    const uint32_t k = need(a.k, "--k");
    // Diameter classes default to kappa >= k, the other two to kappa = k.
    const bool exact = g.exact || (!g.at_least && theorem != "T1");
    const cei_connectivity mode = exact ? CEI_CONNECTIVITY_EXACTLY : CEI_CONNECTIVITY_AT_LEAST;
    doc.parameters["n"] = n;
    doc.parameters["k"] = k;
    if (theorem == "T1") {
      const uint32_t d = need(a.d, "--d");
      doc.parameters["d"] = d;
      doc.parameters["connectivity"] = exact ? "exactly" : "at-least";
      check(cei_verify_theorem1(n, k, d, mode, &opts, &raw));
    } else if (theorem == "T2") {
      const uint32_t alpha = need(a.alpha, "--alpha");
      doc.parameters["alpha"] = alpha;
      doc.parameters["connectivity"] = exact ? "exactly" : "at-least";
      check(cei_verify_theorem2(n, k, alpha, mode, &opts, &raw));
    } else {
      const uint32_t delta = need(a.delta, "--delta");
      doc.parameters["delta"] = delta;
      doc.parameters["connectivity"] = exact ? "exactly" : "at-least";
      check(cei_verify_theorem3(n, k, delta, mode, &opts, &raw));
    }
  }
  ReportPtr report(raw);
  doc.parameters["source"] = external ? "external" : "generator";
  if (external) doc.parameters["input_graphs"] = cei_graph_list_size(external.get());

  char* json = nullptr;
  check(cei_report_to_json(report.get(), &json));
  doc.results = Json::parse(take(json));
  cei_verdict verdict{};
  check(cei_report_verdict(report.get(), &verdict));
  emit_document(g, std::move(doc), since(start));
  return exit_for(verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact connective eccentricity index toolkit"};
  app.set_version_flag("--version", std::string(cei_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--cap", g.cap, "Largest order the generator will enumerate")
      ->envname("CEI_CAP")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads (0 = available parallelism)")
      ->envname("CEI_WORKERS")
      ->capture_default_str();
  app.add_option("--input", g.input, "graph6 file ('-' for stdin); replaces the generator for enumerate/verify")
      ->envname("CEI_INPUT");
  app.add_flag("--no-timing", g.no_timing, "Omit the timing section from report documents")
      ->envname("CEI_NO_TIMING");
  auto* at_least = app.add_flag("--at-least-k", g.at_least, "Classes require connectivity >= k");
  auto* exact = app.add_flag("--exact-k", g.exact, "Classes require connectivity exactly k");
  at_least->excludes(exact);

  std::string index = "all";
  auto* compute = app.add_subcommand("compute", "Invariants of each graph6 line on the input");
  compute->add_option("--index", index, "cei, eci or all")
      ->check(CLI::IsMember({"cei", "eci", "all"}))
      ->capture_default_str();

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "Emit an extremal construction as graph6");
  construct->add_option("family", cargs.family, "g-nkd, h-nkd, h-family, s-alpha or m-delta")
      ->required()
      ->check(CLI::IsMember({"g-nkd", "h-nkd", "h-family", "s-alpha", "m-delta"}));
  construct->add_option("--n", cargs.n);
  construct->add_option("--k", cargs.k);
  construct->add_option("--d", cargs.d);
  construct->add_option("--s", cargs.s, "Split for h-nkd; omit for every member");
  construct->add_option("--alpha", cargs.alpha);
  construct->add_option("--delta", cargs.delta);

  EnumerateArgs eargs;
  auto* enumerate = app.add_subcommand("enumerate", "Canonical graph6 of every class member");
  enumerate->add_option("--class", eargs.kind, "diam, alpha or delta; omit for all connected graphs")
      ->check(CLI::IsMember({"diam", "alpha", "delta"}));
  enumerate->add_option("--n", eargs.n);
  enumerate->add_option("--k", eargs.k);
  enumerate->add_option("--value", eargs.value);

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Exhaustive check of an extremal result");
  verify->add_option("theorem", vargs.theorem, "t1, t2, t3 or lemma1")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "lemma1"}, CLI::ignore_case));
  verify->add_option("--n", vargs.n);
  verify->add_option("--k", vargs.k);
  verify->add_option("--d", vargs.d);
  verify->add_option("--alpha", vargs.alpha);
  verify->add_option("--delta", vargs.delta);
  verify->add_option("--max-n", vargs.max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*compute) return cmd_compute(g, index);
    if (*construct) return cmd_construct(cargs);
    if (*enumerate) return cmd_enumerate(g, eargs);
    return cmd_verify(g, vargs);
  } catch (const std::exception& e) {
    std::cerr << "cei: error: " << e.what() << '\n';
    return kExitError;
  }
}
