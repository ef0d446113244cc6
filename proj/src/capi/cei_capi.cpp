#include "cei/cei.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "cei/canonical.hpp"
#include "cei/constructions.hpp"
#include "cei/errors.hpp"
#include "cei/graph6.hpp"
#include "cei/invariants.hpp"
#include "cei/report_json.hpp"
#include "cei/search.hpp"

struct cei_graph {
  cei::Graph g;
};

struct cei_graph_list {
  std::vector<cei_graph> items;
};

struct cei_report {
  std::variant<cei::SearchReport, cei::VerificationReport, cei::Lemma1Report> value;
};

namespace {

thread_local std::string last_error;

cei_status fail(cei_status status, const char* what) {
  last_error = what;
  return status;
}

template <class F>
cei_status guarded(F&& body) {
  try {
    body();
    return CEI_OK;
  } catch (const cei::Infeasible& e) {
    return fail(CEI_ERR_INFEASIBLE, e.what());
  } catch (const cei::InvalidArgument& e) {
    return fail(CEI_ERR_INVALID_ARGUMENT, e.what());
  } catch (const cei::ParseError& e) {
    return fail(CEI_ERR_PARSE, e.what());
  } catch (const cei::NotConnected& e) {
    return fail(CEI_ERR_NOT_CONNECTED, e.what());
  } catch (const cei::CapExceeded& e) {
    return fail(CEI_ERR_CAP_EXCEEDED, e.what());
  } catch (const cei::OverflowError& e) {
    return fail(CEI_ERR_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CEI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CEI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CEI_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw cei::InvalidArgument(what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

cei::ClassSpec to_spec(const cei_class_spec& s) {
  cei::ClassSpec spec;
  switch (s.kind) {
    case CEI_CLASS_DIAMETER: spec.kind = cei::ClassKind::Diameter; break;
    case CEI_CLASS_INDEPENDENCE: spec.kind = cei::ClassKind::Independence; break;
    case CEI_CLASS_MIN_DEGREE: spec.kind = cei::ClassKind::MinDegree; break;
    default: throw cei::InvalidArgument("unknown class kind");
  }
  spec.n = s.n;
  spec.k = s.k;
  spec.value = s.value;
  spec.connectivity = s.connectivity == CEI_CONNECTIVITY_EXACTLY ? cei::Connectivity::Exactly
                                                                   : cei::Connectivity::AtLeast;
  spec.validate();
  return spec;
}

// Holds the copied external pool so the span in SearchOptions stays valid.
struct Options {
  cei::SearchOptions opts;
  std::vector<cei::Graph> pool;

  explicit Options(const cei_search_options* o) {
    if (!o) return;
    if (o->cap) opts.cap = o->cap;
    opts.workers = o->workers;
    if (o->external) {
      pool.reserve(o->external->items.size());
      for (const auto& item : o->external->items) pool.push_back(item.g);
      opts.external = std::span<const cei::Graph>(pool);
    }
  }
};

cei_graph_list* to_list(const std::vector<cei::EnumeratedGraph>& graphs) {
  auto* list = new cei_graph_list;
  list->items.reserve(graphs.size());
  for (const auto& e : graphs) list->items.push_back({e.graph});
  return list;
}

template <class Verify>
cei_status run_verify(cei_connectivity mode, const cei_search_options* options, cei_report** out,
                      Verify&& verify) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    Options o(options);
    const cei::Connectivity chosen =
        mode == CEI_CONNECTIVITY_EXACTLY ? cei::Connectivity::Exactly : cei::Connectivity::AtLeast;
    cei::VerificationReport report = verify(o.opts, mode == CEI_CONNECTIVITY_DEFAULT ? nullptr : &chosen);
    *out = new cei_report{std::move(report)};
  });
}

template <class F>
cei_status graph_query(const cei_graph* graph, F&& f) {
  return guarded([&] {
    require(graph != nullptr, "null graph");
    f(graph->g);
  });
}

}  // namespace

extern "C" {

const char* cei_version(void) { return "0.1.0"; }

const char* cei_status_name(cei_status status) {
  switch (status) {
    case CEI_OK: return "OK";
    case CEI_ERR_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case CEI_ERR_INFEASIBLE: return "INFEASIBLE";
    case CEI_ERR_PARSE: return "PARSE";
    case CEI_ERR_NOT_CONNECTED: return "NOT_CONNECTED";
    case CEI_ERR_CAP_EXCEEDED: return "CAP_EXCEEDED";
    case CEI_ERR_OVERFLOW: return "OVERFLOW";
    case CEI_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char* cei_last_error(void) { return last_error.c_str(); }

void cei_string_free(char* text) { std::free(text); }

cei_status cei_graph_from_graph6(const char* text, cei_graph** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new cei_graph{cei::from_graph6(text)};
  });
}

void cei_graph_free(cei_graph* graph) { delete graph; }

size_t cei_graph_order(const cei_graph* graph) { return graph ? graph->g.order() : 0; }

size_t cei_graph_edge_count(const cei_graph* graph) { return graph ? graph->g.edge_count() : 0; }

cei_status cei_graph_to_graph6(const cei_graph* graph, char** out) {
  return graph_query(graph, [&](const cei::Graph& g) {
    require(out, "null output pointer");
    *out = dup_string(cei::to_graph6(g));
  });
}

cei_status cei_graph_canonical_label(const cei_graph* graph, char** out) {
  return graph_query(graph, [&](const cei::Graph& g) {
    require(out, "null output pointer");
    *out = dup_string(cei::canonical_form(g, cei::kMaxCanonicalOrder).graph6);
  });
}

cei_status cei_graph_is_connected(const cei_graph* graph, int* out) {
  return graph_query(graph, [&](const cei::Graph& g) {
    require(out, "null output pointer");
    *out = cei::is_connected(g) ? 1 : 0;
  });
}

cei_status cei_graph_cei(const cei_graph* graph, char** fraction) {
  return graph_query(graph, [&](const cei::Graph& g) {
    require(fraction, "null output pointer");
    *fraction = dup_string(cei::connective_eccentricity_index(g).str());
  });
}

cei_status cei_graph_cei_parts(const cei_graph* graph, int64_t* num, int64_t* den) {
  return graph_query(graph, [&](const cei::Graph& g) {
    require(num && den, "null output pointer");
    auto parts = cei::connective_eccentricity_index(g).as_int64();
    if (!parts) throw cei::OverflowError("CEI does not fit in 64-bit parts");
    *num = parts->first;
    *den = parts->second;
  });
}

cei_status cei_graph_cei_decimal(const cei_graph* graph, int digits, char** out) {
  return graph_query(graph, [&](const cei::Graph& g) {
    require(out, "null output pointer");
    require(digits >= 0 && digits <= 1000, "digits must be in 0..1000");
    *out = dup_string(cei::connective_eccentricity_index(g).decimal(digits));
  });
}

cei_status cei_graph_eci(const cei_graph* graph, uint64_t* out) {
  return graph_query(graph, [&](const cei::Graph& g) {
    require(out, "null output pointer");
    *out = cei::eccentric_connectivity_index(g);
  });
}

#define CEI_SIZE_QUERY(name, fn)                               \
  cei_status name(const cei_graph* graph, size_t* out) {       \
    return graph_query(graph, [&](const cei::Graph& g) {       \
      require(out, "null output pointer");                     \
      *out = fn(g);                                            \
    });                                                        \
  }

CEI_SIZE_QUERY(cei_graph_diameter, cei::diameter)
CEI_SIZE_QUERY(cei_graph_radius, cei::radius)
CEI_SIZE_QUERY(cei_graph_connectivity, cei::vertex_connectivity)
CEI_SIZE_QUERY(cei_graph_independence_number, cei::independence_number)
CEI_SIZE_QUERY(cei_graph_min_degree, cei::min_degree)
CEI_SIZE_QUERY(cei_graph_max_degree, cei::max_degree)

#undef CEI_SIZE_QUERY

cei_status cei_graph_summary_json(const cei_graph* graph, char** out) {
  return graph_query(graph, [&](const cei::Graph& g) {
    require(out, "null output pointer");
    *out = dup_string(cei::to_json(cei::summarize(g)).dump());
  });
}

cei_status cei_graph_is_member(const cei_graph* graph, const cei_class_spec* spec, int* out) {
  return graph_query(graph, [&](const cei::Graph& g) {
    require(spec && out, "null argument");
    *out = cei::is_member(g, to_spec(*spec)) ? 1 : 0;
  });
}

cei_status cei_construct(const cei_construct_params* params, cei_graph** out) {
  return guarded([&] {
    require(params && out, "null argument");
    cei::ConstructionParams p;
    switch (params->family) {
      case CEI_FAMILY_G_NKD: p.family = cei::Family::GNKD; break;
      case CEI_FAMILY_H_NKD: p.family = cei::Family::HNKD; break;
      case CEI_FAMILY_S_NALPHA: p.family = cei::Family::SNAlpha; break;
      case CEI_FAMILY_M_NDELTA: p.family = cei::Family::MNDelta; break;
      default: throw cei::InvalidArgument("unknown construction family");
    }
    p.n = params->n;
    p.k = params->k;
    p.d = params->d;
    p.s = params->s;
    p.alpha = params->alpha;
    p.delta = params->delta;
    *out = new cei_graph{cei::build(p)};
  });
}

cei_status cei_construct_h_family(uint32_t n, uint32_t k, uint32_t d, cei_graph_list** out) {
  return guarded([&] {
    require(out, "null output pointer");
    auto family = cei::enumerate_h_family(n, k, d);
    auto* list = new cei_graph_list;
    for (auto& g : family) list->items.push_back({std::move(g)});
    *out = list;
  });
}

cei_graph_list* cei_graph_list_new(void) { return new (std::nothrow) cei_graph_list; }

cei_status cei_graph_list_push_graph6(cei_graph_list* list, const char* text) {
  return guarded([&] {
    require(list && text, "null argument");
    list->items.push_back({cei::from_graph6(text)});
  });
}

size_t cei_graph_list_size(const cei_graph_list* list) { return list ? list->items.size() : 0; }

const cei_graph* cei_graph_list_at(const cei_graph_list* list, size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return &list->items[index];
}

void cei_graph_list_free(cei_graph_list* list) { delete list; }

cei_status cei_enumerate_connected(uint32_t n, const cei_search_options* options, cei_graph_list** out) {
  return guarded([&] {
    require(out, "null output pointer");
    Options o(options);
    if (o.opts.external) {
      *out = to_list(cei::unique_connected(*o.opts.external, n));
      return;
    }
    *out = to_list(cei::enumerate_connected(n, {o.opts.cap, o.opts.workers}));
  });
}

cei_status cei_enumerate_class(const cei_class_spec* spec, const cei_search_options* options,
                               cei_graph_list** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    Options o(options);
    *out = to_list(cei::enumerate_class(to_spec(*spec), o.opts));
  });
}

cei_status cei_max_cei_search(const cei_class_spec* spec, const cei_search_options* options, cei_report** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    Options o(options);
    *out = new cei_report{cei::max_cei_search(to_spec(*spec), o.opts)};
  });
}

cei_status cei_verify_theorem1(uint32_t n, uint32_t k, uint32_t d, cei_connectivity mode,
                               const cei_search_options* options, cei_report** out) {
  return run_verify(mode, options, out, [&](const cei::SearchOptions& o, const cei::Connectivity* m) {
    return m ? cei::verify_theorem1(n, k, d, o, *m) : cei::verify_theorem1(n, k, d, o);
  });
}

cei_status cei_verify_theorem2(uint32_t n, uint32_t k, uint32_t alpha, cei_connectivity mode,
                               const cei_search_options* options, cei_report** out) {
  return run_verify(mode, options, out, [&](const cei::SearchOptions& o, const cei::Connectivity* m) {
    return m ? cei::verify_theorem2(n, k, alpha, o, *m) : cei::verify_theorem2(n, k, alpha, o);
  });
}

cei_status cei_verify_theorem3(uint32_t n, uint32_t k, uint32_t delta, cei_connectivity mode,
                               const cei_search_options* options, cei_report** out) {
  return run_verify(mode, options, out, [&](const cei::SearchOptions& o, const cei::Connectivity* m) {
    return m ? cei::verify_theorem3(n, k, delta, o, *m) : cei::verify_theorem3(n, k, delta, o);
  });
}

cei_status cei_check_lemma1(uint32_t max_n, const cei_search_options* options, cei_report** out) {
  return guarded([&] {
    require(out, "null output pointer");
    Options o(options);
    *out = new cei_report{cei::check_lemma1(max_n, o.opts)};
  });
}

cei_status cei_report_verdict(const cei_report* report, cei_verdict* out) {
  return guarded([&] {
    require(report && out, "null argument");
    if (const auto* v = std::get_if<cei::VerificationReport>(&report->value)) {
      switch (v->verdict) {
        case cei::Verdict::Confirmed: *out = CEI_VERDICT_CONFIRMED; break;
        case cei::Verdict::Refuted: *out = CEI_VERDICT_REFUTED; break;
        case cei::Verdict::EmptyClass: *out = CEI_VERDICT_EMPTY_CLASS; break;
      }
    } else if (const auto* l = std::get_if<cei::Lemma1Report>(&report->value)) {
      *out = l->holds() ? CEI_VERDICT_CONFIRMED : CEI_VERDICT_REFUTED;
    } else {
      throw cei::InvalidArgument("search reports carry no verdict");
    }
  });
}

double cei_report_runtime_ms(const cei_report* report) {
  if (!report) return 0;
  return std::visit(
      [](const auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, cei::VerificationReport>)
          return r.observed.runtime_ms;
        else
          return r.runtime_ms;
      },
      report->value);
}

cei_status cei_report_to_json(const cei_report* report, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    *out = dup_string(std::visit([](const auto& r) { return cei::to_json(r).dump(); }, report->value));
  });
}

void cei_report_free(cei_report* report) { delete report; }

}  // extern "C"
