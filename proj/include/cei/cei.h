/*
 * C interface to the connective eccentricity index library.
 *
 * Every fallible call returns a cei_status; on failure a message is kept in
 * thread-local storage and read with cei_last_error(). Objects are opaque
 * handles owned by the caller and released with the matching *_free call.
 * Strings returned through char** are released with cei_string_free().
 * Handles are immutable after creation and may be shared between threads.
 */
#ifndef CEI_CEI_H
#define CEI_CEI_H

#include <stddef.h>
#include <stdint.h>

#if defined(CEI_BUILDING_LIBRARY)
#define CEI_API __attribute__((visibility("default")))
#else
#define CEI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cei_status {
  CEI_OK = 0,
  CEI_ERR_INVALID_ARGUMENT = 1,
  CEI_ERR_INFEASIBLE = 2,
  CEI_ERR_PARSE = 3,
  CEI_ERR_NOT_CONNECTED = 4,
  CEI_ERR_CAP_EXCEEDED = 5,
  CEI_ERR_OVERFLOW = 6,
  CEI_ERR_INTERNAL = 7
} cei_status;

typedef enum cei_class_kind {
  CEI_CLASS_DIAMETER = 0,
  CEI_CLASS_INDEPENDENCE = 1,
  CEI_CLASS_MIN_DEGREE = 2
} cei_class_kind;

/* DEFAULT means at-least for classes; per-theorem default for verifiers. */
typedef enum cei_connectivity {
  CEI_CONNECTIVITY_DEFAULT = 0,
  CEI_CONNECTIVITY_AT_LEAST = 1,
  CEI_CONNECTIVITY_EXACTLY = 2
} cei_connectivity;

typedef enum cei_family {
  CEI_FAMILY_G_NKD = 0,
  CEI_FAMILY_H_NKD = 1,
  CEI_FAMILY_S_NALPHA = 2,
  CEI_FAMILY_M_NDELTA = 3
} cei_family;

typedef enum cei_verdict {
  CEI_VERDICT_CONFIRMED = 0,
  CEI_VERDICT_REFUTED = 1,
  CEI_VERDICT_EMPTY_CLASS = 2
} cei_verdict;

typedef struct cei_graph cei_graph;
typedef struct cei_graph_list cei_graph_list;
typedef struct cei_report cei_report;

typedef struct cei_class_spec {
  cei_class_kind kind;
  uint32_t n;
  uint32_t k;
  uint32_t value;
  cei_connectivity connectivity;
} cei_class_spec;

typedef struct cei_construct_params {
  cei_family family;
  uint32_t n;
  uint32_t k;
  uint32_t d;
  uint32_t s;
  uint32_t alpha;
  uint32_t delta;
} cei_construct_params;

/* cap 0 selects the default order cap (9); workers 0 selects the hardware
 * parallelism. A non-null `external` list replaces the built-in generator. */
typedef struct cei_search_options {
  uint32_t cap;
  uint32_t workers;
  const cei_graph_list* external;
} cei_search_options;

CEI_API const char* cei_version(void);
CEI_API const char* cei_status_name(cei_status status);
CEI_API const char* cei_last_error(void);
CEI_API void cei_string_free(char* text);

/* Graphs */
CEI_API cei_status cei_graph_from_graph6(const char* text, cei_graph** out);
CEI_API void cei_graph_free(cei_graph* graph);
CEI_API size_t cei_graph_order(const cei_graph* graph);
CEI_API size_t cei_graph_edge_count(const cei_graph* graph);
CEI_API cei_status cei_graph_to_graph6(const cei_graph* graph, char** out);
CEI_API cei_status cei_graph_canonical_label(const cei_graph* graph, char** out);
CEI_API cei_status cei_graph_is_connected(const cei_graph* graph, int* out);

/* Invariants. CEI is exact: "p/q" text, or int64 parts when it fits
 * (CEI_ERR_OVERFLOW otherwise). */
CEI_API cei_status cei_graph_cei(const cei_graph* graph, char** fraction);
CEI_API cei_status cei_graph_cei_parts(const cei_graph* graph, int64_t* num, int64_t* den);
CEI_API cei_status cei_graph_cei_decimal(const cei_graph* graph, int digits, char** out);
CEI_API cei_status cei_graph_eci(const cei_graph* graph, uint64_t* out);
CEI_API cei_status cei_graph_diameter(const cei_graph* graph, size_t* out);
CEI_API cei_status cei_graph_radius(const cei_graph* graph, size_t* out);
CEI_API cei_status cei_graph_connectivity(const cei_graph* graph, size_t* out);
CEI_API cei_status cei_graph_independence_number(const cei_graph* graph, size_t* out);
CEI_API cei_status cei_graph_min_degree(const cei_graph* graph, size_t* out);
CEI_API cei_status cei_graph_max_degree(const cei_graph* graph, size_t* out);
CEI_API cei_status cei_graph_summary_json(const cei_graph* graph, char** out);
CEI_API cei_status cei_graph_is_member(const cei_graph* graph, const cei_class_spec* spec, int* out);

/* Constructions */
CEI_API cei_status cei_construct(const cei_construct_params* params, cei_graph** out);
CEI_API cei_status cei_construct_h_family(uint32_t n, uint32_t k, uint32_t d, cei_graph_list** out);

/* Graph lists */
CEI_API cei_graph_list* cei_graph_list_new(void);
CEI_API cei_status cei_graph_list_push_graph6(cei_graph_list* list, const char* text);
CEI_API size_t cei_graph_list_size(const cei_graph_list* list);
/* Borrowed; valid while the list lives. */
CEI_API const cei_graph* cei_graph_list_at(const cei_graph_list* list, size_t index);
CEI_API void cei_graph_list_free(cei_graph_list* list);

/* Enumeration and search; lists come back sorted by canonical label. */
CEI_API cei_status cei_enumerate_connected(uint32_t n, const cei_search_options* options, cei_graph_list** out);
CEI_API cei_status cei_enumerate_class(const cei_class_spec* spec, const cei_search_options* options,
                                       cei_graph_list** out);
CEI_API cei_status cei_max_cei_search(const cei_class_spec* spec, const cei_search_options* options,
                                      cei_report** out);
CEI_API cei_status cei_verify_theorem1(uint32_t n, uint32_t k, uint32_t d, cei_connectivity mode,
                                       const cei_search_options* options, cei_report** out);
CEI_API cei_status cei_verify_theorem2(uint32_t n, uint32_t k, uint32_t alpha, cei_connectivity mode,
                                       const cei_search_options* options, cei_report** out);
CEI_API cei_status cei_verify_theorem3(uint32_t n, uint32_t k, uint32_t delta, cei_connectivity mode,
                                       const cei_search_options* options, cei_report** out);
CEI_API cei_status cei_check_lemma1(uint32_t max_n, const cei_search_options* options, cei_report** out);

/* Reports. Search reports have no verdict (CEI_ERR_INVALID_ARGUMENT). The
 * JSON omits timing and is identical across runs and worker counts. */
CEI_API cei_status cei_report_verdict(const cei_report* report, cei_verdict* out);
CEI_API double cei_report_runtime_ms(const cei_report* report);
CEI_API cei_status cei_report_to_json(const cei_report* report, char** out);
CEI_API void cei_report_free(cei_report* report);

#ifdef __cplusplus
}
#endif

#endif /* CEI_CEI_H */
