/* gracetree - graceful and strongly graceful tree labellings.
 *
 * Plain C interface over the C++ core. All objects are opaque handles
 * released with their matching _free function; strings returned through
 * char** are heap copies released with gt_string_free. Functions return
 * GT_OK on success; on any other status the out parameters are untouched
 * and gt_last_error() holds a message for the calling thread.
 */
#ifndef GRACETREE_H
#define GRACETREE_H

#include <stddef.h>

#if defined(_WIN32)
#define GT_API __declspec(dllexport)
#else
#define GT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gt_status {
  GT_OK = 0,
  GT_ERR_PARSE = 1,    /* malformed document */
  GT_ERR_INVALID = 2,  /* argument or precondition violation */
  GT_ERR_DOMAIN = 3,   /* input outside the operation's family */
  GT_ERR_LIMIT = 4,    /* configured size cap exceeded */
  GT_ERR_INTERNAL = 5, /* self-check failed; please report */
  GT_ERR_NOMEM = 6
} gt_status;

typedef struct gt_tree gt_tree;
typedef struct gt_matching gt_matching;
typedef struct gt_labelling gt_labelling;
typedef struct gt_perm gt_perm;
typedef struct gt_quad gt_quad;
typedef struct gt_labelling_list gt_labelling_list;
typedef struct gt_report gt_report;

GT_API const char* gt_version(void);
GT_API const char* gt_status_name(gt_status s);
/* Message for the last failing call on this thread; never NULL. */
GT_API const char* gt_last_error(void);
GT_API void gt_string_free(char* s);

/* ---- trees ------------------------------------------------------------ */

/* Edge-list document: vertex count line, then "u v" per edge; '#' comments. */
GT_API gt_status gt_tree_parse(const char* text, gt_tree** out);
GT_API gt_status gt_tree_from_edges(int n, const int* edges_uv, int edge_count, gt_tree** out);
GT_API void gt_tree_free(gt_tree* t);
GT_API gt_status gt_tree_n(const gt_tree* t, int* out);
/* buf receives 2*(n-1) ints (u0 v0 u1 v1 ...). */
GT_API gt_status gt_tree_edges(const gt_tree* t, int* buf);
GT_API gt_status gt_tree_to_text(const gt_tree* t, char** out);
GT_API gt_status gt_tree_canonical_form(const gt_tree* t, char** out);
GT_API gt_status gt_tree_diameter(const gt_tree* t, int* out);
/* buf needs room for n ints; *len receives the vertex count of the path. */
GT_API gt_status gt_tree_longest_path(const gt_tree* t, int* buf, int* len);
GT_API gt_status gt_tree_is_k_distant(const gt_tree* t, int k, int* out);
/* buf needs room for 2*(n-1) ints; *count receives the edge count. */
GT_API gt_status gt_tree_end_edges(const gt_tree* t, int* buf, int* count);
/* *out is NULL when the end edges do not form a perfect matching. */
GT_API gt_status gt_tree_end_edge_perfect_matching(const gt_tree* t, gt_matching** out);
/* *out is NULL when the tree has no perfect matching. */
GT_API gt_status gt_tree_perfect_matching(const gt_tree* t, gt_matching** out);
/* A longest path covering every vertex within distance k: *present tells
 * whether one exists; when it does, buf (room for n ints) and *len hold it. */
GT_API gt_status gt_tree_make_spine(const gt_tree* t, int k, int* present, int* buf, int* len);
/* Pendant on every vertex; vertex v keeps its id, its pendant gets n + v. */
GT_API gt_status gt_tree_spike(const gt_tree* t, gt_tree** out_tree, gt_matching** out_matching);
/* Contract all matched pairs; map_buf (room for n ints, may be NULL)
 * receives the old-vertex -> new-vertex map. */
GT_API gt_status gt_tree_contract_matching(const gt_tree* t, const gt_matching* m,
                                           gt_tree** out, int* map_buf);

/* ---- matchings and labellings ----------------------------------------- */

GT_API gt_status gt_matching_parse(const char* text, gt_matching** out);
GT_API gt_status gt_matching_from_pairs(const int* pairs_uv, int pair_count, gt_matching** out);
GT_API void gt_matching_free(gt_matching* m);
GT_API gt_status gt_matching_size(const gt_matching* m, int* out);
GT_API gt_status gt_matching_pairs(const gt_matching* m, int* buf);
GT_API gt_status gt_matching_to_text(const gt_matching* m, char** out);

GT_API gt_status gt_labelling_parse(const char* text, gt_labelling** out);
GT_API gt_status gt_labelling_from_values(const int* values, int n, gt_labelling** out);
GT_API void gt_labelling_free(gt_labelling* f);
GT_API gt_status gt_labelling_n(const gt_labelling* f, int* out);
GT_API gt_status gt_labelling_values(const gt_labelling* f, int* buf);
GT_API gt_status gt_labelling_to_text(const gt_labelling* f, char** out);

/* *out is 1 when the property holds, 0 otherwise; *why (optional) gets a
 * reason when it does not. */
GT_API gt_status gt_is_graceful(const gt_tree* t, const gt_labelling* f, int* out, char** why);
GT_API gt_status gt_is_strongly_graceful(const gt_tree* t, const gt_matching* m,
                                         const gt_labelling* f, int* out, char** why);

/* ---- label permutations ------------------------------------------------ */

GT_API gt_status gt_perm_identity(int n, gt_perm** out);
GT_API gt_status gt_perm_r(int n, gt_perm** out);
GT_API gt_status gt_perm_g1(int n, gt_perm** out);
GT_API gt_status gt_perm_g2(int n, gt_perm** out);
GT_API gt_status gt_perm_from_mapping(const int* mapping, int n, gt_perm** out);
GT_API void gt_perm_free(gt_perm* g);
GT_API gt_status gt_perm_n(const gt_perm* g, int* out);
GT_API gt_status gt_perm_mapping(const gt_perm* g, int* buf);
/* compose(a, b) applies b first. */
GT_API gt_status gt_perm_compose(const gt_perm* a, const gt_perm* b, gt_perm** out);
GT_API gt_status gt_perm_apply(const gt_perm* g, const gt_labelling* f, gt_labelling** out);
/* Disjoint cycles with singletons kept: "(0 1)(2 3)". */
GT_API gt_status gt_perm_cycles(const gt_perm* g, char** out);

/* ---- equivalences ------------------------------------------------------ */

GT_API gt_status gt_lift_to_spike(const gt_tree* t, const gt_labelling* f, gt_tree** out_tree,
                                  gt_matching** out_matching, gt_labelling** out_labelling);
GT_API gt_status gt_project_to_contree(const gt_tree* t, const gt_matching* m,
                                       const gt_labelling* g, gt_tree** out_tree,
                                       gt_labelling** out_labelling);

/* ---- constructive labeller --------------------------------------------- */

/* Strongly graceful quad for a tree within distance two of a path whose end
 * edges form a perfect matching. */
GT_API gt_status gt_label_lobster(const gt_tree* t, gt_quad** out);
GT_API void gt_quad_free(gt_quad* q);
/* which in 0..3; returns a fresh labelling handle. */
GT_API gt_status gt_quad_labelling(const gt_quad* q, int which, gt_labelling** out);
/* anchors[i] = vertex where member i vanishes; anchors[2] anchors[3] is a
 * matched edge. */
GT_API gt_status gt_quad_anchors(const gt_quad* q, int anchors[4]);

/* ---- searches ----------------------------------------------------------- */

GT_API gt_status gt_brute_force_labellings(const gt_tree* t, const char* mode,
                                           const gt_matching* m, int dedup_mod_group,
                                           int max_n, gt_labelling_list** out);
GT_API void gt_labelling_list_free(gt_labelling_list* l);
GT_API gt_status gt_labelling_list_size(const gt_labelling_list* l, int* out);
GT_API gt_status gt_labelling_list_get(const gt_labelling_list* l, int i, gt_labelling** out);

/* family: "all", "any-pm", "end-edge-pm", "lobster-end-edge-pm",
 * "three-distant-end-edge-pm". For every search, workers <= 0 runs one
 * thread per core and max_n <= 0 keeps the built-in size caps. */
GT_API gt_status gt_search_enumerate(int n, const char* family, int max_n, gt_report** out);
/* scope: "family" or "single" (single requires tree). */
GT_API gt_status gt_hunt_generalized_perms(int n, const char* scope, const gt_tree* tree,
                                           int workers, int max_n, gt_report** out);
GT_API gt_status gt_explore_case2b(int n_max, int workers, int max_n, gt_report** out);
GT_API gt_status gt_verify_lemma2(int n_max, int workers, int max_n, gt_report** out);
GT_API void gt_report_free(gt_report* r);
GT_API gt_status gt_report_text(const gt_report* r, char** out);
GT_API gt_status gt_report_json(const gt_report* r, char** out);

/* ---- rendering ---------------------------------------------------------- */

/* f and m may be NULL. Matching edges are bold; vertices carry their labels
 * when f is given. */
GT_API gt_status gt_export_dot(const gt_tree* t, const gt_labelling* f, const gt_matching* m,
                               char** out);

#ifdef __cplusplus
}
#endif

#endif /* GRACETREE_H */
