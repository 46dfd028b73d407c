#include "gracetree.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "equivalence.hpp"
#include "error.hpp"
#include "formats.hpp"
#include "labelling.hpp"
#include "lobster.hpp"
#include "report.hpp"
#include "search.hpp"
#include "tree.hpp"

struct gt_tree {
  gt::Tree v;
};
struct gt_matching {
  gt::Matching v;
};
struct gt_labelling {
  gt::Labelling v;
};
struct gt_perm {
  gt::LabelPermutation v;
};
struct gt_quad {
  gt::StrongQuad v;
};
struct gt_labelling_list {
  std::vector<gt::Labelling> v;
};
struct gt_report {
  gt::SearchReport v;
};

namespace {

thread_local std::string g_last_error;

void need(bool ok, const char* what) {
  if (!ok) gt::fail(gt::Errc::Invalid, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
gt_status wrap(F&& body) {
  try {
    body();
    return GT_OK;
  } catch (const gt::Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
      case gt::Errc::Parse:
        return GT_ERR_PARSE;
      case gt::Errc::Invalid:
        return GT_ERR_INVALID;
      case gt::Errc::Domain:
        return GT_ERR_DOMAIN;
      case gt::Errc::Limit:
        return GT_ERR_LIMIT;
      case gt::Errc::Internal:
        return GT_ERR_INTERNAL;
    }
    return GT_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GT_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GT_ERR_INTERNAL;
  }
}

std::vector<std::pair<int, int>> pair_vector(const int* flat, int count) {
  need(flat != nullptr || count == 0, "null pair buffer");
  need(count >= 0, "negative pair count");
  std::vector<std::pair<int, int>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.emplace_back(flat[2 * i], flat[2 * i + 1]);
  return out;
}

gt::SearchLimits limits_for(int max_n) {
  gt::SearchLimits limits;
  if (max_n > 0) {
    limits.max_enumerate_n = max_n;
    limits.max_graceful_n = max_n;
    limits.max_strong_n = max_n;
    limits.max_hunt_n = max_n;
    limits.max_case_explore_n = max_n;
    limits.max_anchor_sweep_n = max_n;
  }
  return limits;
}

}  // namespace

extern "C" {

const char* gt_version(void) { return "1.0.0"; }

const char* gt_status_name(gt_status s) {
  switch (s) {
    case GT_OK:
      return "ok";
    case GT_ERR_PARSE:
      return "parse-error";
    case GT_ERR_INVALID:
      return "invalid-argument";
    case GT_ERR_DOMAIN:
      return "domain-error";
    case GT_ERR_LIMIT:
      return "limit-exceeded";
    case GT_ERR_INTERNAL:
      return "internal-error";
    case GT_ERR_NOMEM:
      return "out-of-memory";
  }
  return "unknown";
}

const char* gt_last_error(void) { return g_last_error.c_str(); }

void gt_string_free(char* s) { std::free(s); }

/* ---- trees ------------------------------------------------------------ */

gt_status gt_tree_parse(const char* text, gt_tree** out) {
  return wrap([&] {
    need(text != nullptr && out != nullptr, "null argument");
    *out = new gt_tree{gt::parse_tree(text)};
  });
}

gt_status gt_tree_from_edges(int n, const int* edges_uv, int edge_count, gt_tree** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    *out = new gt_tree{gt::Tree::from_edges(n, pair_vector(edges_uv, edge_count))};
  });
}

void gt_tree_free(gt_tree* t) { delete t; }

gt_status gt_tree_n(const gt_tree* t, int* out) {
  return wrap([&] {
    need(t != nullptr && out != nullptr, "null argument");
    *out = t->v.n;
  });
}

gt_status gt_tree_edges(const gt_tree* t, int* buf) {
  return wrap([&] {
    need(t != nullptr && buf != nullptr, "null argument");
    int i = 0;
    for (auto [u, v] : t->v.edges) {
      buf[i++] = u;
      buf[i++] = v;
    }
  });
}

gt_status gt_tree_to_text(const gt_tree* t, char** out) {
  return wrap([&] {
    need(t != nullptr && out != nullptr, "null argument");
    *out = dup_string(gt::tree_text(t->v));
  });
}

gt_status gt_tree_canonical_form(const gt_tree* t, char** out) {
  return wrap([&] {
    need(t != nullptr && out != nullptr, "null argument");
    *out = dup_string(gt::canonical_form(t->v));
  });
}

gt_status gt_tree_diameter(const gt_tree* t, int* out) {
  return wrap([&] {
    need(t != nullptr && out != nullptr, "null argument");
    *out = gt::diameter(t->v);
  });
}

gt_status gt_tree_longest_path(const gt_tree* t, int* buf, int* len) {
  return wrap([&] {
    need(t != nullptr && buf != nullptr && len != nullptr, "null argument");
    auto path = gt::longest_path(t->v);
    for (size_t i = 0; i < path.size(); ++i) buf[i] = path[i];
    *len = static_cast<int>(path.size());
  });
}

gt_status gt_tree_is_k_distant(const gt_tree* t, int k, int* out) {
  return wrap([&] {
    need(t != nullptr && out != nullptr, "null argument");
    *out = gt::is_k_distant(t->v, k) ? 1 : 0;
  });
}

gt_status gt_tree_end_edges(const gt_tree* t, int* buf, int* count) {
  return wrap([&] {
    need(t != nullptr && buf != nullptr && count != nullptr, "null argument");
    auto ee = gt::end_edges(t->v);
    int i = 0;
    for (auto [u, v] : ee) {
      buf[i++] = u;
      buf[i++] = v;
    }
    *count = static_cast<int>(ee.size());
  });
}

gt_status gt_tree_end_edge_perfect_matching(const gt_tree* t, gt_matching** out) {
  return wrap([&] {
    need(t != nullptr && out != nullptr, "null argument");
    auto m = gt::end_edge_perfect_matching(t->v);
    *out = m ? new gt_matching{std::move(*m)} : nullptr;
  });
}

gt_status gt_tree_perfect_matching(const gt_tree* t, gt_matching** out) {
  return wrap([&] {
    need(t != nullptr && out != nullptr, "null argument");
    auto m = gt::unique_perfect_matching(t->v);
    *out = m ? new gt_matching{std::move(*m)} : nullptr;
  });
}

gt_status gt_tree_make_spine(const gt_tree* t, int k, int* present, int* buf, int* len) {
  return wrap([&] {
    need(t != nullptr && present != nullptr, "null argument");
    auto s = gt::make_spine(t->v, k);
    *present = s ? 1 : 0;
    if (s) {
      need(buf != nullptr && len != nullptr, "null spine buffer");
      for (size_t i = 0; i < s->vertices.size(); ++i) buf[i] = s->vertices[i];
      *len = static_cast<int>(s->vertices.size());
    }
  });
}

gt_status gt_tree_spike(const gt_tree* t, gt_tree** out_tree, gt_matching** out_matching) {
  return wrap([&] {
    need(t != nullptr && out_tree != nullptr && out_matching != nullptr, "null argument");
    auto r = gt::spike(t->v);
    *out_tree = new gt_tree{std::move(r.tree)};
    *out_matching = new gt_matching{std::move(r.matching)};
  });
}

gt_status gt_tree_contract_matching(const gt_tree* t, const gt_matching* m, gt_tree** out,
                                    int* map_buf) {
  return wrap([&] {
    need(t != nullptr && m != nullptr && out != nullptr, "null argument");
    auto r = gt::contract_matching(t->v, m->v);
    if (map_buf != nullptr)
      for (size_t i = 0; i < r.vertex_map.size(); ++i) map_buf[i] = r.vertex_map[i];
    *out = new gt_tree{std::move(r.tree)};
  });
}

/* ---- matchings and labellings ----------------------------------------- */

gt_status gt_matching_parse(const char* text, gt_matching** out) {
  return wrap([&] {
    need(text != nullptr && out != nullptr, "null argument");
    *out = new gt_matching{gt::parse_matching(text)};
  });
}

gt_status gt_matching_from_pairs(const int* pairs_uv, int pair_count, gt_matching** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    *out = new gt_matching{gt::Matching::from_pairs(pair_vector(pairs_uv, pair_count))};
  });
}

void gt_matching_free(gt_matching* m) { delete m; }

gt_status gt_matching_size(const gt_matching* m, int* out) {
  return wrap([&] {
    need(m != nullptr && out != nullptr, "null argument");
    *out = m->v.size();
  });
}

gt_status gt_matching_pairs(const gt_matching* m, int* buf) {
  return wrap([&] {
    need(m != nullptr && buf != nullptr, "null argument");
    int i = 0;
    for (auto [u, v] : m->v.pairs) {
      buf[i++] = u;
      buf[i++] = v;
    }
  });
}

gt_status gt_matching_to_text(const gt_matching* m, char** out) {
  return wrap([&] {
    need(m != nullptr && out != nullptr, "null argument");
    *out = dup_string(gt::matching_text(m->v));
  });
}

gt_status gt_labelling_parse(const char* text, gt_labelling** out) {
  return wrap([&] {
    need(text != nullptr && out != nullptr, "null argument");
    *out = new gt_labelling{gt::parse_labelling(text)};
  });
}

gt_status gt_labelling_from_values(const int* values, int n, gt_labelling** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    need(values != nullptr || n == 0, "null value buffer");
    *out = new gt_labelling{gt::Labelling::from_values(std::vector<int>(values, values + n))};
  });
}

void gt_labelling_free(gt_labelling* f) { delete f; }

gt_status gt_labelling_n(const gt_labelling* f, int* out) {
  return wrap([&] {
    need(f != nullptr && out != nullptr, "null argument");
    *out = f->v.n();
  });
}

gt_status gt_labelling_values(const gt_labelling* f, int* buf) {
  return wrap([&] {
    need(f != nullptr && buf != nullptr, "null argument");
    for (int i = 0; i < f->v.n(); ++i) buf[i] = f->v.values[i];
  });
}

gt_status gt_labelling_to_text(const gt_labelling* f, char** out) {
  return wrap([&] {
    need(f != nullptr && out != nullptr, "null argument");
    *out = dup_string(gt::labelling_text(f->v));
  });
}

gt_status gt_is_graceful(const gt_tree* t, const gt_labelling* f, int* out, char** why) {
  return wrap([&] {
    need(t != nullptr && f != nullptr && out != nullptr, "null argument");
    auto violation = gt::graceful_violation(t->v, f->v);
    *out = violation ? 0 : 1;
    if (why != nullptr) *why = violation ? dup_string(*violation) : nullptr;
  });
}

gt_status gt_is_strongly_graceful(const gt_tree* t, const gt_matching* m, const gt_labelling* f,
                                  int* out, char** why) {
  return wrap([&] {
    need(t != nullptr && m != nullptr && f != nullptr && out != nullptr, "null argument");
    auto violation = gt::strong_violation(t->v, m->v, f->v);
    *out = violation ? 0 : 1;
    if (why != nullptr) *why = violation ? dup_string(*violation) : nullptr;
  });
}

/* ---- label permutations ------------------------------------------------ */

gt_status gt_perm_identity(int n, gt_perm** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    *out = new gt_perm{gt::perm_identity(n)};
  });
}

gt_status gt_perm_r(int n, gt_perm** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    *out = new gt_perm{gt::perm_r(n)};
  });
}

gt_status gt_perm_g1(int n, gt_perm** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    *out = new gt_perm{gt::perm_g1(n)};
  });
}

gt_status gt_perm_g2(int n, gt_perm** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    *out = new gt_perm{gt::perm_g2(n)};
  });
}

gt_status gt_perm_from_mapping(const int* mapping, int n, gt_perm** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    need(mapping != nullptr || n == 0, "null mapping buffer");
    *out = new gt_perm{gt::LabelPermutation::from_mapping(std::vector<int>(mapping, mapping + n))};
  });
}

void gt_perm_free(gt_perm* g) { delete g; }

gt_status gt_perm_n(const gt_perm* g, int* out) {
  return wrap([&] {
    need(g != nullptr && out != nullptr, "null argument");
    *out = g->v.n();
  });
}

gt_status gt_perm_mapping(const gt_perm* g, int* buf) {
  return wrap([&] {
    need(g != nullptr && buf != nullptr, "null argument");
    for (int i = 0; i < g->v.n(); ++i) buf[i] = g->v.mapping[i];
  });
}

gt_status gt_perm_compose(const gt_perm* a, const gt_perm* b, gt_perm** out) {
  return wrap([&] {
    need(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = new gt_perm{gt::compose(a->v, b->v)};
  });
}

gt_status gt_perm_apply(const gt_perm* g, const gt_labelling* f, gt_labelling** out) {
  return wrap([&] {
    need(g != nullptr && f != nullptr && out != nullptr, "null argument");
    *out = new gt_labelling{gt::apply_perm(g->v, f->v)};
  });
}

gt_status gt_perm_cycles(const gt_perm* g, char** out) {
  return wrap([&] {
    need(g != nullptr && out != nullptr, "null argument");
    *out = dup_string(gt::cycle_notation(g->v));
  });
}

/* ---- equivalences ------------------------------------------------------ */

gt_status gt_lift_to_spike(const gt_tree* t, const gt_labelling* f, gt_tree** out_tree,
                           gt_matching** out_matching, gt_labelling** out_labelling) {
  return wrap([&] {
    need(t != nullptr && f != nullptr && out_tree != nullptr && out_matching != nullptr &&
             out_labelling != nullptr,
         "null argument");
    auto r = gt::lift_to_spike(t->v, f->v);
    *out_tree = new gt_tree{std::move(r.tree)};
    *out_matching = new gt_matching{std::move(r.matching)};
    *out_labelling = new gt_labelling{std::move(r.labelling)};
  });
}

gt_status gt_project_to_contree(const gt_tree* t, const gt_matching* m, const gt_labelling* g,
                                gt_tree** out_tree, gt_labelling** out_labelling) {
  return wrap([&] {
    need(t != nullptr && m != nullptr && g != nullptr && out_tree != nullptr &&
             out_labelling != nullptr,
         "null argument");
    auto r = gt::project_to_contree(t->v, m->v, g->v);
    *out_tree = new gt_tree{std::move(r.tree)};
    *out_labelling = new gt_labelling{std::move(r.labelling)};
  });
}

/* ---- constructive labeller --------------------------------------------- */

gt_status gt_label_lobster(const gt_tree* t, gt_quad** out) {
  return wrap([&] {
    need(t != nullptr && out != nullptr, "null argument");
    *out = new gt_quad{gt::lobster_quad(t->v)};
  });
}

void gt_quad_free(gt_quad* q) { delete q; }

gt_status gt_quad_labelling(const gt_quad* q, int which, gt_labelling** out) {
  return wrap([&] {
    need(q != nullptr && out != nullptr, "null argument");
    need(which >= 0 && which < 4, "quad index out of range");
    const gt::Labelling* members[4] = {&q->v.f, &q->v.f1, &q->v.f2, &q->v.f3};
    *out = new gt_labelling{*members[which]};
  });
}

gt_status gt_quad_anchors(const gt_quad* q, int anchors[4]) {
  return wrap([&] {
    need(q != nullptr && anchors != nullptr, "null argument");
    for (int i = 0; i < 4; ++i) anchors[i] = q->v.anchors[i];
  });
}

/* ---- searches ----------------------------------------------------------- */

gt_status gt_brute_force_labellings(const gt_tree* t, const char* mode, const gt_matching* m,
                                    int dedup_mod_group, int max_n, gt_labelling_list** out) {
  return wrap([&] {
    need(t != nullptr && mode != nullptr && out != nullptr, "null argument");
    std::string mode_name = mode;
    gt::LabellingMode lm;
    if (mode_name == "graceful")
      lm = gt::LabellingMode::Graceful;
    else if (mode_name == "strong")
      lm = gt::LabellingMode::Strong;
    else
      gt::fail(gt::Errc::Invalid, "unknown labelling mode: " + mode_name);
    auto labs = gt::brute_force_labellings(t->v, lm, m ? &m->v : nullptr, dedup_mod_group != 0,
                                           limits_for(max_n));
    *out = new gt_labelling_list{std::move(labs)};
  });
}

void gt_labelling_list_free(gt_labelling_list* l) { delete l; }

gt_status gt_labelling_list_size(const gt_labelling_list* l, int* out) {
  return wrap([&] {
    need(l != nullptr && out != nullptr, "null argument");
    *out = static_cast<int>(l->v.size());
  });
}

gt_status gt_labelling_list_get(const gt_labelling_list* l, int i, gt_labelling** out) {
  return wrap([&] {
    need(l != nullptr && out != nullptr, "null argument");
    need(i >= 0 && i < static_cast<int>(l->v.size()), "list index out of range");
    *out = new gt_labelling{l->v[i]};
  });
}

gt_status gt_search_enumerate(int n, const char* family, int max_n, gt_report** out) {
  return wrap([&] {
    need(family != nullptr && out != nullptr, "null argument");
    std::string name = family;
    std::optional<gt::Family> fam;
    if (name != "all") fam = gt::family_from_name(name);
    *out = new gt_report{gt::enumerate_report(n, fam, limits_for(max_n))};
  });
}

gt_status gt_hunt_generalized_perms(int n, const char* scope, const gt_tree* tree, int workers,
                                    int max_n, gt_report** out) {
  return wrap([&] {
    need(scope != nullptr && out != nullptr, "null argument");
    std::string name = scope;
    gt::HuntScope hs;
    if (name == "family")
      hs = gt::HuntScope::FamilyAll;
    else if (name == "single")
      hs = gt::HuntScope::SingleTree;
    else
      gt::fail(gt::Errc::Invalid, "unknown hunt scope: " + name);
    if (hs == gt::HuntScope::SingleTree) need(tree != nullptr, "single-tree hunt needs a tree");
    *out = new gt_report{gt::hunt_generalized_perms(n, hs, tree ? &tree->v : nullptr, workers,
                                                    limits_for(max_n))};
  });
}

gt_status gt_explore_case2b(int n_max, int workers, int max_n, gt_report** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    *out = new gt_report{gt::explore_case2b(n_max, workers, limits_for(max_n))};
  });
}

gt_status gt_verify_lemma2(int n_max, int workers, int max_n, gt_report** out) {
  return wrap([&] {
    need(out != nullptr, "null argument");
    *out = new gt_report{gt::sweep_anchor_paths(n_max, workers, limits_for(max_n))};
  });
}

void gt_report_free(gt_report* r) { delete r; }

gt_status gt_report_text(const gt_report* r, char** out) {
  return wrap([&] {
    need(r != nullptr && out != nullptr, "null argument");
    *out = dup_string(gt::report_text(r->v));
  });
}

gt_status gt_report_json(const gt_report* r, char** out) {
  return wrap([&] {
    need(r != nullptr && out != nullptr, "null argument");
    *out = dup_string(gt::report_json(r->v));
  });
}

/* ---- rendering ---------------------------------------------------------- */

gt_status gt_export_dot(const gt_tree* t, const gt_labelling* f, const gt_matching* m,
                        char** out) {
  return wrap([&] {
    need(t != nullptr && out != nullptr, "null argument");
    *out = dup_string(gt::export_dot(t->v, f ? &f->v : nullptr, m ? &m->v : nullptr));
  });
}

}  // extern "C"
