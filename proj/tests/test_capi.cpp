#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gracetree.h>

#include <cstring>
#include <string>
#include <vector>

namespace {

struct TreeHandle {
  gt_tree* p = nullptr;
  ~TreeHandle() { gt_tree_free(p); }
};
struct MatchingHandle {
  gt_matching* p = nullptr;
  ~MatchingHandle() { gt_matching_free(p); }
};
struct LabellingHandle {
  gt_labelling* p = nullptr;
  ~LabellingHandle() { gt_labelling_free(p); }
};
struct PermHandle {
  gt_perm* p = nullptr;
  ~PermHandle() { gt_perm_free(p); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  gt_string_free(s);
  return out;
}

gt_tree* parse_tree(const std::string& text) {
  gt_tree* t = nullptr;
  REQUIRE(gt_tree_parse(text.c_str(), &t) == GT_OK);
  return t;
}

const char kP4[] = "4\n0 1\n1 2\n2 3\n";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(gt_version()) == "1.0.0");
  CHECK(std::string(gt_status_name(GT_OK)) == "ok");
  CHECK(std::string(gt_status_name(GT_ERR_PARSE)) == "parse-error");
  CHECK(std::string(gt_status_name(GT_ERR_INVALID)) == "invalid-argument");
  CHECK(std::string(gt_status_name(GT_ERR_DOMAIN)) == "domain-error");
  CHECK(std::string(gt_status_name(GT_ERR_LIMIT)) == "limit-exceeded");
  CHECK(std::string(gt_status_name(GT_ERR_INTERNAL)) == "internal-error");
  CHECK(std::string(gt_status_name(GT_ERR_NOMEM)) == "out-of-memory");
  CHECK(gt_last_error() != nullptr);
}

TEST_CASE("tree round trip") {
  TreeHandle t{parse_tree(kP4)};
  int n = 0;
  REQUIRE(gt_tree_n(t.p, &n) == GT_OK);
  CHECK(n == 4);
  int edges[6] = {0};
  REQUIRE(gt_tree_edges(t.p, edges) == GT_OK);
  int want[6] = {0, 1, 1, 2, 2, 3};
  CHECK(std::memcmp(edges, want, sizeof want) == 0);
  char* text = nullptr;
  REQUIRE(gt_tree_to_text(t.p, &text) == GT_OK);
  CHECK(take(text) == kP4);

  TreeHandle t2;
  REQUIRE(gt_tree_from_edges(4, want, 3, &t2.p) == GT_OK);
  char* canon1 = nullptr;
  char* canon2 = nullptr;
  REQUIRE(gt_tree_canonical_form(t.p, &canon1) == GT_OK);
  REQUIRE(gt_tree_canonical_form(t2.p, &canon2) == GT_OK);
  CHECK(take(canon1) == take(canon2));

  int d = 0;
  REQUIRE(gt_tree_diameter(t.p, &d) == GT_OK);
  CHECK(d == 3);
  int path[4] = {0};
  int len = 0;
  REQUIRE(gt_tree_longest_path(t.p, path, &len) == GT_OK);
  CHECK(len == 4);
  CHECK(path[0] == 0);
  CHECK(path[3] == 3);
  int flag = -1;
  REQUIRE(gt_tree_is_k_distant(t.p, 2, &flag) == GT_OK);
  CHECK(flag == 1);
}

TEST_CASE("failures set status and message") {
  gt_tree* t = nullptr;
  CHECK(gt_tree_parse("not a tree", &t) == GT_ERR_PARSE);
  CHECK(t == nullptr);
  CHECK(std::strlen(gt_last_error()) > 0);

  CHECK(gt_tree_parse(nullptr, &t) == GT_ERR_INVALID);
  CHECK(gt_tree_parse(kP4, nullptr) == GT_ERR_INVALID);
  CHECK(gt_tree_n(nullptr, nullptr) == GT_ERR_INVALID);

  gt_perm* g = nullptr;
  CHECK(gt_perm_g1(5, &g) == GT_ERR_INVALID);
  CHECK(g == nullptr);
  CHECK(std::string(gt_last_error()).find("even") != std::string::npos);

  int cycle[6] = {0, 1, 1, 2, 2, 0};
  gt_tree* bad = nullptr;
  CHECK(gt_tree_from_edges(3, cycle, 3, &bad) == GT_ERR_INVALID);
}

TEST_CASE("matchings and end edges") {
  TreeHandle t{parse_tree(kP4)};
  int buf[6] = {0};
  int count = 0;
  REQUIRE(gt_tree_end_edges(t.p, buf, &count) == GT_OK);
  REQUIRE(count == 2);
  CHECK(buf[0] == 0);
  CHECK(buf[1] == 1);
  CHECK(buf[2] == 2);
  CHECK(buf[3] == 3);

  MatchingHandle m;
  REQUIRE(gt_tree_end_edge_perfect_matching(t.p, &m.p) == GT_OK);
  REQUIRE(m.p != nullptr);
  int size = 0;
  REQUIRE(gt_matching_size(m.p, &size) == GT_OK);
  CHECK(size == 2);
  char* text = nullptr;
  REQUIRE(gt_matching_to_text(m.p, &text) == GT_OK);
  CHECK(take(text) == "M 2\n0 1\n2 3\n");

  TreeHandle p6{parse_tree("6\n0 1\n1 2\n2 3\n3 4\n4 5\n")};
  gt_matching* none = reinterpret_cast<gt_matching*>(&size);  // must be overwritten
  REQUIRE(gt_tree_end_edge_perfect_matching(p6.p, &none) == GT_OK);
  CHECK(none == nullptr);
  MatchingHandle pm;
  REQUIRE(gt_tree_perfect_matching(p6.p, &pm.p) == GT_OK);
  REQUIRE(pm.p != nullptr);
  int pairs[6] = {0};
  REQUIRE(gt_matching_pairs(pm.p, pairs) == GT_OK);
  int want[6] = {0, 1, 2, 3, 4, 5};
  CHECK(std::memcmp(pairs, want, sizeof want) == 0);

  MatchingHandle parsed;
  REQUIRE(gt_matching_parse("M 2\n0 1\n2 3\n", &parsed.p) == GT_OK);
  MatchingHandle built;
  int flat[4] = {2, 3, 0, 1};
  REQUIRE(gt_matching_from_pairs(flat, 2, &built.p) == GT_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(gt_matching_to_text(parsed.p, &a) == GT_OK);
  REQUIRE(gt_matching_to_text(built.p, &b) == GT_OK);
  CHECK(take(a) == take(b));
}

TEST_CASE("labellings and gracefulness checks") {
  TreeHandle t{parse_tree(kP4)};
  LabellingHandle f;
  int values[4] = {0, 3, 1, 2};
  REQUIRE(gt_labelling_from_values(values, 4, &f.p) == GT_OK);
  char* text = nullptr;
  REQUIRE(gt_labelling_to_text(f.p, &text) == GT_OK);
  CHECK(take(text) == "L\n0 0\n1 3\n2 1\n3 2\n");

  MatchingHandle m;
  REQUIRE(gt_tree_end_edge_perfect_matching(t.p, &m.p) == GT_OK);
  int ok = 0;
  char* why = reinterpret_cast<char*>(&ok);
  REQUIRE(gt_is_graceful(t.p, f.p, &ok, &why) == GT_OK);
  CHECK(ok == 1);
  CHECK(why == nullptr);
  REQUIRE(gt_is_strongly_graceful(t.p, m.p, f.p, &ok, &why) == GT_OK);
  CHECK(ok == 1);

  LabellingHandle bad;
  int dup[4] = {0, 2, 1, 3};
  REQUIRE(gt_labelling_from_values(dup, 4, &bad.p) == GT_OK);
  REQUIRE(gt_is_graceful(t.p, bad.p, &ok, &why) == GT_OK);
  CHECK(ok == 0);
  std::string reason = take(why);
  CHECK(reason.find("duplicate edge label") != std::string::npos);

  LabellingHandle parsed;
  REQUIRE(gt_labelling_parse("L\n3 2\n0 0\n1 3\n2 1\n", &parsed.p) == GT_OK);
  int out_n = 0;
  REQUIRE(gt_labelling_n(parsed.p, &out_n) == GT_OK);
  CHECK(out_n == 4);
  int got[4] = {0};
  REQUIRE(gt_labelling_values(parsed.p, got) == GT_OK);
  CHECK(std::memcmp(got, values, sizeof values) == 0);
}

TEST_CASE("permutations") {
  PermHandle g1;
  REQUIRE(gt_perm_g1(12, &g1.p) == GT_OK);
  char* s = nullptr;
  REQUIRE(gt_perm_cycles(g1.p, &s) == GT_OK);
  CHECK(take(s) == "(0 1)(2 3)(4 5)(6 7)(8 9)(10 11)");
  PermHandle g2;
  REQUIRE(gt_perm_g2(12, &g2.p) == GT_OK);
  REQUIRE(gt_perm_cycles(g2.p, &s) == GT_OK);
  CHECK(take(s) == "(0 10)(1 11)(2 8)(3 9)(4 6)(5 7)");

  PermHandle r;
  REQUIRE(gt_perm_r(12, &r.p) == GT_OK);
  PermHandle composed;
  REQUIRE(gt_perm_compose(r.p, g1.p, &composed.p) == GT_OK);
  int a[12], b[12];
  REQUIRE(gt_perm_mapping(composed.p, a) == GT_OK);
  REQUIRE(gt_perm_mapping(g2.p, b) == GT_OK);
  CHECK(std::memcmp(a, b, sizeof a) == 0);

  int n = 0;
  REQUIRE(gt_perm_n(r.p, &n) == GT_OK);
  CHECK(n == 12);

  PermHandle built;
  int mapping[4] = {3, 2, 1, 0};
  REQUIRE(gt_perm_from_mapping(mapping, 4, &built.p) == GT_OK);
  TreeHandle t{parse_tree(kP4)};
  LabellingHandle f;
  int values[4] = {0, 3, 1, 2};
  REQUIRE(gt_labelling_from_values(values, 4, &f.p) == GT_OK);
  LabellingHandle image;
  REQUIRE(gt_perm_apply(built.p, f.p, &image.p) == GT_OK);
  int got[4] = {0};
  REQUIRE(gt_labelling_values(image.p, got) == GT_OK);
  int want[4] = {3, 0, 2, 1};
  CHECK(std::memcmp(got, want, sizeof want) == 0);

  int not_perm[4] = {0, 0, 1, 2};
  PermHandle reject;
  CHECK(gt_perm_from_mapping(not_perm, 4, &reject.p) == GT_ERR_INVALID);
}

TEST_CASE("quad labeller") {
  TreeHandle t{parse_tree(kP4)};
  gt_quad* q = nullptr;
  REQUIRE(gt_label_lobster(t.p, &q) == GT_OK);
  int anchors[4] = {0};
  REQUIRE(gt_quad_anchors(q, anchors) == GT_OK);
  CHECK(anchors[0] == 0);
  CHECK(anchors[1] == 1);
  CHECK(anchors[2] == 2);
  CHECK(anchors[3] == 3);
  LabellingHandle f;
  REQUIRE(gt_quad_labelling(q, 0, &f.p) == GT_OK);
  char* text = nullptr;
  REQUIRE(gt_labelling_to_text(f.p, &text) == GT_OK);
  CHECK(take(text) == "L\n0 0\n1 3\n2 1\n3 2\n");
  LabellingHandle f9;
  CHECK(gt_quad_labelling(q, 4, &f9.p) == GT_ERR_INVALID);
  gt_quad_free(q);

  TreeHandle p6{parse_tree("6\n0 1\n1 2\n2 3\n3 4\n4 5\n")};
  gt_quad* none = nullptr;
  CHECK(gt_label_lobster(p6.p, &none) == GT_ERR_DOMAIN);
  CHECK(none == nullptr);
  CHECK(std::string(gt_last_error()).find("perfect matching") != std::string::npos);
}

TEST_CASE("brute force list") {
  TreeHandle t{parse_tree(kP4)};
  MatchingHandle m;
  REQUIRE(gt_tree_end_edge_perfect_matching(t.p, &m.p) == GT_OK);
  gt_labelling_list* l = nullptr;
  REQUIRE(gt_brute_force_labellings(t.p, "strong", m.p, 0, 0, &l) == GT_OK);
  int size = 0;
  REQUIRE(gt_labelling_list_size(l, &size) == GT_OK);
  CHECK(size == 4);
  LabellingHandle first;
  REQUIRE(gt_labelling_list_get(l, 0, &first.p) == GT_OK);
  int got[4] = {0};
  REQUIRE(gt_labelling_values(first.p, got) == GT_OK);
  int want[4] = {0, 3, 1, 2};
  CHECK(std::memcmp(got, want, sizeof want) == 0);
  LabellingHandle oob;
  CHECK(gt_labelling_list_get(l, 4, &oob.p) == GT_ERR_INVALID);
  gt_labelling_list_free(l);

  gt_labelling_list* g = nullptr;
  REQUIRE(gt_brute_force_labellings(t.p, "graceful", nullptr, 1, 0, &g) == GT_OK);
  REQUIRE(gt_labelling_list_size(g, &size) == GT_OK);
  CHECK(size == 2);
  gt_labelling_list_free(g);

  gt_labelling_list* bad = nullptr;
  CHECK(gt_brute_force_labellings(t.p, "fancy", nullptr, 0, 0, &bad) == GT_ERR_INVALID);
  CHECK(gt_brute_force_labellings(t.p, "strong", nullptr, 0, 0, &bad) == GT_ERR_INVALID);
}

TEST_CASE("lift and project") {
  TreeHandle k2{parse_tree("2\n0 1\n")};
  LabellingHandle f;
  int values[2] = {0, 1};
  REQUIRE(gt_labelling_from_values(values, 2, &f.p) == GT_OK);

  TreeHandle spike;
  MatchingHandle sm;
  LabellingHandle sf;
  REQUIRE(gt_lift_to_spike(k2.p, f.p, &spike.p, &sm.p, &sf.p) == GT_OK);
  char* text = nullptr;
  REQUIRE(gt_tree_to_text(spike.p, &text) == GT_OK);
  CHECK(take(text) == "4\n0 1\n0 2\n1 3\n");
  REQUIRE(gt_matching_to_text(sm.p, &text) == GT_OK);
  CHECK(take(text) == "M 2\n0 2\n1 3\n");
  int ok = 0;
  REQUIRE(gt_is_strongly_graceful(spike.p, sm.p, sf.p, &ok, nullptr) == GT_OK);
  CHECK(ok == 1);

  TreeHandle back;
  LabellingHandle back_f;
  REQUIRE(gt_project_to_contree(spike.p, sm.p, sf.p, &back.p, &back_f.p) == GT_OK);
  REQUIRE(gt_tree_to_text(back.p, &text) == GT_OK);
  CHECK(take(text) == "2\n0 1\n");
  REQUIRE(gt_labelling_to_text(back_f.p, &text) == GT_OK);
  CHECK(take(text) == "L\n0 0\n1 1\n");

  TreeHandle contracted;
  int map[4] = {-1, -1, -1, -1};
  REQUIRE(gt_tree_contract_matching(spike.p, sm.p, &contracted.p, map) == GT_OK);
  int n = 0;
  REQUIRE(gt_tree_n(contracted.p, &n) == GT_OK);
  CHECK(n == 2);
  CHECK(map[0] == 0);
  CHECK(map[2] == 0);
  CHECK(map[1] == 1);
  CHECK(map[3] == 1);
}

TEST_CASE("spike") {
  TreeHandle k2{parse_tree("2\n0 1\n")};
  TreeHandle sp;
  MatchingHandle m;
  REQUIRE(gt_tree_spike(k2.p, &sp.p, &m.p) == GT_OK);
  char* text = nullptr;
  REQUIRE(gt_tree_to_text(sp.p, &text) == GT_OK);
  CHECK(take(text) == "4\n0 1\n0 2\n1 3\n");
  REQUIRE(gt_matching_to_text(m.p, &text) == GT_OK);
  CHECK(take(text) == "M 2\n0 2\n1 3\n");
}

TEST_CASE("make spine through the c layer") {
  TreeHandle t{parse_tree("6\n0 1\n1 2\n0 3\n3 4\n0 5\n")};
  int present = -1;
  int buf[6] = {0};
  int len = 0;
  REQUIRE(gt_tree_make_spine(t.p, 2, &present, buf, &len) == GT_OK);
  REQUIRE(present == 1);
  REQUIRE(len == 5);
  int want[5] = {2, 1, 0, 3, 4};
  CHECK(std::memcmp(buf, want, sizeof want) == 0);

  TreeHandle star{parse_tree("5\n0 1\n0 2\n0 3\n0 4\n")};
  REQUIRE(gt_tree_make_spine(star.p, 0, &present, buf, &len) == GT_OK);
  CHECK(present == 0);
}

TEST_CASE("search reports through the c layer") {
  gt_report* rep = nullptr;
  REQUIRE(gt_search_enumerate(7, "all", 0, &rep) == GT_OK);
  char* text = nullptr;
  REQUIRE(gt_report_text(rep, &text) == GT_OK);
  std::string body = take(text);
  CHECK(body.find("kind: enumerate") != std::string::npos);
  CHECK(body.find("summary: count: 11") != std::string::npos);
  char* json = nullptr;
  REQUIRE(gt_report_json(rep, &json) == GT_OK);
  CHECK(take(json).find("\"kind\": \"enumerate\"") != std::string::npos);
  gt_report_free(rep);

  gt_report* hunt = nullptr;
  REQUIRE(gt_hunt_generalized_perms(4, "family", nullptr, 2, 0, &hunt) == GT_OK);
  REQUIRE(gt_report_text(hunt, &text) == GT_OK);
  CHECK(take(text).find("summary: survivors: 4") != std::string::npos);
  gt_report_free(hunt);

  gt_report* explore = nullptr;
  REQUIRE(gt_explore_case2b(8, 2, 0, &explore) == GT_OK);
  REQUIRE(gt_report_text(explore, &text) == GT_OK);
  CHECK(take(text).find("summary: case2b: 0") != std::string::npos);
  gt_report_free(explore);

  gt_report* sweep = nullptr;
  REQUIRE(gt_verify_lemma2(6, 2, 0, &sweep) == GT_OK);
  REQUIRE(gt_report_text(sweep, &text) == GT_OK);
  CHECK(take(text).find("summary: labellings: 20") != std::string::npos);
  gt_report_free(sweep);

  gt_report* bad = nullptr;
  CHECK(gt_search_enumerate(7, "fancy", 0, &bad) == GT_ERR_INVALID);
  CHECK(gt_hunt_generalized_perms(4, "single", nullptr, 1, 0, &bad) == GT_ERR_INVALID);
  // the max_n knob loosens or tightens every cap at once
  CHECK(gt_search_enumerate(19, "all", 0, &bad) == GT_ERR_LIMIT);
  CHECK(gt_verify_lemma2(16, 1, 12, &bad) == GT_ERR_LIMIT);
}

TEST_CASE("dot rendering through the c layer") {
  TreeHandle t{parse_tree(kP4)};
  LabellingHandle f;
  int values[4] = {0, 3, 1, 2};
  REQUIRE(gt_labelling_from_values(values, 4, &f.p) == GT_OK);
  MatchingHandle m;
  REQUIRE(gt_tree_end_edge_perfect_matching(t.p, &m.p) == GT_OK);
  char* dot = nullptr;
  REQUIRE(gt_export_dot(t.p, f.p, m.p, &dot) == GT_OK);
  std::string body = take(dot);
  CHECK(body.rfind("graph T {", 0) == 0);
  CHECK(body.find("style=bold") != std::string::npos);
  REQUIRE(gt_export_dot(t.p, nullptr, nullptr, &dot) == GT_OK);
  CHECK(take(dot).find("label=\"0\"") != std::string::npos);
}
