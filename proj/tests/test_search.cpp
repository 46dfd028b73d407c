#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "formats.hpp"
#include "oracles.hpp"
#include "search.hpp"

using gt::CaseTag;
using gt::Errc;
using gt::Family;
using gt::HuntScope;
using gt::Labelling;
using gt::LabellingMode;
using gt::Matching;
using gt::SearchReport;
using gt::Tree;
using oracle::thrown_code;
using oracle::tree_of;

namespace {

std::set<std::vector<int>> value_set(const std::vector<Labelling>& labs) {
  std::set<std::vector<int>> out;
  for (const auto& f : labs) out.insert(f.values);
  return out;
}

std::vector<std::string> summary_lines(const SearchReport& r, const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& line : r.summary)
    if (line.rfind(prefix, 0) == 0) out.push_back(line);
  return out;
}

Tree tree_from_edge_string(int n, const std::string& edges) {
  std::vector<std::pair<int, int>> out;
  std::istringstream es(edges);
  std::string tok;
  while (es >> tok) {
    auto dash = tok.find('-');
    out.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
  }
  return Tree::from_edges(n, std::move(out));
}

Tree case2b_witness() {
  return tree_of(14, {{0, 1},
                      {0, 5},
                      {0, 9},
                      {0, 13},
                      {1, 2},
                      {1, 4},
                      {2, 3},
                      {5, 6},
                      {5, 8},
                      {6, 7},
                      {9, 10},
                      {9, 12},
                      {10, 11}});
}

}  // namespace

TEST_CASE("graceful brute force matches the permutation oracle") {
  for (int n = 2; n <= 7; ++n)
    for (const Tree& t : gt::enumerate_free_trees(n)) {
      auto got = gt::brute_force_labellings(t, LabellingMode::Graceful, nullptr, false);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(value_set(got) == value_set(oracle::naive_graceful(t)));
    }
}

TEST_CASE("strong brute force matches the permutation oracle") {
  for (int n = 2; n <= 8; n += 2)
    for (const auto& inst : gt::enumerate_family(n, Family::AnyPerfectMatching)) {
      auto got =
          gt::brute_force_labellings(inst.tree, LabellingMode::Strong, &inst.matching, false);
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(value_set(got) == value_set(oracle::naive_strong(inst.tree, inst.matching)));
    }
}

TEST_CASE("dedup keeps one representative per orbit") {
  // r never fixes a labelling, so graceful orbits all have size two
  for (int n = 2; n <= 7; ++n)
    for (const Tree& t : gt::enumerate_free_trees(n)) {
      auto full = gt::brute_force_labellings(t, LabellingMode::Graceful, nullptr, false);
      auto reps = gt::brute_force_labellings(t, LabellingMode::Graceful, nullptr, true);
      CHECK(full.size() == 2 * reps.size());
      auto r = gt::perm_r(n);
      std::set<std::vector<int>> covered;
      for (const auto& f : reps) {
        covered.insert(f.values);
        covered.insert(gt::apply_perm(r, f).values);
      }
      CHECK(covered == value_set(full));
    }
  // the four-element group acts freely once n is at least four
  for (int n = 4; n <= 8; n += 2)
    for (const auto& inst : gt::enumerate_family(n, Family::AnyPerfectMatching)) {
      auto full =
          gt::brute_force_labellings(inst.tree, LabellingMode::Strong, &inst.matching, false);
      auto reps =
          gt::brute_force_labellings(inst.tree, LabellingMode::Strong, &inst.matching, true);
      CHECK(full.size() == 4 * reps.size());
    }
  // at n = 2 the group collapses to {identity, r}
  Tree k2 = tree_of(2, {{0, 1}});
  Matching m = Matching::from_pairs({{0, 1}});
  CHECK(gt::brute_force_labellings(k2, LabellingMode::Strong, &m, false).size() == 2);
  CHECK(gt::brute_force_labellings(k2, LabellingMode::Strong, &m, true).size() == 1);
}

TEST_CASE("brute force guards") {
  Tree k2 = tree_of(2, {{0, 1}});
  CHECK(thrown_code([&] {
          gt::brute_force_labellings(k2, LabellingMode::Strong, nullptr, false);
        }) == Errc::Invalid);
  gt::SearchLimits tight;
  tight.max_graceful_n = 6;
  tight.max_strong_n = 6;
  Tree p8 = oracle::path_tree(8);
  CHECK(thrown_code([&] {
          gt::brute_force_labellings(p8, LabellingMode::Graceful, nullptr, false, tight);
        }) == Errc::Limit);
  auto pm = gt::unique_perfect_matching(p8);
  REQUIRE(pm.has_value());
  CHECK(thrown_code([&] {
          gt::brute_force_labellings(p8, LabellingMode::Strong, &*pm, false, tight);
        }) == Errc::Limit);
  Tree t1 = tree_of(1, {});
  auto single = gt::brute_force_labellings(t1, LabellingMode::Graceful, nullptr, false);
  REQUIRE(single.size() == 1);
  CHECK(single[0].values == std::vector<int>{0});
}

TEST_CASE("case classification") {
  CHECK(gt::case_name(CaseTag::Base) == "base");
  CHECK(gt::case_name(CaseTag::Case1) == "case1");
  CHECK(gt::case_name(CaseTag::Case2a) == "case2a");
  CHECK(gt::case_name(CaseTag::Case2b) == "case2b");

  Tree p4 = oracle::path_tree(4);
  CHECK(gt::classify_case(p4, *gt::make_spine(p4, 2)) == CaseTag::Base);

  // third spine vertex branches
  Tree limb8 = tree_of(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}, {6, 7}});
  CHECK(gt::classify_case(limb8, *gt::make_spine(limb8, 2)) == CaseTag::Case1);

  // bare third vertex, remainder keeps the path maximal
  Tree spider6 = tree_of(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
  CHECK(gt::classify_case(spider6, *gt::make_spine(spider6, 2)) == CaseTag::Case2a);

  // bare third vertex whose removal leaves a longer path elsewhere
  Tree deep = case2b_witness();
  CHECK(!gt::make_spine(deep, 2).has_value());
  auto spine3 = gt::make_spine(deep, 3);
  REQUIRE(spine3.has_value());
  CHECK(gt::classify_case(deep, *spine3) == CaseTag::Case2b);

  Tree star4 = oracle::star_tree(4);
  auto sp = gt::longest_path(star4);
  CHECK(thrown_code([&] {
          gt::classify_case(star4, gt::Spine{sp, 2});
        }) == Errc::Domain);
}

TEST_CASE("hunt finds exactly the known group on small even sizes") {
  for (int n : {4, 6, 8}) {
    auto rep = gt::hunt_generalized_perms(n, HuntScope::FamilyAll, nullptr, 2);
    CHECK(rep.kind == "hunt-perms");
    auto lines = summary_lines(rep, "survivor: ");
    REQUIRE(lines.size() == 4);
    std::set<std::string> got(lines.begin(), lines.end());
    std::set<std::string> want;
    for (const auto& p : {gt::perm_identity(n), gt::perm_r(n), gt::perm_g1(n), gt::perm_g2(n)})
      want.insert("survivor: " + gt::cycle_notation(p) + " [known]");
    CHECK(got == want);
    CHECK(summary_lines(rep, "survivors: ") ==
          std::vector<std::string>{"survivors: 4"});
  }
}

TEST_CASE("hunt degenerates gracefully at n = 2") {
  auto rep = gt::hunt_generalized_perms(2, HuntScope::FamilyAll, nullptr, 1);
  CHECK(summary_lines(rep, "survivors: ") == std::vector<std::string>{"survivors: 2"});
  CHECK(summary_lines(rep, "survivor: ").size() == 2);
}

TEST_CASE("hunt on a single tree") {
  Tree p4 = oracle::path_tree(4);
  auto rep = gt::hunt_generalized_perms(4, HuntScope::SingleTree, &p4, 1);
  CHECK(summary_lines(rep, "survivors: ") == std::vector<std::string>{"survivors: 4"});
  REQUIRE(rep.instances.size() == 1);
  CHECK(rep.instances[0].verdict == "constrains-hunt");

  Tree star4 = oracle::star_tree(4);
  CHECK(thrown_code([&] {
          gt::hunt_generalized_perms(4, HuntScope::SingleTree, &star4, 1);
        }) == Errc::Domain);
  CHECK(thrown_code([&] {
          gt::hunt_generalized_perms(6, HuntScope::SingleTree, &p4, 1);
        }) == Errc::Invalid);
  CHECK(thrown_code([&] {
          gt::hunt_generalized_perms(6, HuntScope::SingleTree, nullptr, 1);
        }) == Errc::Invalid);
}

TEST_CASE("hunt guards and the structured regime") {
  CHECK(thrown_code([] { gt::hunt_generalized_perms(5, HuntScope::FamilyAll, nullptr, 1); }) ==
        Errc::Invalid);
  CHECK(thrown_code([] { gt::hunt_generalized_perms(0, HuntScope::FamilyAll, nullptr, 1); }) ==
        Errc::Invalid);
  CHECK(thrown_code([] { gt::hunt_generalized_perms(18, HuntScope::FamilyAll, nullptr, 1); }) ==
        Errc::Limit);

  auto rep = gt::hunt_generalized_perms(12, HuntScope::FamilyAll, nullptr, 4);
  bool structured = false;
  for (const auto& [k, v] : rep.params)
    if (k == "mode") {
      CHECK(v == "structured-heuristic");
      structured = true;
    }
  CHECK(structured);
  CHECK(summary_lines(rep, "survivors: ") == std::vector<std::string>{"survivors: 4"});
  CHECK(summary_lines(rep, "instances-constraining: ") ==
        std::vector<std::string>{"instances-constraining: 49"});
}

TEST_CASE("case exploration sweep") {
  auto rep = gt::explore_case2b(14, 4);
  CHECK(rep.kind == "explore-case2b");
  CHECK(rep.instances.size() == 24);
  CHECK(summary_lines(rep, "base: ") == std::vector<std::string>{"base: 1"});
  CHECK(summary_lines(rep, "case1: ") == std::vector<std::string>{"case1: 10"});
  CHECK(summary_lines(rep, "case2a: ") == std::vector<std::string>{"case2a: 12"});
  CHECK(summary_lines(rep, "case2b: ") == std::vector<std::string>{"case2b: 1"});
  CHECK(summary_lines(rep, "case2b-quad-exists: ") ==
        std::vector<std::string>{"case2b-quad-exists: 1"});
  CHECK(summary_lines(rep, "case2b-quad-missing-or-unlabellable: ") ==
        std::vector<std::string>{"case2b-quad-missing-or-unlabellable: 0"});

  const gt::ReportInstance* deep = nullptr;
  for (const auto& ins : rep.instances)
    if (ins.verdict.rfind("case2b", 0) == 0) deep = &ins;
  REQUIRE(deep != nullptr);
  CHECK(deep->n == 14);
  CHECK(deep->verdict == "case2b quad-exists");
  CHECK(deep->edges == gt::edge_string(case2b_witness()));
  REQUIRE(deep->witnesses.size() == 1);
  // the witness labelling really is strong and puts 0 on the spine head
  Tree t = case2b_witness();
  auto f = gt::parse_labelling(deep->witnesses[0]);
  auto m = gt::end_edge_perfect_matching(t);
  REQUIRE(m.has_value());
  CHECK(!gt::strong_violation(t, *m, f).has_value());
  CHECK(f.values[gt::make_spine(t, 3)->vertices[0]] == 0);

  // the phenomenon starts strictly above twelve vertices
  auto below = gt::explore_case2b(12, 2);
  CHECK(summary_lines(below, "case2b: ") == std::vector<std::string>{"case2b: 0"});
  CHECK(below.instances.size() == 13);

  CHECK(thrown_code([] { gt::explore_case2b(2, 1); }) == Errc::Invalid);
  CHECK(thrown_code([] { gt::explore_case2b(18, 1); }) == Errc::Limit);
}

TEST_CASE("anchor path sweep") {
  auto rep = gt::sweep_anchor_paths(8, 4);
  CHECK(rep.kind == "verify-lemma2");
  CHECK(rep.instances.size() == 8);
  CHECK(summary_lines(rep, "labellings: ") == std::vector<std::string>{"labellings: 92"});
  CHECK(summary_lines(rep, "with-anchor-path: ") ==
        std::vector<std::string>{"with-anchor-path: 46"});
  CHECK(summary_lines(rep, "with-alternative-adjacency: ") ==
        std::vector<std::string>{"with-alternative-adjacency: 46"});
  CHECK(summary_lines(rep, "instances-not-strongly-graceful: ") ==
        std::vector<std::string>{"instances-not-strongly-graceful: 0"});
  bool closing = false;
  for (const auto& line : rep.summary)
    if (line == "statement needs the adjacency alternative on this range") closing = true;
  CHECK(closing);

  // per instance the orbit structure forces an even split
  for (const auto& ins : rep.instances) {
    int strong = -1, with = -1, without = -1;
    for (const auto& [k, v] : ins.facts) {
      if (k == "strong-count") strong = std::stoi(v);
      if (k == "anchor-path") with = std::stoi(v);
      if (k == "zero-next-to-second-largest") without = std::stoi(v);
    }
    REQUIRE(strong > 0);
    CHECK(with + without == strong);
    CHECK(with == without);
    CHECK(ins.verdict == "alternative-occurs (" + std::to_string(without) + " of " +
                             std::to_string(strong) + ")");
  }

  CHECK(thrown_code([] { gt::sweep_anchor_paths(2, 1); }) == Errc::Invalid);
  CHECK(thrown_code([] { gt::sweep_anchor_paths(16, 1); }) == Errc::Limit);
}

TEST_CASE("sweep facts agree with a direct recount") {
  auto rep = gt::sweep_anchor_paths(6, 1);
  for (const auto& ins : rep.instances) {
    Tree t = tree_from_edge_string(ins.n, ins.edges);
    auto m = gt::unique_perfect_matching(t);
    REQUIRE(m.has_value());
    auto labs = gt::brute_force_labellings(t, LabellingMode::Strong, &*m, false);
    int with = 0;
    for (const auto& f : labs)
      if (gt::extract_anchor_path(t, *m, f).path.has_value()) ++with;
    int claimed = -1;
    for (const auto& [k, v] : ins.facts)
      if (k == "anchor-path") claimed = std::stoi(v);
    CHECK(claimed == with);
  }
}

TEST_CASE("reports are byte-stable across worker counts and runs") {
  auto a = gt::sweep_anchor_paths(8, 1);
  auto b = gt::sweep_anchor_paths(8, 4);
  auto c = gt::sweep_anchor_paths(8, 4);
  CHECK(gt::report_text(a) == gt::report_text(b));
  CHECK(gt::report_text(b) == gt::report_text(c));
  CHECK(gt::report_json(a) == gt::report_json(b));

  auto h1 = gt::hunt_generalized_perms(6, HuntScope::FamilyAll, nullptr, 1);
  auto h3 = gt::hunt_generalized_perms(6, HuntScope::FamilyAll, nullptr, 3);
  CHECK(gt::report_text(h1) == gt::report_text(h3));
  CHECK(gt::report_json(h1) == gt::report_json(h3));

  auto e1 = gt::explore_case2b(12, 1);
  auto e4 = gt::explore_case2b(12, 4);
  CHECK(gt::report_text(e1) == gt::report_text(e4));
  CHECK(gt::report_json(e1) == gt::report_json(e4));
}

TEST_CASE("report json is well formed") {
  auto rep = gt::sweep_anchor_paths(4, 1);
  auto j = nlohmann::json::parse(gt::report_json(rep));
  CHECK(j["kind"] == "verify-lemma2");
  CHECK(j["params"]["family"] == "any-pm");
  CHECK(j["params"]["n-max"] == "4");
  REQUIRE(j["instances"].size() == 1);
  const auto& ins = j["instances"][0];
  CHECK(ins["index"] == 1);
  CHECK(ins["n"] == 4);
  CHECK(ins["edges"] == "0-1 0-3 1-2");
  CHECK(ins["matching"] == "0-3 1-2");
  CHECK(ins["facts"]["strong-count"] == "4");
  CHECK(ins["witnesses"].size() == 2);
  CHECK(j["summary"].is_array());
}

TEST_CASE("report text shape") {
  auto rep = gt::sweep_anchor_paths(4, 1);
  auto text = gt::report_text(rep);
  CHECK(text.rfind("# gracetree report\nkind: verify-lemma2\n", 0) == 0);
  CHECK(text.find("instance 1: n=4 canon=((())())") != std::string::npos);
  CHECK(text.find("\n  witness: ") != std::string::npos);
  // flattened witnesses carry vertex:label pairs
  CHECK(text.find("witness: 0:0 1:2 2:1 3:3") != std::string::npos);
}

TEST_CASE("search output matches the frozen regression data") {
  auto slurp = [](const std::string& name) {
    std::ifstream in(std::string(GT_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  CHECK(gt::report_text(gt::explore_case2b(14, 2)) == slurp("case2b_explore_n14.txt"));
  CHECK(gt::report_text(gt::hunt_generalized_perms(8, HuntScope::FamilyAll, nullptr, 2)) ==
        slurp("hunt_n8.txt"));
  CHECK(gt::report_text(gt::sweep_anchor_paths(12, 2)) == slurp("lemma2_sweep_n12.txt"));
}

TEST_CASE("enumerate report") {
  auto rep = gt::enumerate_report(7, std::nullopt);
  CHECK(rep.kind == "enumerate");
  CHECK(rep.instances.size() == 11);
  CHECK(summary_lines(rep, "count: ") == std::vector<std::string>{"count: 11"});
  for (const auto& ins : rep.instances) {
    CHECK(ins.verdict == "member");
    CHECK(ins.matching.empty());
  }
  auto fam = gt::enumerate_report(8, Family::EndEdgePerfectMatching);
  CHECK(fam.instances.size() == 2);
  for (const auto& ins : fam.instances) CHECK(!ins.matching.empty());
}
