// gracetree command line tool. Talks to the core through the public C API
// only, so it doubles as a smoke test of the shared-library surface.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gracetree.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

// Thrown for IO and usage problems (exit 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Thrown for failed gt_* calls; carries the status for the exit code.
struct ApiError : std::runtime_error {
  gt_status status;
  ApiError(gt_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(gt_status s) {
  if (s != GT_OK)
    throw ApiError(s, std::string(gt_status_name(s)) + ": " + gt_last_error());
}

int exit_code_for(gt_status s) { return s == GT_ERR_PARSE ? kExitInput : kExitDomain; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("write failed on " + path);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  gt_string_free(s);
  return out;
}

template <class T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using TreePtr = std::unique_ptr<gt_tree, Deleter<gt_tree, gt_tree_free>>;
using MatchingPtr = std::unique_ptr<gt_matching, Deleter<gt_matching, gt_matching_free>>;
using LabellingPtr = std::unique_ptr<gt_labelling, Deleter<gt_labelling, gt_labelling_free>>;
using QuadPtr = std::unique_ptr<gt_quad, Deleter<gt_quad, gt_quad_free>>;
using ReportPtr = std::unique_ptr<gt_report, Deleter<gt_report, gt_report_free>>;

TreePtr load_tree(const std::string& path) {
  gt_tree* t = nullptr;
  check(gt_tree_parse(read_file(path).c_str(), &t));
  return TreePtr(t);
}

MatchingPtr load_matching(const std::string& path) {
  gt_matching* m = nullptr;
  check(gt_matching_parse(read_file(path).c_str(), &m));
  return MatchingPtr(m);
}

LabellingPtr load_labelling(const std::string& path) {
  gt_labelling* f = nullptr;
  check(gt_labelling_parse(read_file(path).c_str(), &f));
  return LabellingPtr(f);
}

struct Options {
  bool quiet = false;
  std::string out_dir;
  int workers = 0;
  int max_n = 0;
};

std::string out_path(const Options& opt, const std::string& name) {
  if (opt.out_dir.empty()) return name;
  std::filesystem::create_directories(opt.out_dir);
  return (std::filesystem::path(opt.out_dir) / name).string();
}

void say(const Options& opt, const std::string& line) {
  if (!opt.quiet) std::cout << line << "\n";
}

// ---- verify ---------------------------------------------------------------

int run_verify(const Options& opt, const std::string& tree_path, const std::string& lab_path,
               const std::string& matching_path, bool strong) {
  auto tree = load_tree(tree_path);
  auto lab = load_labelling(lab_path);
  MatchingPtr matching;
  if (!matching_path.empty()) matching = load_matching(matching_path);
  if (strong && !matching)
    throw InputError("--strong needs a matching file");

  int n = 0;
  check(gt_tree_n(tree.get(), &n));
  std::vector<int> edges(2 * std::max(0, n - 1));
  check(gt_tree_edges(tree.get(), edges.data()));
  std::vector<int> values(n);
  check(gt_labelling_values(lab.get(), values.data()));
  if (static_cast<int>(values.size()) != n) throw InputError("labelling size mismatch");

  for (int i = 0; i < n - 1; ++i) {
    int u = edges[2 * i], v = edges[2 * i + 1];
    say(opt, "edge " + std::to_string(u) + "-" + std::to_string(v) + ": |" +
                 std::to_string(values[u]) + "-" + std::to_string(values[v]) + "| = " +
                 std::to_string(std::abs(values[u] - values[v])));
  }
  if (matching) {
    int pairs = 0;
    check(gt_matching_size(matching.get(), &pairs));
    std::vector<int> flat(2 * pairs);
    check(gt_matching_pairs(matching.get(), flat.data()));
    for (int i = 0; i < pairs; ++i) {
      int u = flat[2 * i], v = flat[2 * i + 1];
      if (u >= n || v >= n) throw InputError("matching vertex out of range");
      say(opt, "pair " + std::to_string(u) + "-" + std::to_string(v) + ": " +
                   std::to_string(values[u]) + "+" + std::to_string(values[v]) + " = " +
                   std::to_string(values[u] + values[v]));
    }
  }

  int holds = 0;
  char* why = nullptr;
  if (strong)
    check(gt_is_strongly_graceful(tree.get(), matching.get(), lab.get(), &holds, &why));
  else
    check(gt_is_graceful(tree.get(), lab.get(), &holds, &why));
  std::string reason = take_string(why);
  if (holds) {
    say(opt, std::string("verdict: ") + (strong ? "strongly graceful" : "graceful"));
    return kExitOk;
  }
  say(opt, std::string("verdict: not ") + (strong ? "strongly graceful" : "graceful") + " (" +
               reason + ")");
  return kExitDomain;
}

// ---- label ------------------------------------------------------------------

int run_label(const Options& opt, const std::string& tree_path) {
  auto tree = load_tree(tree_path);
  gt_quad* raw = nullptr;
  check(gt_label_lobster(tree.get(), &raw));
  QuadPtr quad(raw);

  static const char* names[4] = {"f.lab", "f1.lab", "f2.lab", "f3.lab"};
  for (int i = 0; i < 4; ++i) {
    gt_labelling* rawf = nullptr;
    check(gt_quad_labelling(quad.get(), i, &rawf));
    LabellingPtr f(rawf);
    char* text = nullptr;
    check(gt_labelling_to_text(f.get(), &text));
    write_file(out_path(opt, names[i]), take_string(text));
  }
  int anchors[4] = {0, 0, 0, 0};
  check(gt_quad_anchors(quad.get(), anchors));
  std::ostringstream a;
  a << "# vertex where each quad member takes label 0\n";
  static const char* members[4] = {"f", "f1", "f2", "f3"};
  for (int i = 0; i < 4; ++i) a << members[i] << " " << anchors[i] << "\n";
  write_file(out_path(opt, "anchors.txt"), a.str());

  say(opt, "quad written: f.lab f1.lab f2.lab f3.lab anchors.txt");
  say(opt, "anchors: " + std::to_string(anchors[0]) + " " + std::to_string(anchors[1]) + " " +
               std::to_string(anchors[2]) + " " + std::to_string(anchors[3]));
  return kExitOk;
}

// ---- transform ----------------------------------------------------------------

void write_tree_file(const Options& opt, const std::string& name, gt_tree* t) {
  char* text = nullptr;
  check(gt_tree_to_text(t, &text));
  write_file(out_path(opt, name), take_string(text));
}

void write_matching_file(const Options& opt, const std::string& name, gt_matching* m) {
  char* text = nullptr;
  check(gt_matching_to_text(m, &text));
  write_file(out_path(opt, name), take_string(text));
}

void write_labelling_file(const Options& opt, const std::string& name, gt_labelling* f) {
  char* text = nullptr;
  check(gt_labelling_to_text(f, &text));
  write_file(out_path(opt, name), take_string(text));
}

int run_transform(const Options& opt, const std::string& op, const std::string& tree_path,
                  const std::string& matching_path, const std::string& lab_path) {
  auto tree = load_tree(tree_path);
  if (op == "spike") {
    gt_tree* st = nullptr;
    gt_matching* sm = nullptr;
    check(gt_tree_spike(tree.get(), &st, &sm));
    TreePtr spike_tree(st);
    MatchingPtr spike_matching(sm);
    write_tree_file(opt, "spike.tree", spike_tree.get());
    write_matching_file(opt, "spike.matching", spike_matching.get());
    say(opt, "spike written: spike.tree spike.matching");
    return kExitOk;
  }
  if (op == "contract") {
    if (matching_path.empty()) throw InputError("contract needs a matching file");
    auto matching = load_matching(matching_path);
    int n = 0;
    check(gt_tree_n(tree.get(), &n));
    std::vector<int> map(n);
    gt_tree* ct = nullptr;
    check(gt_tree_contract_matching(tree.get(), matching.get(), &ct, map.data()));
    TreePtr contree(ct);
    write_tree_file(opt, "contree.tree", contree.get());
    std::ostringstream doc;
    doc << "# original vertex -> contracted vertex\n";
    for (int v = 0; v < n; ++v) doc << v << " " << map[v] << "\n";
    write_file(out_path(opt, "contract_map.txt"), doc.str());
    say(opt, "contraction written: contree.tree contract_map.txt");
    return kExitOk;
  }
  if (op == "lift") {
    if (lab_path.empty()) throw InputError("lift needs a labelling file");
    auto lab = load_labelling(lab_path);
    gt_tree* st = nullptr;
    gt_matching* sm = nullptr;
    gt_labelling* sf = nullptr;
    check(gt_lift_to_spike(tree.get(), lab.get(), &st, &sm, &sf));
    TreePtr spike_tree(st);
    MatchingPtr spike_matching(sm);
    LabellingPtr spike_lab(sf);
    write_tree_file(opt, "spike.tree", spike_tree.get());
    write_matching_file(opt, "spike.matching", spike_matching.get());
    write_labelling_file(opt, "spike.lab", spike_lab.get());
    say(opt, "lift written: spike.tree spike.matching spike.lab");
    return kExitOk;
  }
  if (op == "project") {
    if (matching_path.empty() || lab_path.empty())
      throw InputError("project needs matching and labelling files");
    auto matching = load_matching(matching_path);
    auto lab = load_labelling(lab_path);
    gt_tree* ct = nullptr;
    gt_labelling* cf = nullptr;
    check(gt_project_to_contree(tree.get(), matching.get(), lab.get(), &ct, &cf));
    TreePtr contree(ct);
    LabellingPtr contree_lab(cf);
    write_tree_file(opt, "contree.tree", contree.get());
    write_labelling_file(opt, "contree.lab", contree_lab.get());
    say(opt, "projection written: contree.tree contree.lab");
    return kExitOk;
  }
  throw InputError("unknown transform: " + op);
}

// ---- search -------------------------------------------------------------------

int run_search(const Options& opt, const std::string& kind, int n, int n_max,
               const std::string& family, const std::string& tree_path) {
  gt_report* raw = nullptr;
  if (kind == "enumerate") {
    if (n <= 0) throw InputError("enumerate needs --n");
    check(gt_search_enumerate(n, family.empty() ? "all" : family.c_str(), opt.max_n, &raw));
  } else if (kind == "hunt-perms") {
    if (n <= 0) throw InputError("hunt-perms needs --n");
    TreePtr tree;
    if (!tree_path.empty()) tree = load_tree(tree_path);
    check(gt_hunt_generalized_perms(n, tree ? "single" : "family", tree.get(), opt.workers,
                                    opt.max_n, &raw));
  } else if (kind == "explore-case2b") {
    if (n_max <= 0) throw InputError("explore-case2b needs --n-max");
    check(gt_explore_case2b(n_max, opt.workers, opt.max_n, &raw));
  } else if (kind == "verify-lemma2") {
    if (n_max <= 0) throw InputError("verify-lemma2 needs --n-max");
    check(gt_verify_lemma2(n_max, opt.workers, opt.max_n, &raw));
  } else {
    throw InputError("unknown search kind: " + kind);
  }
  ReportPtr report(raw);

  char* text = nullptr;
  check(gt_report_text(report.get(), &text));
  std::string text_doc = take_string(text);
  char* json = nullptr;
  check(gt_report_json(report.get(), &json));
  std::string json_doc = take_string(json);

  write_file(out_path(opt, kind + ".txt"), text_doc);
  write_file(out_path(opt, kind + ".json"), json_doc);
  if (!opt.quiet) std::cout << text_doc;
  return kExitOk;
}

// ---- export-dot -----------------------------------------------------------------

int run_export_dot(const Options& opt, const std::string& tree_path, const std::string& lab_path,
                   const std::string& matching_path) {
  auto tree = load_tree(tree_path);
  LabellingPtr lab;
  if (!lab_path.empty()) lab = load_labelling(lab_path);
  MatchingPtr matching;
  if (!matching_path.empty()) matching = load_matching(matching_path);
  char* text = nullptr;
  check(gt_export_dot(tree.get(), lab.get(), matching.get(), &text));
  std::string doc = take_string(text);
  if (opt.out_dir.empty()) {
    std::cout << doc;
  } else {
    write_file(out_path(opt, "tree.dot"), doc);
    say(opt, "dot written: tree.dot");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graceful and strongly graceful tree labellings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gt_version()));

  Options opt;
  app.add_flag("--quiet", opt.quiet, "suppress progress output");
  app.add_option("--out", opt.out_dir, "directory for output files (default: current)");
  app.add_option("--workers", opt.workers, "worker threads for searches (default: all cores)");
  app.add_option("--max-n", opt.max_n, "override the built-in size caps");

  std::string tree_path, lab_path, matching_path, transform_op;
  bool strong = false;

  auto* verify = app.add_subcommand("verify", "check a labelling against a tree");
  verify->add_option("tree", tree_path, "tree file")->required();
  verify->add_option("labelling", lab_path, "labelling file")->required();
  verify->add_option("matching", matching_path, "matching file");
  verify->add_flag("--strong", strong, "require matched pairs to sum to n-1");

  auto* label = app.add_subcommand("label", "construct a strongly graceful quad");
  label->add_option("tree", tree_path, "tree file")->required();

  auto* transform = app.add_subcommand("transform", "spike, contract, lift, or project");
  transform->add_option("op", transform_op, "spike | contract | lift | project")->required();
  transform->add_option("tree", tree_path, "tree file")->required();
  transform->add_option("--matching", matching_path, "matching file");
  transform->add_option("--labelling", lab_path, "labelling file");

  std::string search_kind, search_family;
  int search_n = 0, search_n_max = 0;
  auto* search = app.add_subcommand("search", "run a search harness and write its report");
  search->add_option("kind", search_kind,
                     "enumerate | hunt-perms | explore-case2b | verify-lemma2")
      ->required();
  search->add_option("--n", search_n, "exact vertex count");
  search->add_option("--n-max", search_n_max, "largest vertex count to sweep");
  search->add_option("--family", search_family,
                     "all | any-pm | end-edge-pm | lobster-end-edge-pm | "
                     "three-distant-end-edge-pm");
  search->add_option("--tree", tree_path, "restrict hunt-perms to one tree file");

  auto* export_dot = app.add_subcommand("export-dot", "render a tree as graphviz");
  export_dot->add_option("tree", tree_path, "tree file")->required();
  export_dot->add_option("--labelling", lab_path, "labelling file");
  export_dot->add_option("--matching", matching_path, "matching file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (verify->parsed())
      return run_verify(opt, tree_path, lab_path, matching_path, strong);
    if (label->parsed()) return run_label(opt, tree_path);
    if (transform->parsed())
      return run_transform(opt, transform_op, tree_path, matching_path, lab_path);
    if (search->parsed())
      return run_search(opt, search_kind, search_n, search_n_max, search_family, tree_path);
    if (export_dot->parsed())
      return run_export_dot(opt, tree_path, lab_path, matching_path);
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.status);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitInput;
}
