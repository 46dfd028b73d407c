#include "formats.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "error.hpp"

namespace gt {

namespace {

// Strips comments and line endings, splits into whitespace tokens per line.
std::vector<std::vector<long>> token_lines(const std::string& text) {
  std::vector<std::vector<long>> lines;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::istringstream ls(line);
    std::vector<long> nums;
    std::string tok;
    while (ls >> tok) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        // non-numeric tokens are only legal as format headers; give them back raw
        if (tok == "M" || tok == "L") {
          nums.push_back(tok == "M" ? -1000 : -2000);  // sentinel header marks
          continue;
        }
        fail(Errc::Parse, "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      }
      nums.push_back(value);
    }
    if (!nums.empty()) lines.push_back(std::move(nums));
  }
  return lines;
}

constexpr long kHeaderM = -1000;
constexpr long kHeaderL = -2000;

}  // namespace

Tree parse_tree(const std::string& text) {
  auto lines = token_lines(text);
  if (lines.empty()) fail(Errc::Parse, "empty tree document");
  if (lines[0].size() != 1 || lines[0][0] < 1)
    fail(Errc::Parse, "first line must be a positive vertex count");
  long n = lines[0][0];
  if (n > 1000000) fail(Errc::Parse, "vertex count too large");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) fail(Errc::Parse, "edge lines must hold exactly two vertex ids");
    long u = lines[i][0], v = lines[i][1];
    if (u < 0 || v < 0) fail(Errc::Parse, "negative vertex id");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  try {
    return Tree::from_edges(static_cast<int>(n), std::move(edges));
  } catch (const Error& e) {
    fail(Errc::Parse, std::string("invalid tree: ") + e.what());
  }
}

std::string tree_text(const Tree& t) {
  std::string out = std::to_string(t.n) + "\n";
  for (auto [u, v] : t.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Matching parse_matching(const std::string& text) {
  auto lines = token_lines(text);
  if (lines.empty()) fail(Errc::Parse, "empty matching document");
  // header: "M <count>" on one line, or "M" followed by the count
  std::vector<long> flat;
  for (auto& l : lines)
    for (long x : l) flat.push_back(x);
  if (flat.empty() || flat[0] != kHeaderM) fail(Errc::Parse, "matching document must start with M");
  if (flat.size() < 2 || flat[1] < 0) fail(Errc::Parse, "matching header must give a pair count");
  size_t count = static_cast<size_t>(flat[1]);
  if (flat.size() != 2 + 2 * count)
    fail(Errc::Parse, "expected " + std::to_string(count) + " pairs after the header");
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < count; ++i) {
    long u = flat[2 + 2 * i], v = flat[3 + 2 * i];
    if (u < 0 || v < 0) fail(Errc::Parse, "negative vertex id in matching");
    pairs.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  try {
    return Matching::from_pairs(std::move(pairs));
  } catch (const Error& e) {
    fail(Errc::Parse, std::string("invalid matching: ") + e.what());
  }
}

std::string matching_text(const Matching& m) {
  std::string out = "M " + std::to_string(m.size()) + "\n";
  for (auto [u, v] : m.pairs) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Labelling parse_labelling(const std::string& text) {
  auto lines = token_lines(text);
  if (lines.empty()) fail(Errc::Parse, "empty labelling document");
  if (lines[0].size() != 1 || lines[0][0] != kHeaderL)
    fail(Errc::Parse, "labelling document must start with L");
  std::vector<std::pair<long, long>> rows;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) fail(Errc::Parse, "labelling lines must hold vertex and label");
    rows.push_back({lines[i][0], lines[i][1]});
  }
  if (rows.empty()) fail(Errc::Parse, "labelling has no rows");
  size_t n = rows.size();
  std::vector<int> values(n, -1);
  for (auto [v, lab] : rows) {
    if (v < 0 || v >= static_cast<long>(n))
      fail(Errc::Parse, "vertex id " + std::to_string(v) + " out of range for " +
                            std::to_string(n) + " rows");
    if (lab < 0 || lab >= static_cast<long>(n))
      fail(Errc::Parse, "label " + std::to_string(lab) + " out of range");
    if (values[v] != -1) fail(Errc::Parse, "vertex " + std::to_string(v) + " labelled twice");
    values[v] = static_cast<int>(lab);
  }
  try {
    return Labelling::from_values(std::move(values));
  } catch (const Error& e) {
    fail(Errc::Parse, std::string("invalid labelling: ") + e.what());
  }
}

std::string labelling_text(const Labelling& f) {
  std::string out = "L\n";
  for (int v = 0; v < f.n(); ++v) out += std::to_string(v) + " " + std::to_string(f.values[v]) + "\n";
  return out;
}

std::string export_dot(const Tree& t, const Labelling* f, const Matching* m) {
  if (f && f->n() != t.n) fail(Errc::Invalid, "labelling size does not match tree");
  if (m) require_edges_of(t, *m);
  std::string out = "graph T {\n  node [shape=circle];\n";
  for (int v = 0; v < t.n; ++v) {
    out += "  " + std::to_string(v) + " [label=\"" +
           std::to_string(f ? f->values[v] : v) + "\"];\n";
  }
  for (auto [u, v] : t.edges) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v);
    std::string attrs;
    if (f) attrs += "label=\"" + std::to_string(std::abs(f->values[u] - f->values[v])) + "\"";
    if (m && m->contains(u, v)) {
      if (!attrs.empty()) attrs += ", ";
      attrs += "style=bold";
    }
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace gt
