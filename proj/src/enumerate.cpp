#include "enumerate.hpp"

#include <algorithm>

#include "error.hpp"

namespace gt {

namespace {

// Level sequences: entry i is the depth of vertex i in preorder, sequence
// starts with the root at depth 0. The rooted successor rewrites the suffix
// from position p with copies of the segment starting at the nearest
// shallower position. Passing p < 0 selects the last entry deeper than 1.
bool next_rooted(std::vector<int>& layout, int p) {
  int n = static_cast<int>(layout.size());
  if (p < 0) {
    p = n - 1;
    while (p >= 0 && layout[p] == 1) --p;
  }
  if (p <= 0) return false;
  int q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (int i = p; i < n; ++i) layout[i] = layout[i - (p - q)];
  return true;
}

void split_layout(const std::vector<int>& layout, std::vector<int>& left,
                  std::vector<int>& rest) {
  int m = -1;
  bool one_found = false;
  for (size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = static_cast<int>(i);
        break;
      }
      one_found = true;
    }
  }
  if (m < 0) m = static_cast<int>(layout.size());
  left.clear();
  rest.clear();
  for (int i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  rest.push_back(0);
  for (size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// A rooted sequence represents a free tree exactly when the subtree under
// the first child is no taller than the remainder, with ties broken by
// size and then lexicographic order.
bool is_free_canonical(const std::vector<int>& layout) {
  std::vector<int> left, rest;
  split_layout(layout, left, rest);
  if (left.empty()) return layout.size() <= 1;
  int lh = *std::max_element(left.begin(), left.end());
  int rh = *std::max_element(rest.begin(), rest.end());
  if (rh < lh) return false;
  if (rh == lh) {
    if (left.size() > rest.size()) return false;
    if (left.size() == rest.size() && left > rest) return false;
  }
  return true;
}

// Skip ahead from an invalid candidate: decrement at the first-child
// boundary and refill the tail with the deepest shape the new left subtree
// allows.
bool jump_past_invalid(std::vector<int>& layout) {
  std::vector<int> left, rest;
  split_layout(layout, left, rest);
  int p = static_cast<int>(left.size());
  int old_at_p = layout[p];
  if (!next_rooted(layout, p)) return false;
  if (old_at_p > 2) {
    split_layout(layout, left, rest);
    int lh = left.empty() ? 0 : *std::max_element(left.begin(), left.end());
    int len = lh + 1;  // suffix 1..lh+1
    int start = static_cast<int>(layout.size()) - len;
    for (int i = 0; i < len; ++i) layout[start + i] = i + 1;
  }
  return true;
}

Tree layout_to_tree(const std::vector<int>& layout) {
  int n = static_cast<int>(layout.size());
  std::vector<int> last_at_depth(n + 1, -1);
  last_at_depth[0] = 0;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    edges.push_back({last_at_depth[layout[i] - 1], i});
    last_at_depth[layout[i]] = i;
  }
  return Tree::from_edges(n, std::move(edges));
}

}  // namespace

FreeTreeGen::FreeTreeGen(int n) : n_(n) {
  if (n_ < 1) fail(Errc::Invalid, "vertex count must be positive");
  if (n_ == 1) return;
  layout_.resize(n_);
  int half = n_ / 2;
  for (int i = 0; i <= half; ++i) layout_[i] = i;
  for (int i = 1; i < (n_ + 1) / 2; ++i) layout_[half + i] = i;
}

std::optional<Tree> FreeTreeGen::next() {
  if (exhausted_) return std::nullopt;
  if (n_ == 1) {
    exhausted_ = true;
    return Tree::from_edges(1, {});
  }
  while (true) {
    if (is_free_canonical(layout_)) {
      Tree t = layout_to_tree(layout_);
      if (!next_rooted(layout_, -1)) exhausted_ = true;
      return t;
    }
    if (!jump_past_invalid(layout_)) {
      exhausted_ = true;
      return std::nullopt;
    }
  }
}

std::vector<Tree> enumerate_free_trees(int n, const SearchLimits& limits) {
  if (n > limits.max_enumerate_n)
    fail(Errc::Limit, "enumeration capped at " + std::to_string(limits.max_enumerate_n) +
                          " vertices, asked for " + std::to_string(n));
  FreeTreeGen gen(n);
  std::vector<Tree> out;
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

Family family_from_name(const std::string& name) {
  if (name == "any-pm") return Family::AnyPerfectMatching;
  if (name == "end-edge-pm") return Family::EndEdgePerfectMatching;
  if (name == "lobster-end-edge-pm") return Family::LobsterEndEdge;
  if (name == "three-distant-end-edge-pm") return Family::ThreeDistantEndEdge;
  fail(Errc::Invalid, "unknown family '" + name + "'");
}

std::string family_name(Family fam) {
  switch (fam) {
    case Family::AnyPerfectMatching: return "any-pm";
    case Family::EndEdgePerfectMatching: return "end-edge-pm";
    case Family::LobsterEndEdge: return "lobster-end-edge-pm";
    case Family::ThreeDistantEndEdge: return "three-distant-end-edge-pm";
  }
  fail(Errc::Internal, "unhandled family");
}

std::vector<FamilyInstance> enumerate_family(int n, Family fam, const SearchLimits& limits) {
  if (n < 2 || n % 2 != 0)
    fail(Errc::Invalid, "matched families exist on even vertex counts only");
  if (n > limits.max_enumerate_n)
    fail(Errc::Limit, "enumeration capped at " + std::to_string(limits.max_enumerate_n) +
                          " vertices, asked for " + std::to_string(n));
  std::vector<FamilyInstance> out;
  FreeTreeGen gen(n);
  while (auto t = gen.next()) {
    std::optional<Matching> m;
    switch (fam) {
      case Family::AnyPerfectMatching:
        m = unique_perfect_matching(*t);
        break;
      case Family::EndEdgePerfectMatching:
        m = end_edge_perfect_matching(*t);
        break;
      case Family::LobsterEndEdge:
        m = end_edge_perfect_matching(*t);
        if (m && !is_k_distant(*t, 2)) m.reset();
        break;
      case Family::ThreeDistantEndEdge:
        m = end_edge_perfect_matching(*t);
        if (m && !is_k_distant(*t, 3)) m.reset();
        break;
    }
    if (m) out.push_back({std::move(*t), std::move(*m)});
  }
  return out;
}

}  // namespace gt
