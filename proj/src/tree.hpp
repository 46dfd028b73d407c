#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gt {

/// Connected acyclic simple graph on vertices 0..n-1.
struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj;       // sorted neighbour lists

  /// Validates and normalizes: ids in range, no loops or duplicates,
  /// exactly n-1 edges, connected.
  static Tree from_edges(int n, std::vector<std::pair<int, int>> raw);

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  int edge_index(int u, int v) const;  // -1 when absent
};

/// Vertex-disjoint set of unordered vertex pairs.
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // normalized u < v, sorted

  static Matching from_pairs(std::vector<std::pair<int, int>> raw);

  bool contains(int u, int v) const;
  int size() const { return static_cast<int>(pairs.size()); }
};

/// Maximal-length path plus the radius within which it covers the tree.
struct Spine {
  std::vector<int> vertices;
  int k = 0;
};

void require_edges_of(const Tree& t, const Matching& m);
bool is_perfect(const Tree& t, const Matching& m);
void require_perfect(const Tree& t, const Matching& m);

/// partner[v] = matched partner of v, or -1.
std::vector<int> partner_map(const Matching& m, int n);

std::vector<int> bfs_distances(const Tree& t, int source);
int diameter(const Tree& t);

/// Edges incident to at least one leaf.
std::vector<std::pair<int, int>> end_edges(const Tree& t);

/// The end edges, provided they form a perfect matching.
std::optional<Matching> end_edge_perfect_matching(const Tree& t);

/// The unique perfect matching when one exists, found greedily from the
/// leaves inward.
std::optional<Matching> unique_perfect_matching(const Tree& t);

/// Deterministic maximum-length path: among all candidates, the
/// lexicographically smallest vertex sequence once oriented so the first
/// vertex id is below the last.
std::vector<int> longest_path(const Tree& t);

/// A longest path covering every vertex within distance k, if any longest
/// path does. Candidates are scanned in the same canonical order as
/// longest_path, so the result is deterministic.
std::optional<Spine> make_spine(const Tree& t, int k);

/// True when some path covers the whole tree within distance k. Computed by
/// pruning leaves k times and checking what remains is a path (or empty).
bool is_k_distant(const Tree& t, int k);

bool path_covers_within(const Tree& t, const std::vector<int>& path, int k);

/// Checks vertices are distinct, consecutive ones adjacent, the length is
/// the diameter, and coverage holds within s.k.
void validate_spine(const Tree& t, const Spine& s);

struct SpikeResult {
  Tree tree;
  Matching matching;
  std::vector<int> partner;  // partner[v] = id of the pendant attached to v
};

/// Attach one pendant vertex to every vertex. Original ids are kept; the
/// pendant of v gets id n + v.
SpikeResult spike(const Tree& t);

struct ContractResult {
  Tree tree;
  std::vector<int> vertex_map;  // original vertex -> contracted vertex
};

/// Contract every matching edge. Pairs sorted by smaller endpoint receive
/// contracted ids 0..n/2-1 in order. The matching must be perfect and lie
/// inside the tree.
ContractResult contract_matching(const Tree& t, const Matching& m);

/// Isomorphism-invariant encoding: minimum rooted encoding over the one or
/// two centers. Equal strings exactly for isomorphic trees.
std::string canonical_form(const Tree& t);

}  // namespace gt
