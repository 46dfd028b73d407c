#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tree.hpp"

namespace gt {

/// Bijection from vertices 0..n-1 onto labels 0..n-1, stored by vertex.
struct Labelling {
  std::vector<int> values;

  static Labelling from_values(std::vector<int> values);
  int n() const { return static_cast<int>(values.size()); }

  bool operator==(const Labelling&) const = default;
  bool operator<(const Labelling& o) const { return values < o.values; }
};

int edge_label(const Labelling& f, int u, int v);

/// Every edge difference distinct, hence exactly 1..n-1.
bool is_graceful(const Tree& t, const Labelling& f);
/// Empty when graceful, otherwise a one-line reason.
std::optional<std::string> graceful_violation(const Tree& t, const Labelling& f);

/// Graceful and every matched pair sums to n-1. m must be a perfect
/// matching inside t.
bool is_strongly_graceful(const Tree& t, const Matching& m, const Labelling& f);
std::optional<std::string> strong_violation(const Tree& t, const Matching& m, const Labelling& f);

/// Bijection on labels 0..n-1, stored as mapping[label] = image.
struct LabelPermutation {
  std::vector<int> mapping;

  static LabelPermutation from_mapping(std::vector<int> mapping);
  int n() const { return static_cast<int>(mapping.size()); }
  int operator()(int x) const { return mapping[x]; }

  bool operator==(const LabelPermutation&) const = default;
  bool operator<(const LabelPermutation& o) const { return mapping < o.mapping; }
};

LabelPermutation perm_identity(int n);
/// b -> n-1-b.
LabelPermutation perm_r(int n);
/// Swaps each even b with b+1. Even n only.
LabelPermutation perm_g1(int n);
/// r and g1 composed, in either order. Even n only.
LabelPermutation perm_g2(int n);

/// compose(a, b) applies b first: x -> a(b(x)).
LabelPermutation compose(const LabelPermutation& a, const LabelPermutation& b);
Labelling apply_perm(const LabelPermutation& g, const Labelling& f);

/// Disjoint cycle notation, fixed points as singletons, cycles ordered by
/// minimum element: "(0 1)(2 3)".
std::string cycle_notation(const LabelPermutation& g);

/// Does g map this particular graceful labelling to a graceful one?
/// f must be graceful on t.
bool is_graceful_perm(const Tree& t, const Labelling& f, const LabelPermutation& g);

/// Does g map every strongly graceful labelling of (t, m) to a strongly
/// graceful one? all_f must be the complete list; it must not be empty.
bool is_generalized_strong_perm(const Tree& t, const Matching& m, const LabelPermutation& g,
                                std::span<const Labelling> all_f);

/// The path carrying labels 0, n-1, 1, n-2 in order, with both outer edges
/// matched.
struct AnchorPath {
  int v0, v1, v2, v3;
};

struct AnchorExtract {
  std::optional<AnchorPath> path;
  // when the path is absent, the vertices labelled 0 and n-2 are adjacent
  bool zero_adjacent_nminus2 = false;
};

/// Locates the anchor path of a strongly graceful labelling, or reports the
/// alternative adjacency. Requires n >= 4 and f strongly graceful.
AnchorExtract extract_anchor_path(const Tree& t, const Matching& m, const Labelling& f);

/// A strongly graceful labelling together with its three images under r,
/// g1, g2. The anchors hold the zero position of each member in turn:
/// f(a0) = 0, f1(a1) = 0, f2(a2) = 0, f3(a3) = 0, where a2 a3 is a matched
/// edge.
struct StrongQuad {
  Labelling f, f1, f2, f3;
  std::array<int, 4> anchors;
};

/// Builds and fully verifies the quad seeded by f, anchored on its anchor
/// path. Fails if the anchor path is absent.
StrongQuad anchored_quad_from(const Labelling& f, const Tree& t, const Matching& m);

}  // namespace gt
