#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tree.hpp"

namespace gt {

/// Streams every unlabelled tree on n vertices exactly once, in the
/// canonical level-sequence order of the Wright-Richmond-Odlyzko-McKay
/// generator. Vertex ids follow the preorder of the level sequence, so the
/// output is deterministic.
class FreeTreeGen {
 public:
  explicit FreeTreeGen(int n);
  std::optional<Tree> next();

 private:
  int n_;
  bool exhausted_ = false;
  std::vector<int> layout_;
};

struct SearchLimits {
  int max_enumerate_n = 18;
  int max_graceful_n = 14;
  int max_strong_n = 16;
  int max_hunt_exhaustive_n = 10;
  int max_hunt_n = 16;
  int max_case_explore_n = 16;
  int max_anchor_sweep_n = 14;
};

std::vector<Tree> enumerate_free_trees(int n, const SearchLimits& limits = {});

enum class Family {
  AnyPerfectMatching,
  EndEdgePerfectMatching,
  LobsterEndEdge,       // within distance 2 of a path
  ThreeDistantEndEdge,  // within distance 3 of a path
};

Family family_from_name(const std::string& name);
std::string family_name(Family fam);

struct FamilyInstance {
  Tree tree;
  Matching matching;
};

/// All members of the family on exactly n vertices, in generator order.
std::vector<FamilyInstance> enumerate_family(int n, Family fam,
                                             const SearchLimits& limits = {});

}  // namespace gt
