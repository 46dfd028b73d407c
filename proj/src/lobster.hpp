#pragma once

#include <utility>
#include <vector>

#include "labelling.hpp"
#include "tree.hpp"

namespace gt {

/// Validates the structure the inductive construction leans on and returns
/// the pendant partner of each interior spine vertex as (spine index,
/// partner vertex):
///  - both outer spine edges belong to the matching,
///  - the second and second-to-last spine vertices have degree 2,
///  - every interior spine vertex is matched to an off-spine leaf.
std::vector<std::pair<int, int>> spine_pendant_partners(const Tree& t, const Spine& s,
                                                        const Matching& m);

enum class StripCase {
  Case1,  // third spine vertex keeps extra branches; new spine enters through one
  Case2,  // third spine vertex keeps only its pendant; the pendant heads the new spine
};

struct StripResult {
  Tree tree;                     // both ends of the first spine edge removed
  Matching matching;             // surviving pairs, renumbered
  std::vector<int> spine;        // new spine in new ids
  StripCase tag;
  std::vector<int> old_to_new;   // -1 for the two removed vertices
  std::vector<int> new_to_old;
};

/// Removes the first two spine vertices and rebuilds a valid spine for the
/// remainder. The input spine's cover radius carries over.
StripResult strip_step(const Tree& t, const Spine& s, const Matching& m);

struct LobsterQuadDiag {
  bool used_reversed_spine = false;
  int levels = 0;
};

/// Constructive strongly graceful quad for a tree within distance two of a
/// path whose end edges form a perfect matching. The quad is anchored on
/// the first three spine vertices and the partner of the third. Every
/// recursion level re-verifies its own output.
StrongQuad lobster_quad(const Tree& t, LobsterQuadDiag* diag = nullptr);

}  // namespace gt
