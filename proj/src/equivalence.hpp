#pragma once

#include "labelling.hpp"
#include "tree.hpp"

namespace gt {

struct LiftResult {
  Tree tree;
  Matching matching;
  Labelling labelling;
};

/// Turns a graceful labelling of t into a strongly graceful labelling of
/// the tree with a pendant attached to every vertex: the pendant of v gets
/// 2 f(v), v itself the complementary 2n-1-2f(v).
LiftResult lift_to_spike(const Tree& t, const Labelling& f);

struct ProjectResult {
  Tree tree;
  Labelling labelling;
};

/// Contracts every matched edge of a strongly graceful labelling; each
/// contracted vertex inherits half the even label of its pair.
ProjectResult project_to_contree(const Tree& t, const Matching& m, const Labelling& g);

}  // namespace gt
