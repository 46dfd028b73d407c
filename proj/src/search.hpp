#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "labelling.hpp"
#include "report.hpp"
#include "tree.hpp"

namespace gt {

enum class LabellingMode { Graceful, Strong };

/// Complete list of (strongly) graceful labellings, sorted by value vector.
/// Strong mode needs a perfect matching. With dedup_mod_group set, one
/// representative per orbit of {identity, r} (graceful) or
/// {identity, r, g1, g2} (strong) is kept.
std::vector<Labelling> brute_force_labellings(const Tree& t, LabellingMode mode,
                                              const Matching* m, bool dedup_mod_group,
                                              const SearchLimits& limits = {});

enum class CaseTag { Base, Case1, Case2a, Case2b };
std::string case_name(CaseTag tag);

/// Classifies the inductive strip situation of a tree whose end edges form
/// a perfect matching, relative to the given spine: the four-vertex base,
/// a branching third spine vertex (case1), or a bare one whose pendant
/// path stays maximal (case2a) or stops being maximal (case2b).
CaseTag classify_case(const Tree& t, const Spine& s);

enum class HuntScope { FamilyAll, SingleTree };

/// Scans permutations of 0..n-1 for ones that map every strongly graceful
/// labelling onto a strongly graceful labelling across the whole any-pm
/// family (or a single tree). Exhaustive up to the configured cap, a
/// structured candidate set beyond it (labelled in the report). Here and
/// below, workers <= 0 runs one thread per core.
SearchReport hunt_generalized_perms(int n, HuntScope scope, const Tree* single, int workers,
                                    const SearchLimits& limits = {});

/// Sweeps every case of the three-distant end-edge family up to n_max,
/// classifies each instance, and for the case2b ones brute-forces whether a
/// strongly graceful labelling anchored at the spine head exists.
SearchReport explore_case2b(int n_max, int workers, const SearchLimits& limits = {});

/// Sweeps every tree with a perfect matching up to n_max and checks, for
/// each strongly graceful labelling, whether the labels 0, n-1, 1, n-2 sit
/// on a matched path, exhibiting the labellings where they do not.
SearchReport sweep_anchor_paths(int n_max, int workers, const SearchLimits& limits = {});

/// Lists the members of a family (or all free trees) on n vertices.
SearchReport enumerate_report(int n, std::optional<Family> fam, const SearchLimits& limits = {});

}  // namespace gt
