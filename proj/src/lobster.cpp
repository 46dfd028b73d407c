#include "lobster.hpp"

#include <algorithm>

#include "error.hpp"

namespace gt {

std::vector<std::pair<int, int>> spine_pendant_partners(const Tree& t, const Spine& s,
                                                        const Matching& m) {
  validate_spine(t, s);
  require_perfect(t, m);
  const auto& sp = s.vertices;
  int p = static_cast<int>(sp.size()) - 1;
  if (p < 3) fail(Errc::Domain, "spine too short, need at least four vertices on it");
  auto partner = partner_map(m, t.n);
  if (partner[sp[0]] != sp[1]) fail(Errc::Domain, "first spine edge is not matched");
  if (partner[sp[p]] != sp[p - 1]) fail(Errc::Domain, "last spine edge is not matched");
  if (t.degree(sp[1]) != 2)
    fail(Errc::Domain, "second spine vertex " + std::to_string(sp[1]) + " must have degree 2");
  if (t.degree(sp[p - 1]) != 2)
    fail(Errc::Domain,
         "second-to-last spine vertex " + std::to_string(sp[p - 1]) + " must have degree 2");
  std::vector<char> on_spine(t.n, 0);
  for (int v : sp) on_spine[v] = 1;
  std::vector<std::pair<int, int>> out;
  for (int i = 2; i <= p - 2; ++i) {
    int u = partner[sp[i]];
    if (u < 0 || on_spine[u] || t.degree(u) != 1)
      fail(Errc::Domain, "spine vertex " + std::to_string(sp[i]) +
                             " is not matched to an off-spine leaf");
    out.push_back({i, u});
  }
  return out;
}

StripResult strip_step(const Tree& t, const Spine& s, const Matching& m) {
  if (t.n < 6) fail(Errc::Invalid, "nothing to strip below six vertices");
  spine_pendant_partners(t, s, m);  // also validates spine and matching
  const auto& sp = s.vertices;
  int v0 = sp[0], v1 = sp[1], v2 = sp[2];
  auto partner = partner_map(m, t.n);
  int u2 = partner[v2];

  StripResult out;
  out.old_to_new.assign(t.n, -1);
  for (int v = 0; v < t.n; ++v) {
    if (v == v0 || v == v1) continue;
    out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : t.edges) {
    if (a == v0 || a == v1 || b == v0 || b == v1) continue;
    edges.push_back({out.old_to_new[a], out.old_to_new[b]});
  }
  out.tree = Tree::from_edges(t.n - 2, std::move(edges));
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : m.pairs) {
    if (a == v0 || b == v0) continue;  // exactly the first spine edge
    pairs.push_back({out.old_to_new[a], out.old_to_new[b]});
  }
  out.matching = Matching::from_pairs(std::move(pairs));

  std::vector<int> new_spine;
  if (t.degree(v2) - 1 >= 3) {
    out.tag = StripCase::Case1;
    // the extra branches at v2 must each be a matched two-edge limb;
    // the smallest branch root becomes the new spine head
    int x = -1, y = -1;
    for (int w : t.adj[v2]) {
      if (w == v1 || w == sp[3] || w == u2) continue;
      if (t.degree(w) != 2)
        fail(Errc::Domain, "branch " + std::to_string(w) + " at the third spine vertex is not a two-edge limb");
      int leaf = t.adj[w][0] == v2 ? t.adj[w][1] : t.adj[w][0];
      if (t.degree(leaf) != 1 || !m.contains(w, leaf))
        fail(Errc::Domain, "branch " + std::to_string(w) + " is not closed by a matched leaf");
      if (x < 0) {
        x = w;  // adjacency is sorted, first eligible is smallest
        y = leaf;
      }
    }
    if (x < 0) fail(Errc::Internal, "branching spine vertex lost its branches");
    new_spine.push_back(out.old_to_new[y]);
    new_spine.push_back(out.old_to_new[x]);
    new_spine.push_back(out.old_to_new[v2]);
  } else {
    out.tag = StripCase::Case2;
    new_spine.push_back(out.old_to_new[u2]);
    new_spine.push_back(out.old_to_new[v2]);
  }
  for (size_t i = 3; i < sp.size(); ++i) new_spine.push_back(out.old_to_new[sp[i]]);
  out.spine = std::move(new_spine);

  try {
    validate_spine(out.tree, Spine{out.spine, s.k});
  } catch (const Error& e) {
    fail(Errc::Domain,
         std::string("stripped tree has no valid spine continuation: ") + e.what());
  }
  return out;
}

namespace {

Labelling build_level(const Tree& t, const Spine& s, const Matching& m, int level, int* depth_out) {
  if (depth_out) *depth_out = std::max(*depth_out, level + 1);
  if (t.n == 4) {
    spine_pendant_partners(t, s, m);
    std::vector<int> values(4);
    values[s.vertices[0]] = 0;
    values[s.vertices[1]] = 3;
    values[s.vertices[2]] = 1;
    values[s.vertices[3]] = 2;
    auto f = Labelling::from_values(std::move(values));
    if (auto bad = strong_violation(t, m, f))
      fail(Errc::Internal, "base labelling failed verification: " + *bad);
    return f;
  }

  auto strip = strip_step(t, s, m);
  Labelling sub = build_level(strip.tree, Spine{strip.spine, s.k}, strip.matching, level + 1, depth_out);
  int nn = strip.tree.n;
  Labelling h =
      apply_perm(strip.tag == StripCase::Case1 ? perm_g1(nn) : perm_r(nn), sub);
  int v2 = s.vertices[2];
  if (h.values[strip.old_to_new[v2]] != 0)
    fail(Errc::Internal, "level " + std::to_string(level) +
                             ": rotated sublabelling does not vanish at the third spine vertex");

  std::vector<int> values(t.n);
  values[s.vertices[0]] = 0;
  values[s.vertices[1]] = t.n - 1;
  for (int nv = 0; nv < nn; ++nv) values[strip.new_to_old[nv]] = h.values[nv] + 1;
  auto f = Labelling::from_values(std::move(values));
  if (auto bad = strong_violation(t, m, f))
    fail(Errc::Internal, "level " + std::to_string(level) + " verification failed: " + *bad);
  int u2 = partner_map(m, t.n)[v2];
  if (f.values[v2] != 1 || f.values[u2] != t.n - 2)
    fail(Errc::Internal,
         "level " + std::to_string(level) + ": third spine vertex pair mislabelled");
  return f;
}

}  // namespace

StrongQuad lobster_quad(const Tree& t, LobsterQuadDiag* diag) {
  if (t.n < 4 || t.n % 2 != 0)
    fail(Errc::Domain, "need an even vertex count of at least four, got " + std::to_string(t.n));
  auto m = end_edge_perfect_matching(t);
  if (!m) fail(Errc::Domain, "end edges do not form a perfect matching");
  if (!is_k_distant(t, 2))
    fail(Errc::Domain, "tree is not within distance two of a path");
  auto spine = make_spine(t, 2);
  if (!spine)
    fail(Errc::Domain, "no maximum-length path covers the tree within distance two");

  LobsterQuadDiag local;
  LobsterQuadDiag* d = diag ? diag : &local;
  d->used_reversed_spine = false;
  d->levels = 0;

  Labelling f;
  try {
    f = build_level(t, *spine, *m, 0, &d->levels);
  } catch (const Error& first) {
    // same path walked from the other end; the structure is symmetric,
    // so a failure on one orientation gets a second chance
    std::vector<int> rev(spine->vertices.rbegin(), spine->vertices.rend());
    d->levels = 0;
    try {
      f = build_level(t, Spine{rev, spine->k}, *m, 0, &d->levels);
      d->used_reversed_spine = true;
    } catch (const Error&) {
      throw first;
    }
  }
  return anchored_quad_from(f, t, *m);  // re-verifies all four members
}

}  // namespace gt
