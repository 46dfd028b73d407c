#include "labelling.hpp"

#include <algorithm>
#include <cstdlib>

#include "error.hpp"

namespace gt {

Labelling Labelling::from_values(std::vector<int> values) {
  int n = static_cast<int>(values.size());
  if (n < 1) fail(Errc::Invalid, "labelling needs at least one vertex");
  std::vector<char> seen(n, 0);
  for (int x : values) {
    if (x < 0 || x >= n) fail(Errc::Invalid, "label " + std::to_string(x) + " out of range");
    if (seen[x]) fail(Errc::Invalid, "label " + std::to_string(x) + " used twice");
    seen[x] = 1;
  }
  Labelling f;
  f.values = std::move(values);
  return f;
}

int edge_label(const Labelling& f, int u, int v) {
  if (u < 0 || v < 0 || u >= f.n() || v >= f.n())
    fail(Errc::Invalid, "vertex out of range for edge label");
  return std::abs(f.values[u] - f.values[v]);
}

std::optional<std::string> graceful_violation(const Tree& t, const Labelling& f) {
  if (f.n() != t.n) fail(Errc::Invalid, "labelling size does not match tree");
  std::vector<char> used(t.n, 0);
  for (auto [u, v] : t.edges) {
    int d = std::abs(f.values[u] - f.values[v]);
    if (used[d])
      return "duplicate edge label " + std::to_string(d) + " at edge " + std::to_string(u) +
             " " + std::to_string(v);
    used[d] = 1;
  }
  return std::nullopt;  // n-1 distinct nonzero differences fill 1..n-1
}

bool is_graceful(const Tree& t, const Labelling& f) { return !graceful_violation(t, f); }

std::optional<std::string> strong_violation(const Tree& t, const Matching& m,
                                            const Labelling& f) {
  require_perfect(t, m);
  if (auto bad = graceful_violation(t, f)) return bad;
  for (auto [u, v] : m.pairs) {
    int s = f.values[u] + f.values[v];
    if (s != t.n - 1)
      return "matched pair " + std::to_string(u) + " " + std::to_string(v) + " sums to " +
             std::to_string(s) + ", expected " + std::to_string(t.n - 1);
  }
  return std::nullopt;
}

bool is_strongly_graceful(const Tree& t, const Matching& m, const Labelling& f) {
  return !strong_violation(t, m, f);
}

LabelPermutation LabelPermutation::from_mapping(std::vector<int> mapping) {
  int n = static_cast<int>(mapping.size());
  if (n < 1) fail(Errc::Invalid, "permutation needs at least one point");
  std::vector<char> seen(n, 0);
  for (int x : mapping) {
    if (x < 0 || x >= n) fail(Errc::Invalid, "permutation image out of range");
    if (seen[x]) fail(Errc::Invalid, "permutation image repeated");
    seen[x] = 1;
  }
  LabelPermutation g;
  g.mapping = std::move(mapping);
  return g;
}

LabelPermutation perm_identity(int n) {
  if (n < 1) fail(Errc::Invalid, "permutation needs at least one point");
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  LabelPermutation g;
  g.mapping = std::move(m);
  return g;
}

LabelPermutation perm_r(int n) {
  if (n < 1) fail(Errc::Invalid, "permutation needs at least one point");
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = n - 1 - i;
  LabelPermutation g;
  g.mapping = std::move(m);
  return g;
}

LabelPermutation perm_g1(int n) {
  if (n < 2 || n % 2 != 0) fail(Errc::Invalid, "g1 needs an even point count");
  std::vector<int> m(n);
  for (int i = 0; i < n; i += 2) {
    m[i] = i + 1;
    m[i + 1] = i;
  }
  LabelPermutation g;
  g.mapping = std::move(m);
  return g;
}

LabelPermutation perm_g2(int n) {
  if (n < 2 || n % 2 != 0) fail(Errc::Invalid, "g2 needs an even point count");
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = (i % 2 == 0) ? n - 2 - i : n - i;
  LabelPermutation g;
  g.mapping = std::move(m);
  return g;
}

LabelPermutation compose(const LabelPermutation& a, const LabelPermutation& b) {
  if (a.n() != b.n()) fail(Errc::Invalid, "composing permutations of different sizes");
  std::vector<int> m(a.n());
  for (int i = 0; i < a.n(); ++i) m[i] = a.mapping[b.mapping[i]];
  LabelPermutation g;
  g.mapping = std::move(m);
  return g;
}

Labelling apply_perm(const LabelPermutation& g, const Labelling& f) {
  if (g.n() != f.n()) fail(Errc::Invalid, "permutation size does not match labelling");
  Labelling out;
  out.values.resize(f.n());
  for (int v = 0; v < f.n(); ++v) out.values[v] = g.mapping[f.values[v]];
  return out;
}

std::string cycle_notation(const LabelPermutation& g) {
  std::string out;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    out += '(';
    int x = s;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x);
      seen[x] = 1;
      x = g.mapping[x];
      first = false;
    } while (x != s);
    out += ')';
  }
  return out;
}

bool is_graceful_perm(const Tree& t, const Labelling& f, const LabelPermutation& g) {
  if (auto bad = graceful_violation(t, f))
    fail(Errc::Invalid, "labelling is not graceful: " + *bad);
  if (g.n() != t.n) fail(Errc::Invalid, "permutation size does not match tree");
  return is_graceful(t, apply_perm(g, f));
}

bool is_generalized_strong_perm(const Tree& t, const Matching& m, const LabelPermutation& g,
                                std::span<const Labelling> all_f) {
  require_perfect(t, m);
  if (all_f.empty())
    fail(Errc::Invalid, "no strongly graceful labellings supplied; the question is vacuous");
  for (const auto& f : all_f)
    if (!is_strongly_graceful(t, m, apply_perm(g, f))) return false;
  return true;
}

AnchorExtract extract_anchor_path(const Tree& t, const Matching& m, const Labelling& f) {
  if (t.n < 4) fail(Errc::Invalid, "anchor path needs at least four vertices");
  if (auto bad = strong_violation(t, m, f))
    fail(Errc::Invalid, "labelling is not strongly graceful: " + *bad);
  std::vector<int> at(t.n);  // label -> vertex
  for (int v = 0; v < t.n; ++v) at[f.values[v]] = v;
  int v0 = at[0], v1 = at[t.n - 1], v2 = at[1], v3 = at[t.n - 2];
  AnchorExtract out;
  out.zero_adjacent_nminus2 = t.has_edge(v0, v3);
  if (t.has_edge(v0, v1) && t.has_edge(v1, v2) && t.has_edge(v2, v3) && m.contains(v0, v1) &&
      m.contains(v2, v3))
    out.path = AnchorPath{v0, v1, v2, v3};
  return out;
}

StrongQuad anchored_quad_from(const Labelling& f, const Tree& t, const Matching& m) {
  auto ex = extract_anchor_path(t, m, f);
  if (!ex.path)
    fail(Errc::Domain, "labelling has no anchor path; labels 0 and " + std::to_string(t.n - 2) +
                           " are adjacent instead");
  auto [v0, v1, v2, v3] = *ex.path;
  int n = t.n;
  StrongQuad q{f, apply_perm(perm_r(n), f), apply_perm(perm_g1(n), f),
               apply_perm(perm_g2(n), f), {v0, v1, v2, v3}};

  auto expect = [&](const Labelling& g, int v, int want, const char* who) {
    if (g.values[v] != want)
      fail(Errc::Internal, std::string(who) + " puts " + std::to_string(g.values[v]) +
                               " instead of " + std::to_string(want) + " on vertex " +
                               std::to_string(v));
  };
  // each member pins the four anchor labels in a rotated pattern
  expect(q.f, v0, 0, "f");
  expect(q.f, v1, n - 1, "f");
  expect(q.f, v2, 1, "f");
  expect(q.f, v3, n - 2, "f");
  expect(q.f1, v1, 0, "f1");
  expect(q.f1, v0, n - 1, "f1");
  expect(q.f1, v3, 1, "f1");
  expect(q.f1, v2, n - 2, "f1");
  expect(q.f2, v2, 0, "f2");
  expect(q.f2, v3, n - 1, "f2");
  expect(q.f2, v0, 1, "f2");
  expect(q.f2, v1, n - 2, "f2");
  expect(q.f3, v3, 0, "f3");
  expect(q.f3, v2, n - 1, "f3");
  expect(q.f3, v1, 1, "f3");
  expect(q.f3, v0, n - 2, "f3");
  for (const Labelling* g : {&q.f1, &q.f2, &q.f3})
    if (auto bad = strong_violation(t, m, *g))
      fail(Errc::Internal, "quad member not strongly graceful: " + *bad);
  return q;
}

}  // namespace gt
