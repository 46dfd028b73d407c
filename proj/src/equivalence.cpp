#include "equivalence.hpp"

#include "error.hpp"

namespace gt {

LiftResult lift_to_spike(const Tree& t, const Labelling& f) {
  if (auto bad = graceful_violation(t, f))
    fail(Errc::Invalid, "labelling is not graceful: " + *bad);
  auto sp = spike(t);
  std::vector<int> values(2 * t.n);
  for (int v = 0; v < t.n; ++v) {
    values[sp.partner[v]] = 2 * f.values[v];
    values[v] = 2 * t.n - 1 - 2 * f.values[v];
  }
  Labelling g = Labelling::from_values(std::move(values));
  if (auto bad = strong_violation(sp.tree, sp.matching, g))
    fail(Errc::Internal, "lifted labelling failed verification: " + *bad);
  return {std::move(sp.tree), std::move(sp.matching), std::move(g)};
}

ProjectResult project_to_contree(const Tree& t, const Matching& m, const Labelling& g) {
  if (auto bad = strong_violation(t, m, g))
    fail(Errc::Invalid, "labelling is not strongly graceful: " + *bad);
  auto con = contract_matching(t, m);
  std::vector<int> values(t.n / 2, -1);
  for (auto [u, v] : m.pairs) {
    int a = g.values[u], b = g.values[v];
    int even = a % 2 == 0 ? a : b;
    if (a % 2 == b % 2)
      fail(Errc::Internal, "matched pair labels share parity, expected one even one odd");
    values[con.vertex_map[u]] = even / 2;
  }
  Labelling f = Labelling::from_values(std::move(values));
  if (auto bad = graceful_violation(con.tree, f))
    fail(Errc::Internal, "projected labelling failed verification: " + *bad);
  return {std::move(con.tree), std::move(f)};
}

}  // namespace gt
