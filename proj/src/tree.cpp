#include "tree.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "error.hpp"

namespace gt {

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> raw) {
  if (n < 1) fail(Errc::Invalid, "vertex count must be positive, got " + std::to_string(n));
  if (static_cast<int>(raw.size()) != n - 1)
    fail(Errc::Invalid, "expected " + std::to_string(n - 1) + " edges, got " +
                            std::to_string(raw.size()));
  for (auto& [u, v] : raw) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::Invalid, "vertex id out of range in edge " + std::to_string(u) + " " +
                              std::to_string(v));
    if (u == v) fail(Errc::Invalid, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(raw.begin(), raw.end());
  for (size_t i = 1; i < raw.size(); ++i)
    if (raw[i] == raw[i - 1])
      fail(Errc::Invalid, "duplicate edge " + std::to_string(raw[i].first) + " " +
                              std::to_string(raw[i].second));

  Tree t;
  t.n = n;
  t.edges = std::move(raw);
  t.adj.assign(n, {});
  for (auto [u, v] : t.edges) {
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
  }
  for (auto& a : t.adj) std::sort(a.begin(), a.end());

  // n-1 edges and no duplicates, so connectivity alone settles acyclicity
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  if (reached != n) fail(Errc::Invalid, "graph is not connected");
  return t;
}

bool Tree::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Tree::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

Matching Matching::from_pairs(std::vector<std::pair<int, int>> raw) {
  for (auto& [u, v] : raw) {
    if (u == v) fail(Errc::Invalid, "matching pair with equal endpoints " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(raw.begin(), raw.end());
  std::vector<int> touched;
  for (auto [u, v] : raw) {
    touched.push_back(u);
    touched.push_back(v);
  }
  std::sort(touched.begin(), touched.end());
  for (size_t i = 1; i < touched.size(); ++i)
    if (touched[i] == touched[i - 1])
      fail(Errc::Invalid, "matching pairs share vertex " + std::to_string(touched[i]));
  Matching m;
  m.pairs = std::move(raw);
  return m;
}

bool Matching::contains(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(u, v));
}

void require_edges_of(const Tree& t, const Matching& m) {
  for (auto [u, v] : m.pairs)
    if (!t.has_edge(u, v))
      fail(Errc::Invalid,
           "matching pair " + std::to_string(u) + " " + std::to_string(v) + " is not a tree edge");
}

bool is_perfect(const Tree& t, const Matching& m) { return 2 * m.size() == t.n; }

void require_perfect(const Tree& t, const Matching& m) {
  require_edges_of(t, m);
  if (!is_perfect(t, m)) fail(Errc::Invalid, "matching is not perfect");
}

std::vector<int> partner_map(const Matching& m, int n) {
  std::vector<int> partner(n, -1);
  for (auto [u, v] : m.pairs) {
    if (u >= n || v >= n) fail(Errc::Invalid, "matching vertex out of range");
    partner[u] = v;
    partner[v] = u;
  }
  return partner;
}

std::vector<int> bfs_distances(const Tree& t, int source) {
  std::vector<int> dist(t.n, -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

namespace {

int min_id_argmax(const std::vector<int>& dist) {
  int best = 0;
  for (int v = 1; v < static_cast<int>(dist.size()); ++v)
    if (dist[v] > dist[best]) best = v;
  return best;  // ties keep the smaller id because of strict >
}

}  // namespace

int diameter(const Tree& t) {
  if (t.n == 1) return 0;
  auto d0 = bfs_distances(t, 0);
  int a = min_id_argmax(d0);
  auto da = bfs_distances(t, a);
  return da[min_id_argmax(da)];
}

std::vector<std::pair<int, int>> end_edges(const Tree& t) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : t.edges)
    if (t.degree(u) == 1 || t.degree(v) == 1) out.push_back({u, v});
  return out;
}

std::optional<Matching> end_edge_perfect_matching(const Tree& t) {
  auto ee = end_edges(t);
  std::vector<char> covered(t.n, 0);
  for (auto [u, v] : ee) {
    if (covered[u] || covered[v]) return std::nullopt;  // end edges overlap
    covered[u] = covered[v] = 1;
  }
  for (int v = 0; v < t.n; ++v)
    if (!covered[v]) return std::nullopt;
  return Matching::from_pairs(std::move(ee));
}

std::optional<Matching> unique_perfect_matching(const Tree& t) {
  if (t.n % 2 != 0) return std::nullopt;
  std::vector<int> deg(t.n);
  for (int v = 0; v < t.n; ++v) deg[v] = t.degree(v);
  std::vector<char> gone(t.n, 0), matched(t.n, 0);
  std::queue<int> leaves;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> pairs;
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop();
    if (gone[v]) continue;
    int u = -1;
    for (int w : t.adj[v])
      if (!gone[w]) u = w;
    if (u < 0) return std::nullopt;  // isolated unmatched vertex
    // v is a leaf of what remains, so u is forced as its partner
    pairs.push_back({v, u});
    matched[v] = matched[u] = 1;
    gone[v] = gone[u] = 1;
    for (int w : t.adj[u])
      if (!gone[w]) {
        if (--deg[w] == 1) leaves.push(w);
        if (deg[w] == 0 && !matched[w]) return std::nullopt;
      }
  }
  for (int v = 0; v < t.n; ++v)
    if (!matched[v]) return std::nullopt;
  return Matching::from_pairs(std::move(pairs));
}

namespace {

// Heights below each vertex for the tree rooted at root, plus bfs order and
// parents. down[v] = length of the longest downward path from v.
struct Rooted {
  std::vector<int> parent, depth, down, order;
};

Rooted root_at(const Tree& t, int root) {
  Rooted r;
  r.parent.assign(t.n, -1);
  r.depth.assign(t.n, 0);
  r.down.assign(t.n, 0);
  r.order.reserve(t.n);
  std::queue<int> q;
  q.push(root);
  std::vector<char> seen(t.n, 0);
  seen[root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    r.order.push_back(v);
    for (int w : t.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        r.parent[w] = v;
        r.depth[w] = r.depth[v] + 1;
        q.push(w);
      }
  }
  for (int i = t.n - 1; i >= 0; --i) {
    int v = r.order[i];
    if (r.parent[v] >= 0)
      r.down[r.parent[v]] = std::max(r.down[r.parent[v]], r.down[v] + 1);
  }
  return r;
}

// Walks from start (which realizes the eccentricity bound total) picking the
// smallest child that still reaches full depth. Yields the lex-smallest
// deepest path in this rooting.
std::vector<int> greedy_deep_walk(const Tree& t, const Rooted& r, int start, int total) {
  std::vector<int> path{start};
  int cur = start;
  for (int step = 0; step < total; ++step) {
    int next = -1;
    for (int w : t.adj[cur]) {
      if (w == r.parent[cur] || r.parent[w] != cur) continue;
      if (r.down[w] == total - step - 1) {
        next = w;
        break;  // adjacency is sorted, first hit is smallest
      }
    }
    if (next < 0) fail(Errc::Internal, "deep walk lost the remaining depth");
    path.push_back(next);
    cur = next;
  }
  return path;
}

}  // namespace

std::vector<int> longest_path(const Tree& t) {
  if (t.n == 1) return {0};
  auto d0 = bfs_distances(t, 0);
  int a = min_id_argmax(d0);
  auto da = bfs_distances(t, a);
  int b = min_id_argmax(da);
  auto db = bfs_distances(t, b);
  int dia = da[b];
  // ecc(v) = max(dist to either diameter endpoint)
  int ustar = -1;
  for (int v = 0; v < t.n; ++v)
    if (std::max(da[v], db[v]) == dia) {
      ustar = v;
      break;
    }
  auto r = root_at(t, ustar);
  return greedy_deep_walk(t, r, ustar, dia);
}

bool path_covers_within(const Tree& t, const std::vector<int>& path, int k) {
  std::vector<int> dist(t.n, -1);
  std::queue<int> q;
  for (int v : path) {
    if (v < 0 || v >= t.n) fail(Errc::Invalid, "path vertex out of range");
    dist[v] = 0;
    q.push(v);
  }
  int worst = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        worst = std::max(worst, dist[w]);
        q.push(w);
      }
  }
  return worst <= k;
}

namespace {

// Depth-first scan of every maximal path starting at u (in the rooting r),
// in lexicographic order, calling visit(path). visit returns true to stop.
bool scan_deep_paths(const Tree& t, const Rooted& r, int u, int dia,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> path{u};
  std::vector<size_t> next{0};  // adjacency cursor per path position
  while (!path.empty()) {
    int depth = static_cast<int>(path.size()) - 1;
    int v = path.back();
    if (depth == dia) {
      if (visit(path)) return true;
      path.pop_back();
      next.pop_back();
      continue;
    }
    bool descended = false;
    while (next.back() < t.adj[v].size()) {
      int w = t.adj[v][next.back()++];
      if (r.parent[w] != v) continue;
      if (r.down[w] == dia - depth - 1) {
        path.push_back(w);
        next.push_back(0);
        descended = true;
        break;
      }
    }
    if (!descended) {
      path.pop_back();
      next.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<Spine> make_spine(const Tree& t, int k) {
  if (k < 0) fail(Errc::Invalid, "negative cover radius");
  auto canonical = longest_path(t);
  if (path_covers_within(t, canonical, k)) return Spine{canonical, k};
  if (t.n == 1) return std::nullopt;  // unreachable, K1 is covered by its path

  auto d0 = bfs_distances(t, 0);
  int a = min_id_argmax(d0);
  auto da = bfs_distances(t, a);
  int b = min_id_argmax(da);
  auto db = bfs_distances(t, b);
  int dia = da[b];

  std::optional<Spine> found;
  for (int u = 0; u < t.n && !found; ++u) {
    if (std::max(da[u], db[u]) != dia) continue;
    auto r = root_at(t, u);
    scan_deep_paths(t, r, u, dia, [&](const std::vector<int>& path) {
      if (path.back() < u) return false;  // already seen from the other end
      if (path_covers_within(t, path, k)) {
        found = Spine{path, k};
        return true;
      }
      return false;
    });
  }
  return found;
}

bool is_k_distant(const Tree& t, int k) {
  if (k < 0) fail(Errc::Invalid, "negative distance bound");
  std::vector<int> deg(t.n);
  for (int v = 0; v < t.n; ++v) deg[v] = t.degree(v);
  std::vector<char> alive(t.n, 1);
  std::vector<int> frontier;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] <= 1) frontier.push_back(v);
  int alive_count = t.n;
  for (int round = 0; round < k && alive_count > 0; ++round) {
    std::vector<int> next;
    for (int v : frontier) {
      alive[v] = 0;
      --alive_count;
    }
    for (int v : frontier)
      for (int w : t.adj[v])
        if (alive[w] && --deg[w] <= 1) next.push_back(w);
    // a vertex losing two neighbours in one round is pushed twice
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  if (alive_count == 0) return true;
  for (int v = 0; v < t.n; ++v) {
    if (!alive[v]) continue;
    int d = 0;
    for (int w : t.adj[v])
      if (alive[w]) ++d;
    if (d > 2) return false;
  }
  return true;
}

void validate_spine(const Tree& t, const Spine& s) {
  if (s.vertices.empty()) fail(Errc::Invalid, "empty spine");
  std::vector<char> on(t.n, 0);
  for (int v : s.vertices) {
    if (v < 0 || v >= t.n) fail(Errc::Invalid, "spine vertex out of range");
    if (on[v]) fail(Errc::Invalid, "spine repeats vertex " + std::to_string(v));
    on[v] = 1;
  }
  for (size_t i = 1; i < s.vertices.size(); ++i)
    if (!t.has_edge(s.vertices[i - 1], s.vertices[i]))
      fail(Errc::Invalid, "spine vertices " + std::to_string(s.vertices[i - 1]) + " and " +
                              std::to_string(s.vertices[i]) + " are not adjacent");
  if (static_cast<int>(s.vertices.size()) - 1 != diameter(t))
    fail(Errc::Invalid, "spine is not a maximum-length path");
  if (!path_covers_within(t, s.vertices, s.k))
    fail(Errc::Invalid, "spine does not cover the tree within distance " + std::to_string(s.k));
}

SpikeResult spike(const Tree& t) {
  auto edges = t.edges;
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < t.n; ++v) {
    edges.push_back({v, t.n + v});
    pairs.push_back({v, t.n + v});
  }
  SpikeResult out{Tree::from_edges(2 * t.n, std::move(edges)), Matching::from_pairs(std::move(pairs)), {}};
  out.partner.resize(t.n);
  for (int v = 0; v < t.n; ++v) out.partner[v] = t.n + v;
  return out;
}

ContractResult contract_matching(const Tree& t, const Matching& m) {
  require_perfect(t, m);
  std::vector<int> comp(t.n, -1);
  for (int i = 0; i < m.size(); ++i) {
    comp[m.pairs[i].first] = i;  // pairs sorted by smaller endpoint
    comp[m.pairs[i].second] = i;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : t.edges) {
    if (m.contains(u, v)) continue;
    edges.push_back({comp[u], comp[v]});
  }
  ContractResult out{Tree::from_edges(t.n / 2, std::move(edges)), std::move(comp)};
  return out;
}

namespace {

std::vector<int> find_centers(const Tree& t) {
  if (t.n == 1) return {0};
  if (t.n == 2) return {0, 1};
  std::vector<int> deg(t.n);
  for (int v = 0; v < t.n; ++v) deg[v] = t.degree(v);
  std::vector<char> alive(t.n, 1);
  std::vector<int> frontier;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] == 1) frontier.push_back(v);
  int remaining = t.n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      alive[v] = 0;
      --remaining;
    }
    for (int v : frontier)
      for (int w : t.adj[v])
        if (alive[w] && --deg[w] == 1) next.push_back(w);
    frontier = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < t.n; ++v)
    if (alive[v]) centers.push_back(v);
  return centers;
}

std::string ahu_encode(const Tree& t, int root) {
  // post-order over an explicit stack; children encodings sorted
  std::vector<std::string> enc(t.n);
  struct Frame {
    int v, parent;
    size_t next = 0;
    std::vector<std::string> kids;
  };
  std::vector<Frame> stack;
  stack.push_back({root, -1, 0, {}});
  std::string result;
  while (!stack.empty()) {
    auto& fr = stack.back();
    if (fr.next < t.adj[fr.v].size()) {
      int w = t.adj[fr.v][fr.next++];
      if (w != fr.parent) stack.push_back({w, fr.v, 0, {}});
      continue;
    }
    std::sort(fr.kids.begin(), fr.kids.end());
    std::string s = "(";
    for (auto& k : fr.kids) s += k;
    s += ")";
    int parent = fr.parent;
    stack.pop_back();
    if (parent < 0)
      result = std::move(s);
    else
      stack.back().kids.push_back(std::move(s));
  }
  return result;
}

}  // namespace

std::string canonical_form(const Tree& t) {
  auto centers = find_centers(t);
  std::string best = ahu_encode(t, centers[0]);
  for (size_t i = 1; i < centers.size(); ++i) best = std::min(best, ahu_encode(t, centers[i]));
  return best;
}

}  // namespace gt
