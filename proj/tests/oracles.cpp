#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace rvclab::oracle {

namespace {

bool path_search(const Graph& g, const std::vector<int>& colors, Vertex cur, Vertex target,
                 std::vector<bool>& on_path, std::multiset<int>& inner) {
  for (Vertex w = 0; w < g.order(); ++w) {
    if (!g.adjacent(cur, w) || on_path[w]) continue;
    if (w == target) return true;
    if (inner.count(colors[w])) continue;
    on_path[w] = true;
    inner.insert(colors[w]);
    const bool found = path_search(g, colors, w, target, on_path, inner);
    inner.erase(inner.find(colors[w]));
    on_path[w] = false;
    if (found) return true;
  }
  return false;
}

}  // namespace

bool rainbow_connected_by_paths(const Graph& g, const std::vector<int>& colors) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      std::vector<bool> on_path(n, false);
      on_path[u] = true;
      std::multiset<int> inner;
      if (!path_search(g, colors, u, v, on_path, inner)) return false;
    }
  }
  return true;
}

bool contains_induced_by_subsets(const Graph& pattern, const Graph& host) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return false;
  std::vector<int> select(n, 0);
  std::fill(select.end() - k, select.end(), 1);
  do {
    std::vector<Vertex> chosen;
    for (int v = 0; v < n; ++v) {
      if (select[v]) chosen.push_back(v);
    }
    std::vector<Vertex> perm = chosen;
    do {
      bool ok = true;
      for (int a = 0; a < k && ok; ++a) {
        for (int b = a + 1; b < k && ok; ++b) {
          ok = pattern.adjacent(a, b) == host.adjacent(perm[a], perm[b]);
        }
      }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(select.begin(), select.end()));
  return false;
}

std::vector<std::vector<int>> path_neighbor_positions(const Graph& g,
                                                      const std::vector<Vertex>& path) {
  std::vector<std::vector<int>> out(g.order());
  for (Vertex z = 0; z < g.order(); ++z) {
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
      if (g.adjacent(z, path[i])) out[z].push_back(i);
    }
  }
  return out;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) d[u][v] = 1;
    }
  }
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
  return d;
}

int rvc_by_enumeration(const Graph& g) {
  const int n = g.order();
  if (g.is_complete()) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> colors(n, 0);
    for (;;) {
      if (rainbow_connected_by_paths(g, colors)) return k;
      int pos = 0;
      while (pos < n && ++colors[pos] == k) colors[pos++] = 0;
      if (pos == n) break;
    }
  }
  return n;
}

}  // namespace rvclab::oracle
