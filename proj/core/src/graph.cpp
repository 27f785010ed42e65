#include "rvclab/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace rvclab {

namespace {

constexpr int kGraph6Bias = 63;

std::vector<int> bfs_within(const Graph& g, Vertex source, VertexMask allowed) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable && ((allowed >> w) & 1U)) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 1 || n > kMaxVertices) {
    throw PreconditionError("graph order must be in 1.." + std::to_string(kMaxVertices) +
                            ", got " + std::to_string(n));
  }
  std::vector<VertexMask> rows(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) throw PreconditionError("self-loops are not allowed");
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  *this = Graph(std::move(rows));
}

Graph::Graph(std::vector<VertexMask> rows) : rows_(std::move(rows)), adj_(rows_.size()) {
  for (Vertex v = 0; v < order(); ++v) {
    adj_[v] = mask_to_vertices(rows_[v]);
    edge_count_ += static_cast<int>(adj_[v].size());
  }
  edge_count_ /= 2;
}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1 || n > kMaxVertices) throw PreconditionError("graph order out of range");
  const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw PreconditionError("adjacency row out of range");
    if ((rows[v] >> v) & 1U) throw PreconditionError("self-loops are not allowed");
    for (Vertex u : mask_to_vertices(rows[v])) {
      if (!((rows[u] >> v) & 1U)) throw PreconditionError("adjacency rows are not symmetric");
    }
  }
  return Graph(std::move(rows));
}

VertexMask Graph::all_vertices() const { return bit(order()) - 1; }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexColoring make_coloring(std::vector<int> colors) {
  int palette = 0;
  for (int c : colors) palette = std::max(palette, c + 1);
  return VertexColoring{std::move(colors), palette};
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.remove_suffix(1);
  }
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw FormatError("empty graph6 string");

  for (char ch : line) {
    if (ch < kGraph6Bias || ch > kGraph6Bias + 63) {
      throw FormatError("graph6 byte out of range in '" + std::string(line) + "'");
    }
  }
  const int n = line[0] - kGraph6Bias;
  if (n == 63) throw FormatError("graph6 orders above 62 are not supported");
  if (n == 0) throw FormatError("graph6 string encodes an empty graph");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() != 1 + body) {
    throw FormatError("graph6 length mismatch: expected " + std::to_string(1 + body) +
                      " bytes for n=" + std::to_string(n) + ", got " +
                      std::to_string(line.size()));
  }

  std::vector<VertexMask> rows(n, 0);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = line[1 + k / 6] - kGraph6Bias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[u] |= bit(v);
        rows[v] |= bit(u);
      }
    }
  }
  // Padding bits must be zero in canonical graph6.
  if (bits % 6 != 0) {
    const int last = line.back() - kGraph6Bias;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw FormatError("nonzero graph6 padding bits");
  }
  return Graph::from_rows(std::move(rows));
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(kGraph6Bias + n));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kGraph6Bias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kGraph6Bias + (acc << (6 - filled))));
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.order()) throw PreconditionError("BFS source out of range");
  return bfs_within(g, source, g.all_vertices());
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

bool is_connected(const Graph& g) {
  VertexMask seen = bit(0);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (Vertex v : mask_to_vertices(frontier)) next |= g.row(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

DiameterPath diameter_and_path(const Graph& g) {
  const int n = g.order();
  int best = -1;
  Vertex bu = 0;
  Vertex bv = 0;
  for (Vertex u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist[v] == kUnreachable) throw PreconditionError("graph is disconnected");
      if (dist[v] > best) {
        best = dist[v];
        bu = u;
        bv = v;
      }
    }
  }
  if (best < 0) return {0, {0}};
  return {best, shortest_path(g, bu, bv)};
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v, VertexMask allowed) {
  const auto to_target = bfs_within(g, v, allowed);
  if (to_target[u] == kUnreachable) return {};
  std::vector<Vertex> path{u};
  Vertex cur = u;
  while (cur != v) {
    for (Vertex w : g.neighbors(cur)) {
      if (to_target[w] == to_target[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

int diameter(const Graph& g) { return diameter_and_path(g).length; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  if (vs.empty()) throw PreconditionError("induced_subgraph needs a nonempty vertex set");
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("induced_subgraph vertex set has duplicates");
  }
  if (sorted.front() < 0 || sorted.back() >= g.order()) {
    throw PreconditionError("induced_subgraph vertex out of range");
  }
  const int k = static_cast<int>(sorted.size());
  std::vector<VertexMask> rows(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (g.adjacent(sorted[i], sorted[j])) rows[i] |= bit(j);
    }
  }
  return Graph::from_rows(std::move(rows));
}

VertexMask neighborhood(const Graph& g, VertexMask set) {
  VertexMask out = 0;
  for (Vertex v : mask_to_vertices(set)) out |= g.row(v);
  return out & ~set;
}

std::vector<Vertex> mask_to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(std::popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

}  // namespace rvclab
