#ifndef RVCLAB_GRAPH_HPP_
#define RVCLAB_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rvclab {

using Vertex = int;

// Largest vertex count representable with a one-byte graph6 header. Also lets
// every adjacency row fit in one machine word.
inline constexpr int kMaxVertices = 62;

// Distance reported by bfs_distances for unreachable vertices.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, coloring files, pattern names).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but violates an operation's precondition
// (disconnected graph, wrong family, parameter out of range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

using VertexMask = std::uint64_t;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is kept both as bit rows (row(v) has bit u set iff uv is an edge)
// and as ascending neighbor lists.
class Graph {
 public:
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  static Graph from_rows(std::vector<VertexMask> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexMask row(Vertex v) const { return rows_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  VertexMask all_vertices() const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_complete() const { return 2 * edge_count_ == order() * (order() - 1); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  explicit Graph(std::vector<VertexMask> rows);

  std::vector<VertexMask> rows_;
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

// A total assignment of color ids to vertices. `palette` is the number of
// colors the coloring is allowed to use; every entry is below it, except for
// the palette-0 convention reported for complete graphs.
struct VertexColoring {
  std::vector<int> colors;
  int palette = 0;

  int order() const { return static_cast<int>(colors.size()); }
  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

// Builds a coloring with palette = max color + 1 (0 for an empty sequence).
VertexColoring make_coloring(std::vector<int> colors);

Graph parse_graph6(std::string_view line);
std::string serialize_graph6(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, Vertex source);
std::vector<std::vector<int>> distance_matrix(const Graph& g);
bool is_connected(const Graph& g);

struct DiameterPath {
  int length = 0;
  std::vector<Vertex> path;
};

// Shortest path between the lexicographically least pair (u, v), u < v, at
// maximum distance. Each step takes the smallest neighbor that is one step
// closer to v, which yields the lexicographically least shortest path.
DiameterPath diameter_and_path(const Graph& g);

// Lexicographically least shortest u-v path, restricted to vertices in
// `allowed` (u and v must be in it). Empty if v is unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v, VertexMask allowed);
inline std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v) {
  return shortest_path(g, u, v, g.all_vertices());
}

int diameter(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

// Neighborhood of a vertex set, excluding the set itself.
VertexMask neighborhood(const Graph& g, VertexMask set);

std::vector<Vertex> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const Vertex> vs);

}  // namespace rvclab

#endif  // RVCLAB_GRAPH_HPP_
