#ifndef RVCLAB_RVC_HPP_
#define RVCLAB_RVC_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rvclab/graph.hpp"

namespace rvclab {

// A path is vertex-rainbow when its internal vertices carry pairwise distinct
// colors. Endpoint colors are unconstrained.
struct VerificationReport {
  bool connected = true;
  // Lexicographically least pair (u < v) with no vertex-rainbow path.
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
};

// Reachability over (vertex, colors used by internal vertices) states, one
// search per source. Sources are split across `threads` workers.
VerificationReport is_rainbow_vertex_connected(const Graph& g, const VertexColoring& c,
                                               int threads = 1);

// A vertex-rainbow u-v path with the fewest edges, if one exists.
std::optional<std::vector<Vertex>> rainbow_path(const Graph& g, const VertexColoring& c, Vertex u,
                                                Vertex v);

struct RvcOptions {
  // Largest palette the search will try before settling for the spanning-tree
  // upper bound.
  int max_palette = kMaxVertices;
  // Lifts the n <= 16 guard.
  bool deep = false;
  // Search-tree nodes per call; 0 means unlimited.
  std::uint64_t node_budget = 200'000'000;
};

struct RvcResult {
  // rvc(G) when exhaustive, otherwise the best upper bound found.
  int value = 0;
  // Absent only for complete graphs (value 0).
  std::optional<VertexColoring> witness;
  // Every palette below `value` was refuted.
  bool exhaustive = true;
  // Proven lower bound; equals value when exhaustive.
  int lower_bound = 0;
};

// Minimum palette making g rainbow vertex-connected, 0 for complete graphs.
//
// Palettes are tried from max(1, diam - 1) upward. For each palette the
// colorings of the vertices of degree >= 2 are enumerated as restricted
// growth strings (one representative per color permutation); degree-1
// vertices are never internal to a path and stay at color 0. A partial
// coloring is discarded once the graph fails even with every uncolored vertex
// given its own fresh color, since no completion can do better.
RvcResult rvc_exact(const Graph& g, const RvcOptions& opts = {});

// Coloring from the best BFS spanning tree: distinct colors on the tree's
// internal vertices, color 0 elsewhere. Palette <= n - 2 for n >= 3.
VertexColoring spanning_tree_coloring(const Graph& g);

// Known rvc of the cycle C_n.
int cycle_rvc(int n);

// x_1..x_k around the cycle get colors 1..h, 1..k-h with h = ceil(k/2),
// shifted to start at 0. Palette h.
VertexColoring halved_cycle_coloring(int k);

}  // namespace rvclab

#endif  // RVCLAB_RVC_HPP_
