#ifndef RVCLAB_STRUCTURE_HPP_
#define RVCLAB_STRUCTURE_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rvclab/graph.hpp"

namespace rvclab {

enum class DominatingKind { kClique, kP3 };

struct DominatingStructure {
  DominatingKind kind = DominatingKind::kClique;
  // Clique members ascending, or the path a-b-c with b in the middle.
  std::vector<Vertex> vertices;
  // Whether the three path vertices induce P_3 (a and c non-adjacent).
  bool induced = true;
};

bool is_dominating(const Graph& g, VertexMask set);

// Smallest dominating clique (singletons, then edges, then larger cliques in
// lexicographic order); failing that, the lexicographically least dominating
// path a-b-c with a < c. Connected P5-free graphs always have one of the two.
std::optional<DominatingStructure> find_dominating_clique_or_p3(const Graph& g);

// Off-path vertices of a shortest path P = v_0..v_k, grouped by the exact set
// of path vertices they see. On a shortest path a vertex sees at most three
// path vertices, all within a window of three consecutive positions.
//
// Per-position tables have k + 1 entries; entries outside the documented
// index range stay empty.
struct PathPartition {
  std::vector<Vertex> path;
  int length = 0;  // k

  // single[i]: sees only v_i, for i in {0, 1, k-1, k}.
  std::vector<VertexMask> single;
  // bridge[i]: sees exactly v_{i-1} and v_{i+1}, 1 <= i <= k-1.
  std::vector<VertexMask> bridge;
  // edge[i]: sees exactly v_{i-1} and v_i, 1 <= i <= k.
  std::vector<VertexMask> edge;
  // triple[i]: sees exactly v_{i-1}, v_i and v_{i+1}, 1 <= i <= k-1.
  std::vector<VertexMask> triple;
  // Off-path vertices seeing a single interior vertex other than v_1 and
  // v_{k-1}. Only possible when the graph contains an induced S_{1,2,2}.
  VertexMask overflow = 0;

  VertexMask on_path = 0;
  VertexMask near = 0;  // path plus its neighborhood
  VertexMask far = 0;   // everything else

  // Derived when k >= 3. The barrier separates the two path ends once the
  // end-side classes are removed.
  VertexMask barrier = 0;
  VertexMask start_side = 0;  // single[0] | edge[1] | triple[1]
  VertexMask end_side = 0;    // triple[k-1] | edge[k] | single[k]

  int index_of(Vertex v) const;
};

bool is_shortest_path(const Graph& g, const std::vector<Vertex>& path);

// Throws PreconditionError if `path` is not a shortest path in g.
PathPartition classify_against_path(const Graph& g, const std::vector<Vertex>& path);

// Containment properties of a partition built on a shortest path of length
// >= 4, in the order:
//   0  N(edge[i])   within near, 2 <= i <= k-1
//   1  N(triple[i]) within near, 2 <= i <= k-2
//   2  N(bridge[i]) within near, 1 <= i <= k-1
//   3  far vertices have no path neighbor
//   4  near-neighbors of far vertices lie in start_side | end_side
// They hold whenever the graph is (S_{1,2,2}, N)-free.
struct PropertyCheck {
  bool holds = true;
  // Offending edge (inside vertex, outside vertex) when the property fails.
  std::optional<std::pair<Vertex, Vertex>> witness_edge;
  std::optional<Vertex> witness_vertex;
};

struct PartitionLemmaReport {
  std::array<PropertyCheck, 5> properties;
  bool all_hold() const;
};

PartitionLemmaReport check_partition_lemma(const Graph& g, const PathPartition& part);

std::string property_name(int index);

}  // namespace rvclab

#endif  // RVCLAB_STRUCTURE_HPP_
