#include "rvclab/structure.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rvclab {

namespace {

VertexMask closed_neighborhood(const Graph& g, VertexMask set) {
  return set | neighborhood(g, set);
}

// First clique of exactly `remaining` more vertices (lexicographic order)
// whose closed neighborhood is all of g. A branch is cut once even taking
// every candidate could not dominate.
VertexMask dominating_clique(const Graph& g, VertexMask chosen, VertexMask candidates,
                             int remaining) {
  if (remaining == 0) return closed_neighborhood(g, chosen) == g.all_vertices() ? chosen : 0;
  if (std::popcount(candidates) < remaining) return 0;
  if (closed_neighborhood(g, chosen | candidates) != g.all_vertices()) return 0;
  while (candidates) {
    const Vertex v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (VertexMask found = dominating_clique(g, chosen | bit(v), candidates & g.row(v), remaining - 1)) {
      return found;
    }
  }
  return 0;
}

void grow_clique(const Graph& g, int size, VertexMask candidates, int& best) {
  if (size > best) best = size;
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    const Vertex v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(g, size + 1, candidates & g.row(v), best);
  }
}

int clique_number(const Graph& g) {
  int best = 0;
  grow_clique(g, 0, g.all_vertices(), best);
  return best;
}

}  // namespace

bool is_dominating(const Graph& g, VertexMask set) {
  return closed_neighborhood(g, set) == g.all_vertices();
}

std::optional<DominatingStructure> find_dominating_clique_or_p3(const Graph& g) {
  const int n = g.order();
  const int omega = clique_number(g);
  for (int size = 1; size <= omega; ++size) {
    if (VertexMask found = dominating_clique(g, 0, g.all_vertices(), size)) {
      return DominatingStructure{DominatingKind::kClique, mask_to_vertices(found), true};
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.neighbors(a)) {
      for (Vertex c : g.neighbors(b)) {
        if (c <= a) continue;
        if (is_dominating(g, bit(a) | bit(b) | bit(c))) {
          return DominatingStructure{DominatingKind::kP3, {a, b, c}, !g.adjacent(a, c)};
        }
      }
    }
  }
  return std::nullopt;
}

int PathPartition::index_of(Vertex v) const {
  const auto it = std::find(path.begin(), path.end(), v);
  return it == path.end() ? -1 : static_cast<int>(it - path.begin());
}

bool is_shortest_path(const Graph& g, const std::vector<Vertex>& path) {
  if (path.empty()) return false;
  VertexMask seen = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= g.order() || ((seen >> v) & 1U)) return false;
    seen |= bit(v);
    if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
  }
  const auto dist = bfs_distances(g, path.front());
  return dist[path.back()] == static_cast<int>(path.size()) - 1;
}

PathPartition classify_against_path(const Graph& g, const std::vector<Vertex>& path) {
  if (!is_shortest_path(g, path)) throw PreconditionError("path is not a shortest path");
  PathPartition part;
  part.path = path;
  const int k = static_cast<int>(path.size()) - 1;
  part.length = k;
  part.single.assign(k + 1, 0);
  part.bridge.assign(k + 1, 0);
  part.edge.assign(k + 1, 0);
  part.triple.assign(k + 1, 0);
  part.on_path = vertices_to_mask(path);

  std::vector<int> position(g.order(), -1);
  for (int i = 0; i <= k; ++i) position[path[i]] = i;

  for (Vertex z = 0; z < g.order(); ++z) {
    if (position[z] >= 0) continue;
    std::vector<int> seen;
    for (Vertex w : mask_to_vertices(g.row(z) & part.on_path)) seen.push_back(position[w]);
    std::sort(seen.begin(), seen.end());
    if (seen.empty()) {
      part.far |= bit(z);
      continue;
    }
    if (seen.size() > 3 || seen.back() - seen.front() > 2) {
      throw std::logic_error("vertex sees path vertices too far apart on a shortest path");
    }
    const int lo = seen.front();
    switch (seen.size()) {
      case 1:
        if (lo == 0 || lo == 1 || lo == k - 1 || lo == k) {
          part.single[lo] |= bit(z);
        } else {
          part.overflow |= bit(z);
        }
        break;
      case 2:
        if (seen[1] == lo + 1) {
          part.edge[lo + 1] |= bit(z);
        } else {
          part.bridge[lo + 1] |= bit(z);
        }
        break;
      default:
        part.triple[lo + 1] |= bit(z);
        break;
    }
  }
  part.near = g.all_vertices() & ~part.far;

  if (k >= 3) {
    VertexMask barrier = 0;
    for (int i = 2; i <= k - 2; ++i) barrier |= part.triple[i];
    for (int i = 2; i <= k - 1; ++i) barrier |= part.edge[i];
    for (int i = 1; i <= k - 1; ++i) barrier |= part.bridge[i] | bit(path[i]);
    barrier |= part.single[1] | part.single[k - 1];
    part.barrier = barrier;
    part.start_side = part.single[0] | part.edge[1] | part.triple[1];
    part.end_side = part.triple[k - 1] | part.edge[k] | part.single[k];
  }
  return part;
}

namespace {

// First edge (u, w) with u in `inside` and w outside `allowed`.
std::optional<std::pair<Vertex, Vertex>> edge_leaving(const Graph& g, VertexMask inside,
                                                      VertexMask allowed) {
  for (Vertex u : mask_to_vertices(inside)) {
    const VertexMask out = g.row(u) & ~allowed;
    if (out) return std::pair{u, static_cast<Vertex>(std::countr_zero(out))};
  }
  return std::nullopt;
}

PropertyCheck containment(const Graph& g, VertexMask inside, VertexMask allowed) {
  PropertyCheck check;
  if (auto e = edge_leaving(g, inside, allowed)) {
    check.holds = false;
    check.witness_edge = e;
  }
  return check;
}

}  // namespace

PartitionLemmaReport check_partition_lemma(const Graph& g, const PathPartition& part) {
  const int k = part.length;
  if (k < 4) throw PreconditionError("partition properties need a path of length >= 4");
  PartitionLemmaReport report;

  VertexMask edges_mid = 0;
  for (int i = 2; i <= k - 1; ++i) edges_mid |= part.edge[i];
  VertexMask triples_mid = 0;
  for (int i = 2; i <= k - 2; ++i) triples_mid |= part.triple[i];
  VertexMask bridges = 0;
  for (int i = 1; i <= k - 1; ++i) bridges |= part.bridge[i];

  report.properties[0] = containment(g, edges_mid, part.near);
  report.properties[1] = containment(g, triples_mid, part.near);
  report.properties[2] = containment(g, bridges, part.near);

  for (Vertex z : mask_to_vertices(part.far)) {
    if (g.row(z) & part.on_path) {
      report.properties[3].holds = false;
      report.properties[3].witness_vertex = z;
      break;
    }
  }

  // Near vertices adjacent to far ones must be on an end side.
  const VertexMask ends = part.start_side | part.end_side;
  if (auto e = edge_leaving(g, part.near & ~ends & neighborhood(g, part.far) & ~part.far,
                            ~part.far)) {
    report.properties[4].holds = false;
    report.properties[4].witness_edge = e;
  }
  return report;
}

bool PartitionLemmaReport::all_hold() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyCheck& p) { return p.holds; });
}

std::string property_name(int index) {
  static const std::array<const char*, 5> names = {
      "edge-classes-stay-near", "triple-classes-stay-near", "bridge-classes-stay-near",
      "far-vertices-miss-path", "far-vertices-touch-only-end-sides"};
  return names.at(index);
}

}  // namespace rvclab
