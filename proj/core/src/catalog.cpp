#include "rvclab/catalog.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "rvclab/detect.hpp"

namespace rvclab {

namespace {

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xFF51AFD7ED558CCDULL;
  h ^= h >> 33;
  h *= 0xC4CEB9FE1A85EC53ULL;
  h ^= h >> 33;
  return h;
}

Graph with_new_vertex(const Graph& g, VertexMask neighbors) {
  const int n = g.order();
  std::vector<VertexMask> rows(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    rows[v] = g.row(v) | (((neighbors >> v) & 1U) ? bit(n) : 0);
  }
  rows[n] = neighbors;
  return Graph::from_rows(std::move(rows));
}

}  // namespace

std::uint64_t refinement_invariant(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> color(n);
  for (Vertex v = 0; v < n; ++v) {
    // Degree plus the number of edges among the neighbors.
    int links = 0;
    for (Vertex u : g.neighbors(v)) links += std::popcount(g.row(u) & g.row(v));
    color[v] = mix(static_cast<std::uint64_t>(g.degree(v)) * 1000 + links / 2);
  }
  std::vector<std::uint64_t> next(n);
  std::vector<std::uint64_t> around;
  for (int round = 0; round < n; ++round) {
    for (Vertex v = 0; v < n; ++v) {
      around.clear();
      for (Vertex u : g.neighbors(v)) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      std::uint64_t h = mix(color[v] + 0x9E3779B97F4A7C15ULL);
      for (std::uint64_t c : around) h = mix(h ^ (c + 0x632BE59BD9B4E019ULL + (h << 6)));
      next[v] = h;
    }
    color.swap(next);
  }
  std::sort(color.begin(), color.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(n) << 32 | static_cast<std::uint64_t>(g.size()));
  for (std::uint64_t c : color) h = mix(h ^ (c + (h << 6) + (h >> 2)));
  return h;
}

std::vector<std::vector<Graph>> connected_catalog(int max_order, const GraphFilter& keep) {
  if (max_order < 1 || max_order > kMaxVertices) {
    throw PreconditionError("catalog order out of range");
  }
  std::vector<std::vector<Graph>> levels;
  const Graph single(1, {});
  levels.push_back({});
  if (!keep || keep(single)) levels.back().push_back(single);

  for (int n = 2; n <= max_order; ++n) {
    std::vector<Graph> level;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    for (const Graph& base : levels.back()) {
      const VertexMask full = base.all_vertices();
      for (VertexMask nbrs = 1; nbrs <= full; ++nbrs) {
        Graph candidate = with_new_vertex(base, nbrs);
        auto& bucket = buckets[refinement_invariant(candidate)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t idx) {
          return are_isomorphic(level[idx], candidate);
        });
        if (seen) continue;
        if (keep && !keep(candidate)) continue;
        bucket.push_back(level.size());
        level.push_back(std::move(candidate));
      }
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

Graph sample_free_graph(std::mt19937_64& rng, std::span<const Graph> forbidden,
                        const SamplerOptions& opts) {
  if (opts.min_order < 1 || opts.max_order > kMaxVertices || opts.min_order > opts.max_order) {
    throw PreconditionError("sampler order range invalid");
  }
  std::uniform_int_distribution<int> order_dist(opts.min_order, opts.max_order);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    const int target = order_dist(rng);
    // Share of non-anchor-neighbors and of anchor-neighbors joined per step.
    const double far_share = 0.35 * unit(rng) * unit(rng);
    const double near_share = unit(rng);
    std::vector<VertexMask> rows{0};
    bool stuck = false;
    while (static_cast<int>(rows.size()) < target && !stuck) {
      const int n = static_cast<int>(rows.size());
      const Graph current = Graph::from_rows(rows);
      stuck = true;
      for (int attempt = 0; attempt < opts.attempts_per_vertex; ++attempt) {
        const Vertex anchor = std::uniform_int_distribution<int>(0, n - 1)(rng);
        VertexMask nbrs = bit(anchor);
        for (Vertex w = 0; w < n; ++w) {
          if (w == anchor) continue;
          const double share = current.adjacent(anchor, w) ? near_share : far_share;
          if (unit(rng) < share) nbrs |= bit(w);
        }
        Graph candidate = with_new_vertex(current, nbrs);
        if (!forbidden.empty() && !is_family_free(candidate, forbidden)) continue;
        rows.assign(n + 1, 0);
        for (Vertex v = 0; v <= n; ++v) rows[v] = candidate.row(v);
        stuck = false;
        break;
      }
    }
    if (!stuck) return Graph::from_rows(rows);
  }
}

}  // namespace rvclab
