#ifndef RVCLAB_CATALOG_HPP_
#define RVCLAB_CATALOG_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "rvclab/graph.hpp"

namespace rvclab {

using GraphFilter = std::function<bool(const Graph&)>;

// All connected graphs up to isomorphism, grouped by order:
// result[n - 1] holds the graphs on n vertices, for n = 1..max_order.
//
// Each level is grown from the previous one by adding a vertex with every
// nonempty neighborhood (every connected graph has a vertex whose removal
// leaves it connected). Duplicates are removed by a refinement-based
// invariant followed by an explicit isomorphism test.
//
// `keep` must be hereditary on connected induced subgraphs (for example
// F-freeness); rejected graphs are not extended.
std::vector<std::vector<Graph>> connected_catalog(int max_order, const GraphFilter& keep = {});

// Color-refinement fingerprint; isomorphic graphs get equal values.
std::uint64_t refinement_invariant(const Graph& g);

struct SamplerOptions {
  int min_order = 9;
  int max_order = 20;
  // Attempts to place one new vertex before the sample is restarted.
  int attempts_per_vertex = 200;
};

// Random connected graph avoiding every pattern as an induced subgraph. The
// graph grows one vertex at a time; each new vertex attaches to a random
// anchor plus a random share of the other vertices (the share is drawn once
// per graph, so samples range from sparse to dense), and candidates that
// create a forbidden pattern are rejected.
Graph sample_free_graph(std::mt19937_64& rng, std::span<const Graph> forbidden,
                        const SamplerOptions& opts = {});

}  // namespace rvclab

#endif  // RVCLAB_CATALOG_HPP_
