#ifndef RVCLAB_SRC_RAINBOW_CHECKER_HPP_
#define RVCLAB_SRC_RAINBOW_CHECKER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rvclab/graph.hpp"

namespace rvclab::internal {

using ColorMask = std::uint64_t;

// Open-addressing set of (vertex, color mask) states. Cleared in O(1) by
// bumping a generation counter.
class StateSet {
 public:
  // Returns true when the state was not present yet.
  bool insert(Vertex v, ColorMask mask);
  void clear();

 private:
  struct Slot {
    ColorMask mask = 0;
    std::uint32_t generation = 0;
    std::int32_t vertex = -1;
  };
  void grow();

  std::vector<Slot> slots_ = std::vector<Slot>(1024);
  std::size_t used_ = 0;
  std::uint32_t generation_ = 1;
};

// Rainbow reachability on a fixed graph, reusable across many colorings.
// Colorings are given as one color bit per vertex.
class RainbowChecker {
 public:
  explicit RainbowChecker(const Graph& g);

  // Least t > s that s cannot reach by a vertex-rainbow path. Pairs at
  // distance <= 2 always succeed and are skipped.
  std::optional<Vertex> first_failure_from(Vertex s, std::span<const ColorMask> color_bits);

  bool all_connected(std::span<const ColorMask> color_bits);

  const Graph& graph() const { return g_; }

 private:
  // Explores from s until every vertex of `targets` is reached or the state
  // space is exhausted; returns the reached set.
  VertexMask explore(Vertex s, VertexMask targets, std::span<const ColorMask> color_bits);

  const Graph& g_;
  std::vector<VertexMask> far_targets_;
  std::vector<Vertex> source_order_;
  StateSet seen_;
  std::vector<std::pair<Vertex, ColorMask>> stack_;
};

// Maps arbitrary color ids to single bits. Throws if more than 64 distinct
// colors occur.
std::vector<ColorMask> color_bits_of(std::span<const int> colors);

}  // namespace rvclab::internal

#endif  // RVCLAB_SRC_RAINBOW_CHECKER_HPP_
