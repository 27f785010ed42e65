#include "rainbow_checker.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace rvclab::internal {

namespace {

std::size_t hash_state(Vertex v, ColorMask mask) {
  std::uint64_t h = mask * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(v) * 0xC2B2AE3D27D4EB4FULL;
  h ^= h >> 29;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 32;
  return static_cast<std::size_t>(h);
}

}  // namespace

bool StateSet::insert(Vertex v, ColorMask mask) {
  if (2 * (used_ + 1) > slots_.size()) grow();
  const std::size_t cap_mask = slots_.size() - 1;
  for (std::size_t i = hash_state(v, mask) & cap_mask;; i = (i + 1) & cap_mask) {
    Slot& slot = slots_[i];
    if (slot.generation != generation_) {
      slot = {mask, generation_, v};
      ++used_;
      return true;
    }
    if (slot.vertex == v && slot.mask == mask) return false;
  }
}

void StateSet::clear() {
  used_ = 0;
  if (++generation_ == 0) {
    std::fill(slots_.begin(), slots_.end(), Slot{});
    generation_ = 1;
  }
}

void StateSet::grow() {
  std::vector<Slot> old = std::move(slots_);
  slots_.assign(old.size() * 2, Slot{});
  const std::uint32_t gen = generation_;
  used_ = 0;
  const std::size_t cap_mask = slots_.size() - 1;
  for (const Slot& s : old) {
    if (s.generation != gen) continue;
    std::size_t i = hash_state(s.vertex, s.mask) & cap_mask;
    while (slots_[i].generation == gen) i = (i + 1) & cap_mask;
    slots_[i] = s;
    ++used_;
  }
}

RainbowChecker::RainbowChecker(const Graph& g) : g_(g), far_targets_(g.order(), 0) {
  const int n = g.order();
  for (Vertex s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    for (Vertex t = s + 1; t < n; ++t) {
      if (dist[t] >= 3) far_targets_[s] |= bit(t);
    }
    if (far_targets_[s]) source_order_.push_back(s);
  }
  std::stable_sort(source_order_.begin(), source_order_.end(), [&](Vertex a, Vertex b) {
    return std::popcount(far_targets_[a]) > std::popcount(far_targets_[b]);
  });
}

VertexMask RainbowChecker::explore(Vertex s, VertexMask targets,
                                   std::span<const ColorMask> color_bits) {
  seen_.clear();
  stack_.clear();
  VertexMask reached = g_.row(s);
  for (Vertex a : g_.neighbors(s)) {
    if (seen_.insert(a, color_bits[a])) stack_.emplace_back(a, color_bits[a]);
  }
  const VertexMask not_source = ~bit(s);
  while (!stack_.empty() && (reached & targets) != targets) {
    const auto [x, used] = stack_.back();
    stack_.pop_back();
    reached |= g_.row(x);
    for (Vertex y : g_.neighbors(x)) {
      if (!((not_source >> y) & 1U) || (used & color_bits[y])) continue;
      const ColorMask next = used | color_bits[y];
      if (seen_.insert(y, next)) stack_.emplace_back(y, next);
    }
  }
  return reached;
}

std::optional<Vertex> RainbowChecker::first_failure_from(Vertex s,
                                                         std::span<const ColorMask> color_bits) {
  const VertexMask targets = far_targets_[s];
  if (!targets) return std::nullopt;
  const VertexMask missing = targets & ~explore(s, targets, color_bits);
  if (!missing) return std::nullopt;
  return std::countr_zero(missing);
}

bool RainbowChecker::all_connected(std::span<const ColorMask> color_bits) {
  for (Vertex s : source_order_) {
    const VertexMask targets = far_targets_[s];
    if ((explore(s, targets, color_bits) & targets) != targets) return false;
  }
  return true;
}

std::vector<ColorMask> color_bits_of(std::span<const int> colors) {
  std::map<int, int> index;
  std::vector<ColorMask> bits;
  bits.reserve(colors.size());
  for (int c : colors) {
    auto [it, inserted] = index.try_emplace(c, static_cast<int>(index.size()));
    if (it->second >= 64) throw PreconditionError("more than 64 distinct colors");
    bits.push_back(ColorMask{1} << it->second);
  }
  return bits;
}

}  // namespace rvclab::internal
