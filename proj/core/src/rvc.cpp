#include "rvclab/rvc.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rainbow_checker.hpp"
#include "rvclab/parallel.hpp"

namespace rvclab {

namespace {

using internal::ColorMask;
using internal::RainbowChecker;

void check_inputs(const Graph& g, const VertexColoring& c) {
  if (c.order() != g.order()) {
    throw PreconditionError("coloring has " + std::to_string(c.order()) + " entries, graph has " +
                            std::to_string(g.order()) + " vertices");
  }
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

struct BudgetExceeded {};

class ExactSearch {
 public:
  ExactSearch(const Graph& g, std::vector<Vertex> interior, std::uint64_t budget)
      : g_(g), checker_(g), interior_(std::move(interior)), budget_(budget) {}

  // Colorings of the interior vertices using exactly `palette` colors, in
  // restricted-growth order. Returns the first one that verifies.
  std::optional<std::vector<int>> run(int palette) {
    palette_ = palette;
    const int m = static_cast<int>(interior_.size());
    fresh_pruning_ = palette + m <= 64;
    colors_.assign(g_.order(), 0);
    bits_.assign(g_.order(), ColorMask{1});
    for (int j = 0; j < m; ++j) {
      bits_[interior_[j]] = fresh_pruning_ ? ColorMask{1} << (palette + j) : ColorMask{1};
    }
    if (assign(0, 0)) return colors_;
    return std::nullopt;
  }

 private:
  bool assign(int pos, int used) {
    if (budget_ && ++nodes_ > budget_) throw BudgetExceeded{};
    const int m = static_cast<int>(interior_.size());
    if (pos == m) return used == palette_ && checker_.all_connected(bits_);
    // Remaining vertices must still be able to introduce the unused colors.
    if (palette_ - used > m - pos) return false;
    const Vertex v = interior_[pos];
    const int top = std::min(used, palette_ - 1);
    for (int c = 0; c <= top; ++c) {
      colors_[v] = c;
      bits_[v] = ColorMask{1} << c;
      const int now_used = std::max(used, c + 1);
      if (fresh_pruning_ && pos + 1 < m && !checker_.all_connected(bits_)) continue;
      if (assign(pos + 1, now_used)) return true;
    }
    colors_[v] = 0;
    bits_[v] = fresh_pruning_ ? ColorMask{1} << (palette_ + pos) : ColorMask{1};
    return false;
  }

  const Graph& g_;
  RainbowChecker checker_;
  std::vector<Vertex> interior_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int palette_ = 0;
  bool fresh_pruning_ = false;
  std::vector<int> colors_;
  std::vector<ColorMask> bits_;
};

// Interior vertices (degree >= 2) in BFS order from `root`.
std::vector<Vertex> interior_order(const Graph& g, Vertex root) {
  std::vector<Vertex> order;
  const auto dist = bfs_distances(g, root);
  std::vector<Vertex> by_dist(g.order());
  for (Vertex v = 0; v < g.order(); ++v) by_dist[v] = v;
  std::stable_sort(by_dist.begin(), by_dist.end(),
                   [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
  for (Vertex v : by_dist) {
    if (g.degree(v) >= 2) order.push_back(v);
  }
  return order;
}

}  // namespace

VerificationReport is_rainbow_vertex_connected(const Graph& g, const VertexColoring& c,
                                               int threads) {
  check_inputs(g, c);
  const auto bits = internal::color_bits_of(c.colors);
  const int n = g.order();
  std::vector<std::optional<Vertex>> failure(n);
  if (threads <= 1) {
    RainbowChecker checker(g);
    for (Vertex s = 0; s < n; ++s) {
      if (auto t = checker.first_failure_from(s, bits)) return {false, std::pair{s, *t}};
    }
    return {};
  }
  // Sources are dealt round-robin into one block per worker.
  const int blocks = std::min(threads, n);
  parallel_for(static_cast<std::size_t>(blocks), threads, [&](std::size_t block) {
    RainbowChecker checker(g);
    for (Vertex s = static_cast<Vertex>(block); s < n; s += blocks) {
      failure[s] = checker.first_failure_from(s, bits);
    }
  });
  for (Vertex s = 0; s < n; ++s) {
    if (failure[s]) return {false, std::pair{s, *failure[s]}};
  }
  return {};
}

std::optional<std::vector<Vertex>> rainbow_path(const Graph& g, const VertexColoring& c, Vertex u,
                                                Vertex v) {
  check_inputs(g, c);
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw PreconditionError("rainbow_path vertex out of range");
  }
  if (u == v) return std::vector<Vertex>{u};
  if (g.adjacent(u, v)) return std::vector<Vertex>{u, v};
  const auto bits = internal::color_bits_of(c.colors);

  // Breadth-first over (vertex, used colors) states with parent links.
  struct Node {
    Vertex vertex;
    ColorMask used;
    int parent;
  };
  std::vector<Node> nodes;
  std::map<std::pair<Vertex, ColorMask>, int> seen;
  for (Vertex a : g.neighbors(u)) {
    seen.emplace(std::pair{a, bits[a]}, static_cast<int>(nodes.size()));
    nodes.push_back({a, bits[a], -1});
  }
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Node cur = nodes[head];
    if (g.adjacent(cur.vertex, v)) {
      std::vector<Vertex> path{v};
      for (int i = static_cast<int>(head); i >= 0; i = nodes[i].parent) {
        path.push_back(nodes[i].vertex);
      }
      path.push_back(u);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex y : g.neighbors(cur.vertex)) {
      if (y == u || y == v || (cur.used & bits[y])) continue;
      const ColorMask next = cur.used | bits[y];
      if (seen.emplace(std::pair{y, next}, static_cast<int>(nodes.size())).second) {
        nodes.push_back({y, next, static_cast<int>(head)});
      }
    }
  }
  return std::nullopt;
}

VertexColoring spanning_tree_coloring(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  const int n = g.order();
  std::vector<int> best;
  int best_internal = n + 1;
  for (Vertex root = 0; root < n; ++root) {
    std::vector<int> parent(n, -2);
    std::vector<int> tree_degree(n, 0);
    std::vector<Vertex> queue{root};
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (parent[y] != -2) continue;
        parent[y] = x;
        ++tree_degree[x];
        ++tree_degree[y];
        queue.push_back(y);
      }
    }
    std::vector<int> colors(n, 0);
    int internal = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (tree_degree[x] >= 2) colors[x] = internal++;
    }
    if (internal < best_internal) {
      best_internal = internal;
      best = std::move(colors);
    }
  }
  return {best, std::max(best_internal, 1)};
}

RvcResult rvc_exact(const Graph& g, const RvcOptions& opts) {
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  if (g.is_complete()) return {0, std::nullopt, true, 0};
  if (g.order() > 16 && !opts.deep) {
    throw PreconditionError("exact search is limited to n <= 16 without deep mode (n = " +
                            std::to_string(g.order()) + ")");
  }

  const DiameterPath dp = diameter_and_path(g);
  const int lower = std::max(1, dp.length - 1);
  const VertexColoring upper = spanning_tree_coloring(g);

  ExactSearch search(g, interior_order(g, dp.path.front()), opts.node_budget);
  for (int k = lower; k < upper.palette; ++k) {
    if (k > opts.max_palette) return {upper.palette, upper, false, k};
    try {
      if (auto colors = search.run(k)) return {k, VertexColoring{std::move(*colors), k}, true, k};
    } catch (const BudgetExceeded&) {
      return {upper.palette, upper, false, k};
    }
  }
  return {upper.palette, upper, true, upper.palette};
}

int cycle_rvc(int n) {
  if (n < 3) throw PreconditionError("cycle_rvc needs n >= 3");
  const int half = (n + 1) / 2;
  if (n == 3) return 0;
  if (n == 4 || n == 5) return 1;
  if (n == 9) return 3;
  if (n == 14 || n >= 16) return half;
  return half - 1;
}

VertexColoring halved_cycle_coloring(int k) {
  if (k < 3) throw PreconditionError("halved_cycle_coloring needs k >= 3");
  const int half = (k + 1) / 2;
  std::vector<int> colors(k);
  for (int i = 0; i < k; ++i) colors[i] = i < half ? i : i - half;
  return {std::move(colors), half};
}

}  // namespace rvclab
