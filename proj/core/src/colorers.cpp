#include "rvclab/colorers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>

#include "rvclab/detect.hpp"
#include "rvclab/generators.hpp"
#include "rvclab/rvc.hpp"
#include "rvclab/structure.hpp"

namespace rvclab {

namespace {

// Search budget for the exact fallback; past it the spanning-tree coloring
// is used.
constexpr std::uint64_t kFallbackBudget = 200'000;

// Nodes spent looking for a covering clique matching.
constexpr std::uint64_t kMatchingBudget = 100'000;

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

void require_free(const Graph& g, const std::vector<Graph>& patterns, const std::string& family) {
  if (auto hit = first_occurrence(g, patterns)) {
    throw PreconditionError("graph is not " + family + "-free (contains an induced copy of pattern " +
                            std::to_string(hit->pattern_index) + ")");
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

// Runs the verifier; on a failed construction check or verifier failure
// replaces the coloring by the exact (or spanning-tree) fallback.
ConstructiveColoring finish(const Graph& g, ConstructiveColoring cc,
                            std::vector<std::string> failures) {
  if (failures.empty()) {
    const auto report = is_rainbow_vertex_connected(g, cc.coloring);
    if (!report.connected) {
      failures.push_back("verifier failed at (" + std::to_string(report.failing_pair->first) +
                         "," + std::to_string(report.failing_pair->second) + ")");
    }
  }
  if (!failures.empty()) {
    RvcOptions opts;
    opts.deep = true;
    opts.node_budget = kFallbackBudget;
    const RvcResult exact = rvc_exact(g, opts);
    cc.coloring = exact.witness ? *exact.witness
                                : VertexColoring{std::vector<int>(g.order(), 0), 0};
    cc.escalation = Escalation::kExactFallback;
    cc.case_trace += "; " + join(failures) + "; exact-fallback";
    if (!exact.exhaustive) cc.case_trace += " (budget, spanning tree)";
  }
  cc.verified = is_rainbow_vertex_connected(g, cc.coloring).connected &&
                cc.coloring.palette <= cc.bound_claimed;
  return cc;
}

ConstructiveColoring small_diameter(const Graph& g, int d, int bound, std::string trace) {
  ConstructiveColoring cc;
  cc.bound_claimed = bound;
  cc.case_trace = std::move(trace);
  if (g.is_complete()) {
    cc.coloring = VertexColoring{std::vector<int>(g.order(), 0), 0};
  } else {
    cc.coloring = VertexColoring{std::vector<int>(g.order(), 0), 1};
  }
  std::vector<std::string> failures;
  if (d > 2) failures.push_back("diameter " + std::to_string(d) + " exceeds 2");
  return finish(g, std::move(cc), std::move(failures));
}

// Pairs (a, b), a outside the clique, b in it, forming an induced matching
// once clique edges are ignored; the a's are pairwise non-adjacent.
struct CliqueMatching {
  VertexMask outside = 0;  // A
  VertexMask inside = 0;   // B
  std::vector<Vertex> partners;
};

class MatchingSearch {
 public:
  MatchingSearch(const Graph& g, VertexMask clique, int t) : g_(g), clique_(clique), t_(t) {
    for (Vertex a : mask_to_vertices(g.all_vertices() & ~clique)) {
      for (Vertex b : mask_to_vertices(g.row(a) & clique)) candidates_.emplace_back(a, b);
    }
  }

  bool can_add(const CliqueMatching& m, std::pair<Vertex, Vertex> pair) const {
    const auto [a, b] = pair;
    if ((m.outside & bit(a)) || (m.inside & bit(b))) return false;
    if (g_.row(a) & (m.outside | m.inside)) return false;
    return !(g_.row(b) & m.outside);
  }

  void add(CliqueMatching& m, std::pair<Vertex, Vertex> pair) const {
    m.outside |= bit(pair.first);
    m.inside |= bit(pair.second);
    m.partners.push_back(pair.second);
  }

  // One pass in candidate order; a pair rejected once stays rejected, so the
  // result cannot be extended.
  CliqueMatching greedy() const {
    CliqueMatching m;
    for (const auto& pair : candidates_) {
      if (can_add(m, pair)) add(m, pair);
    }
    return m;
  }

  // Every outside vertex not in A sees A or B.
  bool covers(const CliqueMatching& m) const {
    const VertexMask rest = g_.all_vertices() & ~clique_ & ~m.outside;
    for (Vertex x : mask_to_vertices(rest)) {
      if (!(g_.row(x) & (m.outside | m.inside))) return false;
    }
    return true;
  }

  // A non-extendable matching with fewer than t pairs that covers, found by
  // depth-first search over pair subsets in candidate order.
  std::optional<CliqueMatching> covering(std::uint64_t budget) {
    budget_ = budget;
    CliqueMatching m;
    if (search(m, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool search(CliqueMatching& m, std::size_t from) {
    if (budget_ == 0) return false;
    --budget_;
    if (static_cast<int>(m.partners.size()) >= t_) return false;
    bool extendable = false;
    for (const auto& pair : candidates_) {
      if (can_add(m, pair)) {
        extendable = true;
        break;
      }
    }
    if (!extendable && covers(m)) {
      found_ = m;
      return true;
    }
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      if (!can_add(m, candidates_[i])) continue;
      CliqueMatching next = m;
      add(next, candidates_[i]);
      if (search(next, i + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  VertexMask clique_;
  int t_;
  std::vector<std::pair<Vertex, Vertex>> candidates_;
  std::uint64_t budget_ = 0;
  CliqueMatching found_;
};

void paint(std::vector<int>& colors, VertexMask set, int color) {
  for (Vertex v : mask_to_vertices(set)) colors[v] = color;
}

VertexMask layer_after(const Graph& g, VertexMask inner, VertexMask layer) {
  return neighborhood(g, layer) & ~inner & ~layer;
}

// Index of the class containing v, or -1.
int class_of(const std::vector<VertexMask>& classes, Vertex v) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if ((classes[i] >> v) & 1U) return static_cast<int>(i);
  }
  return -1;
}

// For every pair x, y in `group` at distance >= 3, every neighbor of x and
// every neighbor of y inside the classes must lie in different classes.
bool neighbors_in_distinct_classes(const Graph& g, const std::vector<std::vector<int>>& dist,
                                   VertexMask group, const std::vector<VertexMask>& classes,
                                   std::string& failure) {
  VertexMask all_classes = 0;
  for (VertexMask c : classes) all_classes |= c;
  const auto members = mask_to_vertices(group);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Vertex x = members[a];
      const Vertex y = members[b];
      if (dist[x][y] < 3) continue;
      for (Vertex xn : mask_to_vertices(g.row(x) & all_classes)) {
        for (Vertex yn : mask_to_vertices(g.row(y) & all_classes)) {
          if (class_of(classes, xn) == class_of(classes, yn)) {
            failure = "neighbors " + std::to_string(xn) + "," + std::to_string(yn) + " of " +
                      std::to_string(x) + "," + std::to_string(y) + " share a class";
            return false;
          }
        }
      }
    }
  }
  return true;
}

// Diameter 3 or 4: path colors 0..d, then ten classes of vertices around the
// two path ends.
ConstructiveColoring color_mid_diameter(const Graph& g, const DiameterPath& dp) {
  const int d = dp.length;
  const PathPartition part = classify_against_path(g, dp.path);
  const auto dist = distance_matrix(g);

  const VertexMask layer1 = part.near & ~part.on_path;
  const VertexMask layer2 = layer_after(g, part.on_path, layer1);
  const VertexMask layer3 = layer_after(g, part.on_path | layer1, layer2);

  const VertexMask start = part.single[0] | part.edge[1] | part.bridge[1] | part.triple[1];
  const VertexMask end = part.single[d] | part.edge[d] | part.bridge[d - 1] | part.triple[d - 1];
  const VertexMask middle = layer1 & ~start & ~end;

  VertexMask start_far = 0;  // second layer anchored only at the start side
  VertexMask end_far = 0;
  for (Vertex v : mask_to_vertices(layer2)) {
    const VertexMask anchors = g.row(v) & layer1;
    if ((anchors & ~start) == 0) start_far |= bit(v);
    if ((anchors & ~end) == 0) end_far |= bit(v);
  }
  const VertexMask rest_far = layer2 & ~start_far & ~end_far;

  std::vector<std::string> failures;
  if (neighborhood(g, middle) & layer2) failures.push_back("middle class touches second layer");
  if (neighborhood(g, rest_far) & layer3) failures.push_back("mixed second layer reaches third");
  for (Vertex z : mask_to_vertices(layer3)) {
    const VertexMask anchors = g.row(z) & layer2;
    if ((anchors & ~start_far) == 0 || (anchors & ~end_far) == 0) {
      failures.push_back("third-layer vertex " + std::to_string(z) + " hangs off one end");
      break;
    }
  }

  const std::array<VertexMask, 10> classes = {
      part.single[0],     part.edge[1],  part.bridge[1], part.triple[1],
      part.triple[d - 1], part.bridge[d - 1], part.edge[d],   part.single[d],
      start_far,          end_far};
  std::vector<int> colors(g.order(), 0);
  for (int i = 0; i <= d; ++i) colors[dp.path[i]] = i;
  for (int c = 0; c < 10; ++c) paint(colors, classes[c], d + 1 + c);

  std::string failure;
  const std::vector<VertexMask> start_classes(classes.begin(), classes.begin() + 4);
  const std::vector<VertexMask> end_classes(classes.begin() + 4, classes.begin() + 8);
  if (!neighbors_in_distinct_classes(g, dist, start_far, start_classes, failure) ||
      !neighbors_in_distinct_classes(g, dist, end_far, end_classes, failure)) {
    failures.push_back(failure);
  }

  ConstructiveColoring cc;
  cc.bound_claimed = d + 11;
  cc.case_trace = d == 3 ? "s122-n/diam3/end-classes" : "s122-n/diam4/end-classes";
  cc.coloring = make_coloring(std::move(colors));
  return finish(g, std::move(cc), std::move(failures));
}

ConstructiveColoring color_barrier_cut(const Graph& g, const DiameterPath& dp,
                                       const PathPartition& part) {
  const int d = dp.length;
  std::vector<std::string> failures;
  if ((part.near | neighborhood(g, part.near)) != g.all_vertices()) {
    failures.push_back("near set plus its neighborhood misses vertices");
  }
  const std::vector<VertexMask> classes = {part.single[0], part.edge[1], part.triple[1],
                                           part.triple[d - 1], part.edge[d], part.single[d]};
  std::string failure;
  if (!neighbors_in_distinct_classes(g, distance_matrix(g), part.far, classes, failure)) {
    failures.push_back(failure);
  }

  std::vector<int> colors(g.order(), 0);
  for (int i = 0; i <= d; ++i) colors[dp.path[i]] = i;
  for (int c = 0; c < 6; ++c) paint(colors, classes[c], d + 1 + c);

  ConstructiveColoring cc;
  cc.bound_claimed = d + 11;
  cc.case_trace = "s122-n/long/barrier-separates";
  cc.coloring = make_coloring(std::move(colors));
  return finish(g, std::move(cc), std::move(failures));
}

ConstructiveColoring color_escape_cycle(const Graph& g, const DiameterPath& dp,
                                        const PathPartition& part) {
  const int d = dp.length;
  const auto& p = dp.path;
  const auto back = shortest_path(g, p[d], p[0], g.all_vertices() & ~part.barrier);
  const int ell = static_cast<int>(back.size()) - 1;

  // v_1 .. v_{d-1}, then v_d unless v_{d-1} sees the first return vertex,
  // the return path interior, then v_0 unless the last return vertex sees v_1.
  std::vector<Vertex> cycle(p.begin() + 1, p.begin() + d);
  if (!g.adjacent(p[d - 1], back[1])) cycle.push_back(p[d]);
  cycle.insert(cycle.end(), back.begin() + 1, back.end() - 1);
  if (!g.adjacent(back[ell - 1], p[1])) cycle.push_back(p[0]);

  const int len = static_cast<int>(cycle.size());
  EscapeCycle escape;
  escape.cycle = cycle;
  escape.return_length = ell;
  escape.chordless = true;
  for (int i = 0; i < len && escape.chordless; ++i) {
    for (int j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.adjacent(cycle[i], cycle[j])) {
        escape.chordless = false;
        break;
      }
    }
  }

  const VertexColoring halves = halved_cycle_coloring(len);
  std::vector<int> colors(g.order(), 0);
  for (int i = 0; i < len; ++i) colors[cycle[i]] = halves.colors[i];

  const VertexMask on_cycle = vertices_to_mask(cycle);
  escape.dominating = true;
  bool two_colors = true;
  for (Vertex v : mask_to_vertices(g.all_vertices() & ~on_cycle)) {
    const auto touch = mask_to_vertices(g.row(v) & on_cycle);
    if (touch.size() < 2) escape.dominating = false;
    const bool mixed = std::any_of(touch.begin(), touch.end(),
                                   [&](Vertex w) { return colors[w] != colors[touch.front()]; });
    if (!mixed) two_colors = false;
  }

  std::vector<std::string> failures;
  if (!escape.chordless) failures.push_back("escape cycle has a chord");
  if (ell > d + 2) failures.push_back("return path longer than d + 2");
  if (!escape.dominating) failures.push_back("escape cycle does not doubly dominate");
  if (escape.dominating && !two_colors) {
    failures.push_back("off-cycle vertex sees a single cycle color");
  }

  ConstructiveColoring cc;
  cc.bound_claimed = d + 11;
  cc.case_trace = "s122-n/long/escape-cycle";
  cc.coloring = VertexColoring{std::move(colors), halves.palette};
  cc.escape_cycle = std::move(escape);
  return finish(g, std::move(cc), std::move(failures));
}

}  // namespace

ConstructiveColoring color_p4_free(const Graph& g) {
  require_connected(g);
  require_free(g, {generate(FamilySpec::path(4))}, "P4");
  const int d = diameter(g);
  return small_diameter(g, d, std::max(d - 1, 0), "p4/diam<=2");
}

ConstructiveColoring color_p5_kth_free(const Graph& g, int t) {
  if (t < 4) throw PreconditionError("color_p5_kth_free needs t >= 4");
  require_connected(g);
  std::vector<Graph> patterns{generate(FamilySpec::path(5))};
  if (2 * t <= g.order()) patterns.push_back(generate(FamilySpec::g2(t)));
  require_free(g, patterns, "(P5, K" + std::to_string(t) + "h)");
  const int d = diameter(g);

  ConstructiveColoring cc;
  cc.bound_claimed = d + t;
  std::vector<int> colors(g.order(), 0);
  std::vector<std::string> failures;

  std::optional<DominatingStructure> dom;
  if (g.is_complete()) {
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    dom = DominatingStructure{DominatingKind::kClique, all, true};
  } else {
    dom = find_dominating_clique_or_p3(g);
  }
  if (!dom) throw std::logic_error("P5-free graph without a dominating clique or P3");

  if (dom->kind == DominatingKind::kP3) {
    cc.case_trace = "p5-kth/dominating-p3";
    for (int i = 0; i < 3; ++i) colors[dom->vertices[i]] = i;
  } else {
    cc.case_trace = "p5-kth/dominating-clique";
    const VertexMask clique = vertices_to_mask(dom->vertices);
    MatchingSearch search(g, clique, t);
    CliqueMatching m = search.greedy();
    if (!search.covers(m) || static_cast<int>(m.partners.size()) >= t) {
      if (auto better = search.covering(kMatchingBudget)) m = *better;
    }
    const VertexMask matched_out = m.outside;
    const VertexMask matched_in = m.inside;
    const std::vector<Vertex>& partners = m.partners;
    const int pairs = static_cast<int>(partners.size());
    if (pairs >= t) failures.push_back("matching has " + std::to_string(pairs) + " >= t pairs");
    if (!search.covers(m)) failures.push_back("an outside vertex misses the matching");
    for (int i = 0; i < pairs; ++i) colors[partners[i]] = i;
    paint(colors, matched_out, pairs);
    paint(colors, clique & ~matched_in, pairs + 1);
  }
  cc.coloring = make_coloring(std::move(colors));
  return finish(g, std::move(cc), std::move(failures));
}

ConstructiveColoring color_s122_n_free(const Graph& g) {
  require_connected(g);
  require_free(g, {generate(FamilySpec::spider(1, 2, 2)), generate(FamilySpec::net(1, 1, 1))},
               "(S122, N)");
  const DiameterPath dp = diameter_and_path(g);
  const int d = dp.length;
  if (d <= 2) return small_diameter(g, d, d + 11, "s122-n/diam<=2");
  if (d <= 4) return color_mid_diameter(g, dp);

  const PathPartition part = classify_against_path(g, dp.path);
  const VertexMask open = g.all_vertices() & ~part.barrier;
  const bool separated = shortest_path(g, dp.path.front(), dp.path.back(), open).empty();
  return separated ? color_barrier_cut(g, dp, part) : color_escape_cycle(g, dp, part);
}

std::string to_string(Escalation e) {
  return e == Escalation::kNone ? "none" : "exact-fallback";
}

}  // namespace rvclab
