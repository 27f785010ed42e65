#include "rvclab/detect.hpp"

#include <algorithm>
#include <bit>

#include "rvclab/generators.hpp"

namespace rvclab {

namespace {

std::vector<Vertex> placement_order(const Graph& pattern) {
  const int n = pattern.order();
  std::vector<Vertex> order;
  order.reserve(n);
  VertexMask placed = 0;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    int best_links = -1;
    for (Vertex v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) continue;
      const int links = std::popcount(pattern.row(v) & placed);
      if (best < 0 || links > best_links ||
          (links == best_links && pattern.degree(v) > pattern.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

class InducedMatcher {
 public:
  InducedMatcher(const Graph& pattern, const Graph& host)
      : pattern_(pattern), host_(host), order_(placement_order(pattern)),
        image_(pattern.order(), -1) {
    // For each position, the earliest already-placed neighbor (if any) is the
    // anchor that restricts host candidates to its image's neighborhood.
    anchor_.assign(order_.size(), -1);
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
      for (std::size_t prev = 0; prev < pos; ++prev) {
        if (pattern_.adjacent(order_[pos], order_[prev])) {
          anchor_[pos] = static_cast<int>(prev);
          break;
        }
      }
    }
  }

  std::optional<Embedding> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (extend(0, 0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t pos, VertexMask used) {
    if (pos == order_.size()) return true;
    const Vertex p = order_[pos];
    VertexMask candidates = host_.all_vertices() & ~used;
    if (anchor_[pos] >= 0) candidates &= host_.row(image_[order_[anchor_[pos]]]);
    while (candidates) {
      const Vertex h = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (host_.degree(h) < pattern_.degree(p)) continue;
      if (!consistent(pos, p, h)) continue;
      image_[p] = h;
      if (extend(pos + 1, used | bit(h))) return true;
      image_[p] = -1;
    }
    return false;
  }

  bool consistent(std::size_t pos, Vertex p, Vertex h) const {
    for (std::size_t prev = 0; prev < pos; ++prev) {
      const Vertex q = order_[prev];
      if (pattern_.adjacent(p, q) != host_.adjacent(h, image_[q])) return false;
    }
    return true;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::vector<Vertex> order_;
  std::vector<int> anchor_;
  Embedding image_;
};

bool induced_in(const Graph& small, const Graph& big) {
  return find_induced(small, big).has_value();
}

bool is_p5(const Graph& g) {
  static const Graph p5 = generate(FamilySpec::path(5));
  return are_isomorphic(g, p5);
}

std::optional<int> pendant_complete_host(const Graph& y) {
  const int limit = std::max(4, y.order());
  for (int t = 4; t <= limit && 2 * t <= kMaxVertices; ++t) {
    if (induced_in(y, generate(FamilySpec::g2(t)))) return t;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& pattern, const Graph& host) {
  return InducedMatcher(pattern, host).run();
}

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
  if (static_cast<int>(e.size()) != pattern.order()) return false;
  VertexMask used = 0;
  for (Vertex h : e) {
    if (h < 0 || h >= host.order() || ((used >> h) & 1U)) return false;
    used |= bit(h);
  }
  for (Vertex u = 0; u < pattern.order(); ++u) {
    for (Vertex v = u + 1; v < pattern.order(); ++v) {
      if (pattern.adjacent(u, v) != host.adjacent(e[u], e[v])) return false;
    }
  }
  return true;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && induced_in(a, b);
}

std::optional<Occurrence> first_occurrence(const Graph& host, std::span<const Graph> patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (auto e = find_induced(patterns[i], host)) return Occurrence{i, std::move(*e)};
  }
  return std::nullopt;
}

bool is_family_free(const Graph& host, std::span<const Graph> patterns) {
  if (patterns.empty()) throw PreconditionError("is_family_free needs at least one pattern");
  return !first_occurrence(host, patterns).has_value();
}

PairClass classify_pair(const Graph& x, const Graph& y) {
  if (!is_connected(x) || !is_connected(y)) {
    throw PreconditionError("classify_pair needs connected graphs");
  }
  static const Graph p4 = generate(FamilySpec::path(4));
  static const Graph spider = generate(FamilySpec::spider(1, 2, 2));
  static const Graph net = generate(FamilySpec::net(1, 1, 1));

  for (bool swapped : {false, true}) {
    const Graph& a = swapped ? y : x;
    if (induced_in(a, p4)) {
      return {PairVerdict::kBounded, PairClause::kInducedInP4, swapped, std::nullopt};
    }
  }
  for (bool swapped : {false, true}) {
    const Graph& a = swapped ? y : x;
    const Graph& b = swapped ? x : y;
    if (is_p5(a)) {
      if (auto t = pendant_complete_host(b)) {
        return {PairVerdict::kBounded, PairClause::kP5AndPendantComplete, swapped, t};
      }
    }
  }
  for (bool swapped : {false, true}) {
    const Graph& a = swapped ? y : x;
    const Graph& b = swapped ? x : y;
    if (induced_in(a, spider) && induced_in(b, net)) {
      return {PairVerdict::kBounded, PairClause::kSpiderAndNet, swapped, std::nullopt};
    }
  }
  return {};
}

std::string to_string(PairVerdict v) {
  return v == PairVerdict::kBounded ? "bounded" : "unbounded";
}

std::string to_string(PairClause c) {
  switch (c) {
    case PairClause::kNone: return "none";
    case PairClause::kInducedInP4: return "induced-in-P4";
    case PairClause::kP5AndPendantComplete: return "P5-and-induced-in-Kth";
    case PairClause::kSpiderAndNet: return "induced-in-S122-and-induced-in-N";
  }
  return "?";
}

}  // namespace rvclab
