#ifndef RVCLAB_COLORERS_HPP_
#define RVCLAB_COLORERS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rvclab/graph.hpp"

namespace rvclab {

enum class Escalation { kNone, kExactFallback };

// Chordless cycle built from the interior of a diameter path and a shortest
// return path between its ends that avoids the barrier set.
struct EscapeCycle {
  std::vector<Vertex> cycle;
  int return_length = 0;  // edges of the return path
  bool chordless = false;
  bool dominating = false;
};

struct ConstructiveColoring {
  VertexColoring coloring;
  // Palette the construction promises: diam + constant for the family.
  int bound_claimed = 0;
  // Branch taken, e.g. "s122-n/long/escape-cycle". Failed checks and the
  // fallback are appended after "; ".
  std::string case_trace;
  // The coloring passed the rainbow verifier and fits within bound_claimed.
  bool verified = false;
  Escalation escalation = Escalation::kNone;
  std::optional<EscapeCycle> escape_cycle;
};

// Connected P4-free graphs have diameter <= 2, so one color suffices
// (palette 0 for complete graphs).
ConstructiveColoring color_p4_free(const Graph& g);

// Connected (P5, K_t^h)-free graphs, t >= 4: color a dominating P3, or a
// dominating clique together with a non-extendable induced matching between
// the clique and an independent set outside it.
ConstructiveColoring color_p5_kth_free(const Graph& g, int t);

// Connected (S_{1,2,2}, N)-free graphs; branches on the diameter d:
//   d <= 2   one color
//   d = 3, 4 path colors plus ten neighbor classes (<= d + 11)
//   d >= 5   barrier separates the path ends: path plus six end classes
//            (<= d + 7); otherwise halve an escape cycle (<= d + 1)
ConstructiveColoring color_s122_n_free(const Graph& g);

std::string to_string(Escalation e);

}  // namespace rvclab

#endif  // RVCLAB_COLORERS_HPP_
