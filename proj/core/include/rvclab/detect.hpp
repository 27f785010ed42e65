#ifndef RVCLAB_DETECT_HPP_
#define RVCLAB_DETECT_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rvclab/graph.hpp"

namespace rvclab {

// embedding[p] is the host vertex assigned to pattern vertex p.
using Embedding = std::vector<Vertex>;

// Finds an induced copy of `pattern` in `host`. Pattern vertices are placed
// in a fixed order (highest degree first, then by number of already-placed
// neighbors); host candidates are tried in ascending order, so the result is
// the first embedding in that search order.
std::optional<Embedding> find_induced(const Graph& pattern, const Graph& host);

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

bool are_isomorphic(const Graph& a, const Graph& b);

bool is_family_free(const Graph& host, std::span<const Graph> patterns);

// First pattern (by index) that occurs in host together with its embedding.
struct Occurrence {
  std::size_t pattern_index = 0;
  Embedding embedding;
};
std::optional<Occurrence> first_occurrence(const Graph& host, std::span<const Graph> patterns);

enum class PairVerdict { kBounded, kUnbounded };

enum class PairClause {
  kNone,
  kInducedInP4,           // one of the pair is an induced subgraph of P_4
  kP5AndPendantComplete,  // X = P_5 and Y is induced in some K_t^h, t >= 4
  kSpiderAndNet,          // X induced in S_{1,2,2} and Y induced in N
};

struct PairClass {
  PairVerdict verdict = PairVerdict::kUnbounded;
  PairClause clause = PairClause::kNone;
  // True when the clause matched with the roles of x and y exchanged.
  bool swapped = false;
  // Smallest t with Y induced in K_t^h, for kP5AndPendantComplete.
  std::optional<int> t;
};

// Decides whether forbidding the connected pair (x, y) bounds rvc by
// diam + constant. Clauses are tried in the order listed in PairClause, each
// with (x, y) first and then (y, x); the first match is reported.
PairClass classify_pair(const Graph& x, const Graph& y);

std::string to_string(PairVerdict v);
std::string to_string(PairClause c);

}  // namespace rvclab

#endif  // RVCLAB_DETECT_HPP_
