// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rvclab/catalog.hpp"
#include "rvclab/colorers.hpp"
#include "rvclab/detect.hpp"
#include "rvclab/generators.hpp"
#include "rvclab/rvc.hpp"
#include "rvclab/structure.hpp"

namespace {

using namespace rvclab;

constexpr std::uint64_t kSeed = 0x5eed2024;

Graph named(const char* name) { return generate(parse_family_name(name)); }

// Collects mismatches for one criterion; the first few are printed.
class Outcome {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 5) notes_ << "\n    - " << what;
  }
  void note(const std::string& what) { summary_ += (summary_.empty() ? "" : ", ") + what; }
  bool ok() const { return failures_ == 0; }
  std::string text() const {
    std::string s = summary_;
    if (failures_ > 0) s += (s.empty() ? "" : ", ") + std::to_string(failures_) + " failures";
    return s + notes_.str();
  }

 private:
  int failures_ = 0;
  std::string summary_;
  std::ostringstream notes_;
};

std::vector<Graph> catalog_up_to(int max_order, const GraphFilter& keep = {}) {
  std::vector<Graph> out;
  for (auto& level : connected_catalog(max_order, keep)) {
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void cycle_table(Outcome& out, bool deep) {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 3; n <= 12; ++n) {
    const auto r = rvc_exact(generate(FamilySpec::cycle(n)));
    if (!r.exhaustive || r.value != cycle_rvc(n)) {
      out.fail("C" + std::to_string(n) + ": got " + std::to_string(r.value));
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 300) out.fail("n <= 12 took " + std::to_string(secs) + " s");
  out.note("C3..C12 exact in " + std::to_string(static_cast<int>(secs * 1000)) + " ms");

  // Stored witnesses for the two odd cycles; the even ones are halved.
  const std::vector<int> c13 = {0, 1, 3, 2, 4, 5, 0, 3, 2, 1, 4, 3, 2};
  const std::vector<int> c15 = {0, 1, 3, 4, 6, 2, 5, 1, 4, 0, 6, 3, 5, 4, 2};
  for (int n = 13; n <= 16; ++n) {
    const Graph c = generate(FamilySpec::cycle(n));
    const VertexColoring w = n == 13   ? make_coloring(c13)
                             : n == 15 ? make_coloring(c15)
                                       : halved_cycle_coloring(n);
    if (w.palette != cycle_rvc(n) || !is_rainbow_vertex_connected(c, w).connected) {
      out.fail("C" + std::to_string(n) + ": witness does not verify at " +
               std::to_string(cycle_rvc(n)) + " colors");
    }
    if (cycle_rvc(n) < diameter(c) - 1) out.fail("C" + std::to_string(n) + ": below diam - 1");
    if (deep) {
      const auto r = rvc_exact(c, {.deep = true, .node_budget = 0});
      if (!r.exhaustive || r.value != cycle_rvc(n)) {
        out.fail("C" + std::to_string(n) + " deep: got " + std::to_string(r.value));
      }
    }
  }
  out.note(deep ? "C13..C16 refuted exhaustively" : "C13..C16 witnesses verified");
}

void extremal_families(Outcome& out) {
  for (int t = 4; t <= 6; ++t) {
    for (const auto& s :
         {FamilySpec::g1(t), FamilySpec::g2(t), FamilySpec::g3(t), FamilySpec::g4(t)}) {
      const Graph g = generate(s);
      const auto e = family_expectations(s);
      if (g.order() != e.order || diameter(g) != e.diameter) {
        out.fail(describe(s) + ": order/diameter mismatch");
      }
    }
    const int expected_diam[4] = {4, 3, 2 * t - 1, t / 2 + 2};
    const FamilySpec specs[4] = {FamilySpec::g1(t), FamilySpec::g2(t), FamilySpec::g3(t),
                                 FamilySpec::g4(t)};
    for (int f = 0; f < 4; ++f) {
      if (family_expectations(specs[f]).diameter != expected_diam[f]) {
        out.fail(describe(specs[f]) + ": expected diameter table");
      }
    }
  }
  auto exact = [](const FamilySpec& s) { return rvc_exact(generate(s)); };
  for (int t = 4; t <= 5; ++t) {
    if (exact(FamilySpec::g2(t)).value != t) out.fail("G2^" + std::to_string(t));
    if (exact(FamilySpec::g4(t)).value != t) out.fail("G4^" + std::to_string(t));
  }
  const int g14 = exact(FamilySpec::g1(4)).value;
  // Settled by exhaustive search and an independent brute force: t + 1.
  if (g14 != 5) out.fail("G1^4 = " + std::to_string(g14));
  out.note("G1^4 = " + std::to_string(g14) + (g14 == 4 ? " (= t)" : g14 == 5 ? " (= t+1)" : ""));
  const auto g32 = exact(FamilySpec::g3(2));
  const auto g33 = exact(FamilySpec::g3(3));
  if (g32.value < 3) out.fail("G3^2 = " + std::to_string(g32.value));
  if (g33.value < 6) out.fail("G3^3 = " + std::to_string(g33.value));
  out.note("G3^2 = " + std::to_string(g32.value) + ", G3^3 = " + std::to_string(g33.value));
}

void free_detection(Outcome& out) {
  struct Case {
    const char* pattern;
    Graph host;
    const char* host_name;
  };
  const std::vector<Case> cases = {
      {"claw", generate(FamilySpec::g2(6)), "G2^6"}, {"P5", generate(FamilySpec::g2(6)), "G2^6"},
      {"N", generate(FamilySpec::g4(8)), "G4^8"},    {"S122", named("C7"), "C7"},
      {"N", named("C7"), "C7"},
  };
  for (const auto& c : cases) {
    const Graph p = named(c.pattern);
    const bool fast = !find_induced(p, c.host).has_value();
    const bool brute = !oracle::contains_induced_by_subsets(p, c.host);
    if (!fast || !brute) {
      out.fail(std::string(c.host_name) + " vs " + c.pattern + ": fast free=" +
               std::to_string(fast) + " brute free=" + std::to_string(brute));
    }
  }
  out.note(std::to_string(cases.size()) + " freeness facts confirmed by subset enumeration");
}

void verifier_equivalence(Outcome& out) {
  std::mt19937_64 rng(kSeed);
  long instances = 0;
  for (const Graph& g : catalog_up_to(7)) {
    for (int trial = 0; trial < 50; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 4);
      std::vector<int> colors(g.order());
      for (int& c : colors) c = static_cast<int>(rng() % k);
      ++instances;
      if (is_rainbow_vertex_connected(g, VertexColoring{colors, k}).connected !=
          oracle::rainbow_connected_by_paths(g, colors)) {
        out.fail(serialize_graph6(g));
      }
    }
  }
  out.note(std::to_string(instances) + " instances");
}

struct SweepStats {
  long graphs = 0;
  long escalations = 0;
};

void check_colorer(Outcome& out, SweepStats& stats, const Graph& g, const ConstructiveColoring& c,
                   int slack, bool escalation_is_failure) {
  ++stats.graphs;
  const bool escalated = c.escalation != Escalation::kNone;
  stats.escalations += escalated ? 1 : 0;
  if (!c.verified || c.coloring.palette > diameter(g) + slack ||
      !is_rainbow_vertex_connected(g, c.coloring).connected ||
      (escalated && escalation_is_failure)) {
    out.fail(serialize_graph6(g) + " palette " + std::to_string(c.coloring.palette) + " [" +
             c.case_trace + "]");
  }
}

void colorer_sweeps(Outcome& out) {
  const std::vector<Graph> p5k = {named("P5"), named("K4h")};
  const std::vector<Graph> sn = {named("S122"), named("N")};
  const auto free_of = [](const std::vector<Graph>& f) {
    return [&f](const Graph& g) { return is_family_free(g, f); };
  };

  SweepStats a, b;
  for (const Graph& g : catalog_up_to(8, free_of(p5k))) {
    check_colorer(out, a, g, color_p5_kth_free(g, 4), 4, true);
  }
  for (const Graph& g : catalog_up_to(8, free_of(sn))) {
    check_colorer(out, b, g, color_s122_n_free(g), 11, true);
  }
  out.note("catalog: " + std::to_string(a.graphs) + " (P5,K4h)-free, " +
           std::to_string(b.graphs) + " (S122,N)-free");

  std::mt19937_64 rng(kSeed);
  const SamplerOptions opts{.min_order = 9, .max_order = 20};
  SweepStats ra, rb;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = sample_free_graph(rng, p5k, opts);
    check_colorer(out, ra, g, color_p5_kth_free(g, 4), 4, false);
  }
  for (int i = 0; i < 1000; ++i) {
    const Graph g = sample_free_graph(rng, sn, opts);
    check_colorer(out, rb, g, color_s122_n_free(g), 11, false);
  }
  out.note("random: 2x1000, escalations " + std::to_string(ra.escalations) + " + " +
           std::to_string(rb.escalations));
}

void pair_classifier(Outcome& out) {
  struct Case {
    const char* x;
    const char* y;
    PairVerdict verdict;
    PairClause clause;
  };
  const std::vector<Case> cases = {
      {"P5", "K5h", PairVerdict::kBounded, PairClause::kP5AndPendantComplete},
      {"S122", "N", PairVerdict::kBounded, PairClause::kSpiderAndNet},
      {"claw", "N", PairVerdict::kBounded, PairClause::kSpiderAndNet},
      {"P5", "P4", PairVerdict::kBounded, PairClause::kInducedInP4},
      {"K1,4", "C6", PairVerdict::kUnbounded, PairClause::kNone},
      {"P6", "K4h", PairVerdict::kUnbounded, PairClause::kNone},
      {"S122", "N2,1,1", PairVerdict::kUnbounded, PairClause::kNone},
  };
  for (const auto& c : cases) {
    const auto got = classify_pair(named(c.x), named(c.y));
    if (got.verdict != c.verdict || got.clause != c.clause) {
      out.fail(std::string(c.x) + "/" + c.y + ": " + to_string(got.verdict) + " via " +
               to_string(got.clause));
    }
  }
  out.note(std::to_string(cases.size()) + " pairs");
}

void partition_lemma(Outcome& out) {
  const std::vector<Graph> sn = {named("S122"), named("N")};
  long graphs = 0, paths = 0;
  for (const Graph& g : catalog_up_to(9, [&](const Graph& h) { return is_family_free(h, sn); })) {
    const auto dist = distance_matrix(g);
    bool counted = false;
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) {
        if (u == v || dist[u][v] < 4) continue;
        const auto part = classify_against_path(g, shortest_path(g, u, v));
        const auto report = check_partition_lemma(g, part);
        ++paths;
        if (!counted) ++graphs, counted = true;
        for (int i = 0; i < 5; ++i) {
          if (!report.properties[i].holds) {
            out.fail(serialize_graph6(g) + " path " + std::to_string(u) + "-" +
                     std::to_string(v) + ": " + property_name(i));
          }
        }
      }
    }
  }
  out.note(std::to_string(graphs) + " graphs, " + std::to_string(paths) + " paths");
}

void sandwich(Outcome& out) {
  long graphs = 0;
  for (const Graph& g : catalog_up_to(8)) {
    if (g.is_complete()) continue;
    ++graphs;
    const auto r = rvc_exact(g);
    const int d = diameter(g);
    if (!r.exhaustive || r.value < d - 1 || r.value > g.order() - 2 || (d == 2 && r.value != 1)) {
      out.fail(serialize_graph6(g) + ": rvc " + std::to_string(r.value) + ", diam " +
               std::to_string(d));
    }
  }
  out.note(std::to_string(graphs) + " non-complete graphs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria run"};
  bool deep = false;
  app.add_flag("--deep", deep, "Refute C13..C16 exhaustively");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"cycle table", [deep](Outcome& o) { cycle_table(o, deep); }},
      {"extremal families", extremal_families},
      {"free-family detection", free_detection},
      {"verifier oracle equivalence", verifier_equivalence},
      {"colorer soundness sweeps", colorer_sweeps},
      {"pair classifier", pair_classifier},
      {"partition lemma on (S122,N)-free catalog", partition_lemma},
      {"diameter sandwich", sandwich},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.ok() ? 0 : 1;
    std::cout << (o.ok() ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": "
              << o.text() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
