// rvclab command-line front end.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_io.hpp"
#include "rvclab/catalog.hpp"
#include "rvclab/colorers.hpp"
#include "rvclab/detect.hpp"
#include "rvclab/generators.hpp"
#include "rvclab/parallel.hpp"
#include "rvclab/rvc.hpp"
#include "rvclab/structure.hpp"

namespace rvclab::cli {
namespace {

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0, r = 0, i = 0, j = 0, k = 0, t = 0;
  int count = 1;
};

FamilySpec gen_spec(const GenArgs& a, int step) {
  static const std::map<std::string, Family> names = {
      {"path", Family::kPath},     {"P", Family::kPath},
      {"cycle", Family::kCycle},   {"C", Family::kCycle},
      {"complete", Family::kComplete}, {"K", Family::kComplete},
      {"star", Family::kStar},     {"spider", Family::kSpider},
      {"S", Family::kSpider},      {"net", Family::kNet},
      {"N", Family::kNet},         {"g1", Family::kStarSubdivision},
      {"g2", Family::kPendantComplete}, {"g3", Family::kUniformNet},
      {"g4", Family::kPendantCycle},
  };
  const auto it = names.find(a.family);
  if (it == names.end()) throw FormatError("unknown family '" + a.family + "'");
  FamilySpec s{it->second, a.n, a.r, a.i, a.j, a.k, a.t};
  // --count walks the leading parameter upward.
  switch (s.family) {
    case Family::kPath:
    case Family::kCycle:
    case Family::kComplete: s.n += step; break;
    case Family::kStar: s.r += step; break;
    case Family::kSpider:
    case Family::kNet: s.k += step; break;
    default: s.t += step; break;
  }
  return s;
}

int cmd_gen(const GenArgs& a) {
  if (a.count < 1) throw PreconditionError("--count must be >= 1");
  for (int step = 0; step < a.count; ++step) {
    std::cout << serialize_graph6(generate(gen_spec(a, step))) << '\n';
  }
  return kOk;
}

// ---- shared input ---------------------------------------------------------

struct Input {
  std::string path = "-";
  std::string graph6;

  std::vector<Graph> graphs() const {
    if (!graph6.empty()) return {parse_graph6(graph6)};
    return read_graphs(path);
  }
  Graph first() const { return single_graph(graph6, path); }
};

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("-i,--input", in.path, "graph6 file, one graph per line ('-' = stdin)");
  sub->add_option("-g,--graph", in.graph6, "graph6 string given inline");
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph " + serialize_graph6(g) + " is disconnected");
}

// ---- rvc ------------------------------------------------------------------

struct RvcArgs {
  Input in;
  bool deep = false;
  int max_palette = kMaxVertices;
  std::uint64_t budget = RvcOptions{}.node_budget;
};

int cmd_rvc(const RvcArgs& a) {
  for (const Graph& g : a.in.graphs()) {
    require_connected(g);
    const RvcResult r =
        rvc_exact(g, {.max_palette = a.max_palette, .deep = a.deep, .node_budget = a.budget});
    Json j;
    j["value"] = r.value;
    j["exhaustive"] = r.exhaustive;
    j["lower_bound"] = r.lower_bound;
    j["witness"] = r.witness ? coloring_json(*r.witness) : Json(nullptr);
    j["graph6"] = serialize_graph6(g);
    print_json(std::cout, j);
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  Input in;
  std::string coloring;
};

int cmd_verify(const VerifyArgs& a) {
  const Graph g = a.in.first();
  const VertexColoring c = parse_coloring(a.coloring);
  require_coloring_fits(g, c);
  require_connected(g);
  const auto report = is_rainbow_vertex_connected(g, c, configured_threads());
  Json j;
  j["connected"] = report.connected;
  j["failing_pair"] = report.failing_pair
                          ? Json::array({report.failing_pair->first, report.failing_pair->second})
                          : Json(nullptr);
  j["palette"] = c.palette;
  print_json(std::cout, j);
  return kOk;
}

// ---- free -----------------------------------------------------------------

struct FreeArgs {
  Input in;
  std::vector<std::string> patterns;
};

int cmd_free(const FreeArgs& a) {
  std::vector<Graph> patterns;
  for (const auto& p : a.patterns) patterns.push_back(parse_pattern(p));
  for (const Graph& g : a.in.graphs()) {
    const auto occ = first_occurrence(g, patterns);
    Json j;
    j["graph6"] = serialize_graph6(g);
    j["free"] = !occ.has_value();
    j["pattern"] = occ ? Json(a.patterns[occ->pattern_index]) : Json(nullptr);
    j["embedding"] = occ ? Json(occ->embedding) : Json(nullptr);
    print_json(std::cout, j);
  }
  return kOk;
}

// ---- classify-pair --------------------------------------------------------

struct PairArgs {
  std::string x, y;
};

int cmd_classify(const PairArgs& a) {
  const PairClass c = classify_pair(parse_pattern(a.x), parse_pattern(a.y));
  Json j;
  j["x"] = a.x;
  j["y"] = a.y;
  j["verdict"] = to_string(c.verdict);
  j["clause"] = to_string(c.clause);
  j["swapped"] = c.swapped;
  j["t"] = c.t ? Json(*c.t) : Json(nullptr);
  print_json(std::cout, j);
  return kOk;
}

// ---- color ----------------------------------------------------------------

struct ColorArgs {
  Input in;
  std::string family;
  int t = 4;
};

ConstructiveColoring run_colorer(const std::string& family, const Graph& g, int t) {
  if (family == "p4") return color_p4_free(g);
  if (family == "p5-kth") return color_p5_kth_free(g, t);
  if (family == "s122-n") return color_s122_n_free(g);
  throw FormatError("unknown colorer family '" + family + "'");
}

int cmd_color(const ColorArgs& a) {
  for (const Graph& g : a.in.graphs()) {
    const auto cc = run_colorer(a.family, g, a.t);
    Json j;
    j["graph6"] = serialize_graph6(g);
    j["family"] = a.family;
    j["palette"] = cc.coloring.palette;
    j["bound"] = cc.bound_claimed;
    j["verified"] = cc.verified;
    j["escalation"] = to_string(cc.escalation);
    j["case_trace"] = cc.case_trace;
    j["coloring"] = coloring_json(cc.coloring);
    print_json(std::cout, j);
  }
  return kOk;
}

// ---- lemma-check ----------------------------------------------------------

struct LemmaArgs {
  Input in;
  std::string path;
};

int cmd_lemma(const LemmaArgs& a) {
  for (const Graph& g : a.in.graphs()) {
    std::vector<Vertex> path;
    if (a.path.empty()) {
      path = diameter_and_path(g).path;
    } else {
      for (const auto& item : split_list(a.path)) {
        try {
          path.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw FormatError("bad path vertex '" + item + "'");
        }
      }
    }
    const auto part = classify_against_path(g, path);
    const auto report = check_partition_lemma(g, part);
    Json props = Json::array();
    for (int i = 0; i < static_cast<int>(report.properties.size()); ++i) {
      const auto& p = report.properties[i];
      Json pj;
      pj["name"] = property_name(i);
      pj["holds"] = p.holds;
      pj["witness_edge"] = p.witness_edge
                               ? Json::array({p.witness_edge->first, p.witness_edge->second})
                               : Json(nullptr);
      pj["witness_vertex"] = p.witness_vertex ? Json(*p.witness_vertex) : Json(nullptr);
      props.push_back(pj);
    }
    Json j;
    j["graph6"] = serialize_graph6(g);
    j["path"] = path;
    j["all_hold"] = report.all_hold();
    j["properties"] = props;
    print_json(std::cout, j);
  }
  return kOk;
}

// ---- survey ---------------------------------------------------------------

struct SurveyArgs {
  Input in;
  std::vector<std::string> families = {"P4", "P5", "K4h", "S122", "N"};
  int exact_max_n = 10;
  int t = 4;
  int sample = 0;
  std::vector<std::string> forbid = {"S122", "N"};
  int min_n = 9;
  int max_n = 20;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string column_name(std::string family) {
  std::replace(family.begin(), family.end(), ',', '_');
  return "free_" + family;
}

class Surveyor {
 public:
  Surveyor(const SurveyArgs& a) : args_(a) {
    for (const auto& f : a.families) patterns_.push_back(parse_pattern(f));
    p4_ = generate(FamilySpec::path(4));
    s122_n_ = {generate(FamilySpec::spider(1, 2, 2)), generate(FamilySpec::net(1, 1, 1))};
    p5_kth_ = {generate(FamilySpec::path(5)), generate(FamilySpec::g2(args_.t))};
  }

  std::string header() const {
    std::string h = "graph6,n,diameter,rvc,exact,lower,upper";
    for (const auto& f : args_.families) h += "," + csv_field(column_name(f));
    return h + ",palette,case_trace";
  }

  std::string row(const Graph& g) const {
    const int n = g.order();
    const int d = diameter(g);

    std::optional<ConstructiveColoring> cc;
    if (!find_induced(p4_, g)) {
      cc = color_p4_free(g);
    } else if (is_family_free(g, s122_n_)) {
      cc = color_s122_n_free(g);
    } else if (args_.t >= 4 && is_family_free(g, p5_kth_)) {
      cc = color_p5_kth_free(g, args_.t);
    }

    std::string rvc;
    bool exact = false;
    int lower = std::max(d - 1, 0);
    int upper = g.is_complete() ? 0 : spanning_tree_coloring(g).palette;
    if (cc && cc->verified) upper = std::min(upper, cc->coloring.palette);
    if (g.is_complete()) {
      exact = true;
    } else if (n <= args_.exact_max_n) {
      const RvcResult r = rvc_exact(g, {.deep = true});
      lower = std::max(lower, r.lower_bound);
      upper = std::min(upper, r.value);
      exact = r.exhaustive;
    }
    if (lower == upper) exact = true;
    if (exact) {
      lower = upper;
      rvc = std::to_string(upper);
    }

    std::ostringstream out;
    out << serialize_graph6(g) << ',' << n << ',' << d << ',' << rvc << ',' << (exact ? 1 : 0)
        << ',' << lower << ',' << upper;
    for (const Graph& p : patterns_) out << ',' << (find_induced(p, g) ? 0 : 1);
    out << ',' << (cc ? std::to_string(cc->coloring.palette) : "") << ','
        << (cc ? csv_field(cc->case_trace) : "");
    return out.str();
  }

 private:
  const SurveyArgs& args_;
  std::vector<Graph> patterns_;
  Graph p4_{1, {}};
  std::vector<Graph> s122_n_;
  std::vector<Graph> p5_kth_;
};

int cmd_survey(const SurveyArgs& a, std::uint64_t seed) {
  std::vector<Graph> graphs;
  if (a.sample > 0) {
    std::vector<Graph> forbidden;
    for (const auto& f : a.forbid) forbidden.push_back(parse_pattern(f));
    if (a.min_n < 1 || a.max_n < a.min_n || a.max_n > kMaxVertices) {
      throw PreconditionError("need 1 <= --min-n <= --max-n <= 62");
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < a.sample; ++s) {
      graphs.push_back(sample_free_graph(rng, forbidden, {.min_order = a.min_n, .max_order = a.max_n}));
    }
  } else {
    graphs = a.in.graphs();
  }

  std::vector<Graph> connected;
  std::size_t skipped = 0;
  for (auto& g : graphs) {
    if (is_connected(g)) {
      connected.push_back(std::move(g));
    } else {
      ++skipped;
    }
  }

  const Surveyor surveyor(a);
  std::vector<std::string> rows(connected.size());
  parallel_for(connected.size(), configured_threads(),
               [&](std::size_t i) { rows[i] = surveyor.row(connected[i]); });

  std::cout << surveyor.header() << '\n';
  for (const auto& r : rows) std::cout << r << '\n';
  if (skipped > 0) std::cerr << "skipped " << skipped << " disconnected graph(s)\n";
  return kOk;
}

// ---- dot ------------------------------------------------------------------

struct DotArgs {
  Input in;
  std::string coloring;
};

int cmd_dot(const DotArgs& a) {
  static const char* const kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                         "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
                                         "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};
  constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
  const Graph g = a.in.first();
  std::optional<VertexColoring> c;
  if (!a.coloring.empty()) {
    c = parse_coloring(a.coloring);
    require_coloring_fits(g, *c);
  }
  std::cout << "graph G {\n";
  if (c) std::cout << "  node [style=filled];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    std::cout << "  " << v;
    if (c) {
      const int color = c->colors[v];
      std::cout << " [label=\"" << v << ':' << color << "\", fillcolor=\""
                << kPalette[color % kPaletteSize] << "\"]";
    }
    std::cout << ";\n";
  }
  for (auto [u, v] : g.edges()) std::cout << "  " << u << " -- " << v << ";\n";
  std::cout << "}\n";
  return kOk;
}

}  // namespace
}  // namespace rvclab::cli

int main(int argc, char** argv) {
  using namespace rvclab;
  using namespace rvclab::cli;

  CLI::App app{"Rainbow vertex-connection toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for any random sampling");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print graph6 for members of a named family");
  gen_cmd->add_option("--family", gen.family,
                      "path|cycle|complete|star|spider|net|g1|g2|g3|g4 (also P, C, K, S, N)")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Order for path, cycle, complete");
  gen_cmd->add_option("--r", gen.r, "Leaves of a star");
  gen_cmd->add_option("--i", gen.i, "First leg (spider, net)");
  gen_cmd->add_option("--j", gen.j, "Second leg (spider, net)");
  gen_cmd->add_option("--k", gen.k, "Third leg (spider, net)");
  gen_cmd->add_option("--t", gen.t, "Parameter of g1..g4");
  gen_cmd->add_option("--count", gen.count, "Instances, stepping the leading parameter by 1");

  RvcArgs rvc;
  auto* rvc_cmd = app.add_subcommand("rvc", "Exact rainbow vertex-connection number");
  add_input(rvc_cmd, rvc.in);
  rvc_cmd->add_flag("--deep", rvc.deep, "Allow graphs with more than 16 vertices");
  rvc_cmd->add_option("--max-palette", rvc.max_palette, "Largest palette to search");
  rvc_cmd->add_option("--budget", rvc.budget, "Search node budget, 0 = unlimited");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring for rainbow connectivity");
  add_input(verify_cmd, verify.in);
  verify_cmd->add_option("-c,--coloring", verify.coloring, "Coloring JSON, file or comma list")
      ->required();

  FreeArgs free_args;
  auto* free_cmd = app.add_subcommand("free", "Test for forbidden induced subgraphs");
  add_input(free_cmd, free_args.in);
  free_cmd->add_option("-p,--pattern", free_args.patterns, "Pattern name or graph6 (repeatable)")
      ->required();

  PairArgs pair;
  auto* pair_cmd = app.add_subcommand("classify-pair", "Classify a forbidden pair");
  pair_cmd->add_option("x", pair.x, "First graph (name or graph6)")->required();
  pair_cmd->add_option("y", pair.y, "Second graph (name or graph6)")->required();

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Run a constructive coloring");
  add_input(color_cmd, color.in);
  color_cmd->add_option("--family", color.family, "p4 | p5-kth | s122-n")
      ->required()
      ->check(CLI::IsMember({"p4", "p5-kth", "s122-n"}));
  color_cmd->add_option("--t", color.t, "Clique size of the pendant-complete pattern");

  LemmaArgs lemma;
  auto* lemma_cmd = app.add_subcommand("lemma-check", "Check the path partition properties");
  add_input(lemma_cmd, lemma.in);
  lemma_cmd->add_option("--path", lemma.path, "Comma-separated shortest path (default: diameter path)");

  SurveyArgs survey;
  auto* survey_cmd = app.add_subcommand("survey", "CSV survey over a graph6 file");
  add_input(survey_cmd, survey.in);
  survey_cmd->add_option("-f,--family", survey.families, "Membership column pattern (repeatable)")
      ->capture_default_str();
  survey_cmd->add_option("--exact-max-n", survey.exact_max_n, "Exact rvc up to this order")
      ->capture_default_str();
  survey_cmd->add_option("--t", survey.t, "Clique size for the pendant-complete colorer")
      ->capture_default_str();
  survey_cmd->add_option("--sample", survey.sample, "Survey this many random filtered graphs instead");
  survey_cmd->add_option("--forbid", survey.forbid, "Patterns excluded when sampling (repeatable)")
      ->capture_default_str();
  survey_cmd->add_option("--min-n", survey.min_n, "Smallest sampled order")->capture_default_str();
  survey_cmd->add_option("--max-n", survey.max_n, "Largest sampled order")->capture_default_str();

  DotArgs dot;
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  add_input(dot_cmd, dot.in);
  dot_cmd->add_option("-c,--coloring", dot.coloring, "Coloring JSON, file or comma list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*rvc_cmd) return cmd_rvc(rvc);
    if (*verify_cmd) return cmd_verify(verify);
    if (*free_cmd) return cmd_free(free_args);
    if (*pair_cmd) return cmd_classify(pair);
    if (*color_cmd) return cmd_color(color);
    if (*lemma_cmd) return cmd_lemma(lemma);
    if (*survey_cmd) return cmd_survey(survey, seed);
    if (*dot_cmd) return cmd_dot(dot);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFormat;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
