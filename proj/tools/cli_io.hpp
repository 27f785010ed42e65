#ifndef RVCLAB_TOOLS_CLI_IO_HPP_
#define RVCLAB_TOOLS_CLI_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "rvclab/graph.hpp"

namespace rvclab::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kFormat = 3, kPrecondition = 4 };

// Reads the whole source; "-" means stdin. Throws FormatError if unreadable.
std::string read_source(const std::string& path);

// Non-blank lines of a graph6 stream, parsed in order.
std::vector<Graph> read_graphs(const std::string& path);

// Graph from --graph if given, else the first graph of --input.
Graph single_graph(const std::string& inline_graph6, const std::string& path);

// Accepts {"n": .., "k": .., "colors": [..]}, a bare JSON array or a
// comma-separated list. The argument may be a file name or the text itself.
VertexColoring parse_coloring(const std::string& arg);

void require_coloring_fits(const Graph& g, const VertexColoring& c);

// Pattern from a family name ("P5", "K4h", "S122") or a graph6 string.
Graph parse_pattern(const std::string& text);

std::vector<std::string> split_list(const std::string& text);

Json coloring_json(const VertexColoring& c);

void print_json(std::ostream& os, const Json& j);

}  // namespace rvclab::cli

#endif  // RVCLAB_TOOLS_CLI_IO_HPP_
