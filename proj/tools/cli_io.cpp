#include "cli_io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rvclab/generators.hpp"

namespace rvclab::cli {

std::string read_source(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Graph> read_graphs(const std::string& path) {
  std::istringstream in(read_source(path));
  std::vector<Graph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

Graph single_graph(const std::string& inline_graph6, const std::string& path) {
  if (!inline_graph6.empty()) return parse_graph6(inline_graph6);
  auto graphs = read_graphs(path);
  if (graphs.empty()) throw FormatError("no graph on input");
  return graphs.front();
}

namespace {

std::vector<int> colors_from_list(const std::string& text) {
  std::vector<int> colors;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw FormatError("bad color '" + item + "'");
    }
    if (used != item.size()) throw FormatError("bad color '" + item + "'");
    colors.push_back(value);
  }
  return colors;
}

std::vector<int> colors_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw FormatError("colors must be an array");
  std::vector<int> colors;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw FormatError("colors must be integers");
    colors.push_back(v.get<int>());
  }
  return colors;
}

}  // namespace

VertexColoring parse_coloring(const std::string& arg) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) text = read_source(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw FormatError("empty coloring");

  std::vector<int> colors;
  int palette = -1;
  int n = -1;
  if (text[first] == '{' || text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(std::string("coloring JSON: ") + e.what());
    }
    if (j.is_array()) {
      colors = colors_from_json(j);
    } else {
      if (!j.contains("colors")) throw FormatError("coloring JSON lacks \"colors\"");
      colors = colors_from_json(j["colors"]);
      if (j.contains("k")) palette = j["k"].get<int>();
      if (j.contains("n")) n = j["n"].get<int>();
    }
  } else {
    colors = colors_from_list(text.substr(first));
  }
  for (int c : colors) {
    if (c < 0) throw FormatError("colors must be non-negative");
  }
  if (n >= 0 && n != static_cast<int>(colors.size())) {
    throw FormatError("coloring has " + std::to_string(colors.size()) + " colors but n = " +
                      std::to_string(n));
  }
  VertexColoring c = make_coloring(std::move(colors));
  if (palette >= 0) {
    if (palette < c.palette) throw FormatError("k is smaller than the colors used");
    c.palette = palette;
  }
  return c;
}

void require_coloring_fits(const Graph& g, const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) {
    throw PreconditionError("coloring has " + std::to_string(c.colors.size()) +
                            " entries, graph has " + std::to_string(g.order()) + " vertices");
  }
}

Graph parse_pattern(const std::string& text) {
  try {
    return generate(parse_family_name(text));
  } catch (const FormatError&) {
    return parse_graph6(text);
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t\r\n");
    const auto b = item.find_last_not_of(" \t\r\n");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

Json coloring_json(const VertexColoring& c) {
  return Json{{"n", c.colors.size()}, {"k", c.palette}, {"colors", c.colors}};
}

void print_json(std::ostream& os, const Json& j) { os << j.dump() << '\n'; }

}  // namespace rvclab::cli
