#include "rvclab/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

namespace rvclab {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void check_order(long long n) {
  require(n >= 1 && n <= kMaxVertices,
          "generated graph would have " + std::to_string(n) + " vertices (limit " +
              std::to_string(kMaxVertices) + ")");
}

// Appends a path of `length` new vertices hanging off `anchor`.
void add_leg(EdgeList& edges, int& next, Vertex anchor, int length) {
  Vertex prev = anchor;
  for (int s = 0; s < length; ++s) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
}

Graph build_spider(int i, int j, int k) {
  require(i >= 1 && j >= 1 && k >= 1, "spider legs must be >= 1");
  check_order(1LL + i + j + k);
  EdgeList edges;
  int next = 1;
  for (int len : {i, j, k}) add_leg(edges, next, 0, len);
  return Graph(next, edges);
}

Graph build_net(int i, int j, int k) {
  require(i >= 1 && j >= 1 && k >= 1, "net legs must be >= 1");
  check_order(3LL + i + j + k);
  EdgeList edges{{0, 1}, {0, 2}, {1, 2}};
  int next = 3;
  add_leg(edges, next, 0, i);
  add_leg(edges, next, 1, j);
  add_leg(edges, next, 2, k);
  return Graph(next, edges);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  EdgeList edges;
  switch (spec.family) {
    case Family::kPath: {
      require(spec.n >= 1, "path needs n >= 1");
      check_order(spec.n);
      for (int v = 0; v + 1 < spec.n; ++v) edges.emplace_back(v, v + 1);
      return Graph(spec.n, edges);
    }
    case Family::kCycle: {
      require(spec.n >= 3, "cycle needs n >= 3");
      check_order(spec.n);
      for (int v = 0; v < spec.n; ++v) edges.emplace_back(v, (v + 1) % spec.n);
      return Graph(spec.n, edges);
    }
    case Family::kComplete: {
      require(spec.n >= 1, "complete graph needs n >= 1");
      check_order(spec.n);
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
      return Graph(spec.n, edges);
    }
    case Family::kStar: {
      require(spec.r >= 1, "star needs r >= 1");
      check_order(spec.r + 1LL);
      for (int v = 1; v <= spec.r; ++v) edges.emplace_back(0, v);
      return Graph(spec.r + 1, edges);
    }
    case Family::kSpider:
      return build_spider(spec.i, spec.j, spec.k);
    case Family::kNet:
      return build_net(spec.i, spec.j, spec.k);
    case Family::kStarSubdivision: {
      const int t = spec.t;
      require(t >= 2, "G1^t needs t >= 2");
      check_order(2LL * t + 1);
      for (int s = 1; s <= t; ++s) {
        edges.emplace_back(0, s);
        edges.emplace_back(s, t + s);
      }
      return Graph(2 * t + 1, edges);
    }
    case Family::kPendantComplete: {
      const int t = spec.t;
      require(t >= 2, "G2^t needs t >= 2");
      check_order(2LL * t);
      for (int u = 0; u < t; ++u) {
        for (int v = u + 1; v < t; ++v) edges.emplace_back(u, v);
        edges.emplace_back(u, t + u);
      }
      return Graph(2 * t, edges);
    }
    case Family::kUniformNet:
      require(spec.t >= 2, "G3^t needs t >= 2");
      return build_net(spec.t - 1, spec.t - 1, spec.t - 1);
    case Family::kPendantCycle: {
      const int t = spec.t;
      require(t >= 3, "G4^t needs t >= 3");
      check_order(2LL * t);
      for (int s = 0; s < t; ++s) {
        edges.emplace_back(s, (s + 1) % t);
        edges.emplace_back(s, t + s);
      }
      return Graph(2 * t, edges);
    }
  }
  throw PreconditionError("unknown family");
}

FamilyExpectation family_expectations(const FamilySpec& spec) {
  const int t = spec.t;
  switch (spec.family) {
    case Family::kStarSubdivision:
      require(t >= 2, "G1^t needs t >= 2");
      return {2 * t + 1, 4};
    case Family::kPendantComplete:
      require(t >= 2, "G2^t needs t >= 2");
      return {2 * t, 3};
    case Family::kUniformNet:
      require(t >= 2, "G3^t needs t >= 2");
      return {3 * t, 2 * t - 1};
    case Family::kPendantCycle:
      require(t >= 3, "G4^t needs t >= 3");
      return {2 * t, t / 2 + 2};
    default:
      throw PreconditionError("family_expectations supports only G1..G4, got " + describe(spec));
  }
}

std::string describe(const FamilySpec& spec) {
  auto ijk = [&] {
    return std::to_string(spec.i) + "," + std::to_string(spec.j) + "," + std::to_string(spec.k);
  };
  switch (spec.family) {
    case Family::kPath: return "P" + std::to_string(spec.n);
    case Family::kCycle: return "C" + std::to_string(spec.n);
    case Family::kComplete: return "K" + std::to_string(spec.n);
    case Family::kStar: return "K1," + std::to_string(spec.r);
    case Family::kSpider: return "S" + ijk();
    case Family::kNet: return "N" + ijk();
    case Family::kStarSubdivision: return "G1^" + std::to_string(spec.t);
    case Family::kPendantComplete: return "K" + std::to_string(spec.t) + "h";
    case Family::kUniformNet: return "G3^" + std::to_string(spec.t);
    case Family::kPendantCycle: return "G4^" + std::to_string(spec.t);
  }
  return "?";
}

namespace {

std::vector<int> parse_numbers(std::string_view s, std::string_view whole) {
  std::vector<int> out;
  auto fail = [&] { throw FormatError("cannot parse pattern name '" + std::string(whole) + "'"); };
  if (s.empty()) fail();
  const bool has_comma = s.find(',') != std::string_view::npos;
  if (!has_comma && s.size() == 3 && std::all_of(s.begin(), s.end(), ::isdigit)) {
    // S122 / N211 shorthand: one digit per leg.
    for (char c : s) out.push_back(c - '0');
    return out;
  }
  while (!s.empty()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{}) fail();
    out.push_back(value);
    s.remove_prefix(ptr - s.data());
    if (!s.empty()) {
      if (s.front() != ',') fail();
      s.remove_prefix(1);
      if (s.empty()) fail();
    }
  }
  return out;
}

}  // namespace

FamilySpec parse_family_name(std::string_view name) {
  const std::string_view whole = name;
  auto fail = [&] { throw FormatError("cannot parse pattern name '" + std::string(whole) + "'"); };
  if (name == "N" || name == "net") return FamilySpec::net(1, 1, 1);
  if (name == "claw") return FamilySpec::star(3);
  if (name.size() < 2) fail();

  if (name.size() >= 4 && name[0] == 'G' && name[2] == '^') {
    const auto t = parse_numbers(name.substr(3), whole);
    if (t.size() != 1) fail();
    switch (name[1]) {
      case '1': return FamilySpec::g1(t[0]);
      case '2': return FamilySpec::g2(t[0]);
      case '3': return FamilySpec::g3(t[0]);
      case '4': return FamilySpec::g4(t[0]);
      default: fail();
    }
  }

  const char head = name[0];
  std::string_view rest = name.substr(1);
  if (head == 'K' && rest.ends_with('h')) {
    const auto t = parse_numbers(rest.substr(0, rest.size() - 1), whole);
    if (t.size() != 1) fail();
    return FamilySpec::g2(t[0]);
  }
  const auto nums = parse_numbers(rest, whole);
  switch (head) {
    case 'P':
      if (nums.size() == 1) return FamilySpec::path(nums[0]);
      break;
    case 'C':
      if (nums.size() == 1) return FamilySpec::cycle(nums[0]);
      break;
    case 'K':
      if (nums.size() == 1) return FamilySpec::complete(nums[0]);
      if (nums.size() == 2 && nums[0] == 1) return FamilySpec::star(nums[1]);
      break;
    case 'S':
      if (nums.size() == 3) return FamilySpec::spider(nums[0], nums[1], nums[2]);
      break;
    case 'N':
      if (nums.size() == 3) return FamilySpec::net(nums[0], nums[1], nums[2]);
      break;
    default:
      break;
  }
  fail();
  return {};
}

}  // namespace rvclab
