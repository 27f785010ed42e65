#ifndef RVCLAB_GENERATORS_HPP_
#define RVCLAB_GENERATORS_HPP_

#include <string>
#include <string_view>

#include "rvclab/graph.hpp"

namespace rvclab {

enum class Family {
  kPath,             // P_n
  kCycle,            // C_n
  kComplete,         // K_n
  kStar,             // K_{1,r}
  kSpider,           // S_{i,j,k}
  kNet,              // N_{i,j,k}
  kStarSubdivision,  // G_1^t: subdivision of K_{1,t}
  kPendantComplete,  // G_2^t = K_t^h
  kUniformNet,       // G_3^t = N_{t-1,t-1,t-1}
  kPendantCycle,     // G_4^t
};

// Parameters for one member of a family. Only the fields relevant to the
// family are read: n for path/cycle/complete, r for star, i/j/k for spider and
// net, t for the four extremal families.
struct FamilySpec {
  Family family = Family::kPath;
  int n = 0;
  int r = 0;
  int i = 0;
  int j = 0;
  int k = 0;
  int t = 0;

  static FamilySpec path(int n) { return {Family::kPath, n}; }
  static FamilySpec cycle(int n) { return {Family::kCycle, n}; }
  static FamilySpec complete(int n) { return {Family::kComplete, n}; }
  static FamilySpec star(int r) { return {.family = Family::kStar, .r = r}; }
  static FamilySpec spider(int i, int j, int k) {
    return {.family = Family::kSpider, .i = i, .j = j, .k = k};
  }
  static FamilySpec net(int i, int j, int k) {
    return {.family = Family::kNet, .i = i, .j = j, .k = k};
  }
  static FamilySpec g1(int t) { return {.family = Family::kStarSubdivision, .t = t}; }
  static FamilySpec g2(int t) { return {.family = Family::kPendantComplete, .t = t}; }
  static FamilySpec g3(int t) { return {.family = Family::kUniformNet, .t = t}; }
  static FamilySpec g4(int t) { return {.family = Family::kPendantCycle, .t = t}; }
};

// Labeling is fixed per family, core vertices first:
//   path/cycle      0..n-1 in order
//   star            center 0, leaves 1..r
//   spider          center 0, then legs i, j, k outward from the center
//   net             triangle 0,1,2, then legs i (on 0), j (on 1), k (on 2)
//   G_1^t           center 0, subdivision vertices 1..t, leaf t+s on s
//   G_2^t, G_4^t    clique / cycle 0..t-1, pendant t+s on s
Graph generate(const FamilySpec& spec);

struct FamilyExpectation {
  int order = 0;
  int diameter = 0;
};

// Vertex count and diameter of the four extremal families G_1..G_4.
FamilyExpectation family_expectations(const FamilySpec& spec);

std::string describe(const FamilySpec& spec);

// Parses a compact pattern name: P5, C6, K4, K1,3 (star), K4h (pendant
// complete), S1,2,2 or S122, N (the net), N2,1,1 or N211, G1^4 .. G4^8.
// "claw" and "net" are accepted as aliases.
FamilySpec parse_family_name(std::string_view name);

}  // namespace rvclab

#endif  // RVCLAB_GENERATORS_HPP_
