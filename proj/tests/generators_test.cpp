#include "rvclab/generators.hpp"

#include <gtest/gtest.h>

#include "rvclab/detect.hpp"

namespace rvclab {
namespace {

TEST(GeneratorsTest, SmallShapes) {
  const Graph g24 = generate(FamilySpec::g2(4));
  EXPECT_EQ(g24.order(), 8);
  EXPECT_EQ(g24.size(), 10);

  EXPECT_EQ(generate(FamilySpec::net(1, 1, 1)).order(), 6);

  const Graph s122 = generate(FamilySpec::spider(1, 2, 2));
  EXPECT_EQ(s122.order(), 6);
  EXPECT_EQ(s122.size(), 5);
  EXPECT_EQ(s122.degree(0), 3);
}

TEST(GeneratorsTest, ReferenceEncodings) {
  EXPECT_EQ(serialize_graph6(generate(FamilySpec::g2(4))), "G~`@?_");
  EXPECT_EQ(serialize_graph6(generate(FamilySpec::spider(1, 2, 2))), "Ep_G");
  EXPECT_EQ(serialize_graph6(generate(FamilySpec::net(1, 1, 1))), "E{O_");
  EXPECT_EQ(serialize_graph6(generate(FamilySpec::cycle(4))), "Cl");
  EXPECT_EQ(serialize_graph6(generate(FamilySpec::path(7))), "FhCGG");
  EXPECT_EQ(serialize_graph6(generate(FamilySpec::complete(5))), "D~{");
  EXPECT_EQ(serialize_graph6(generate(FamilySpec::g3(3))), "H{D?H?@");
}

TEST(GeneratorsTest, ExpectationsTable) {
  auto check = [](const FamilySpec& s, int order, int diam) {
    const auto e = family_expectations(s);
    EXPECT_EQ(e.order, order) << describe(s);
    EXPECT_EQ(e.diameter, diam) << describe(s);
  };
  check(FamilySpec::g3(3), 9, 5);
  check(FamilySpec::g4(6), 12, 5);
  check(FamilySpec::g2(5), 10, 3);
  check(FamilySpec::g1(4), 9, 4);
  EXPECT_THROW(family_expectations(FamilySpec::path(4)), PreconditionError);
}

TEST(GeneratorsTest, GeneratedGraphsMatchExpectations) {
  for (int t = 2; t <= 12; ++t) {
    for (const auto& s : {FamilySpec::g1(t), FamilySpec::g2(t), FamilySpec::g3(t), FamilySpec::g4(t)}) {
      if (s.family == Family::kPendantCycle && t < 3) continue;
      const Graph g = generate(s);
      const auto e = family_expectations(s);
      EXPECT_EQ(g.order(), e.order) << describe(s);
      EXPECT_EQ(diameter(g), e.diameter) << describe(s);
    }
  }
}

TEST(GeneratorsTest, TreesAndNetsHaveExpectedCounts) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const Graph spider = generate(FamilySpec::spider(i, j, k));
        EXPECT_EQ(spider.order(), 1 + i + j + k);
        EXPECT_EQ(spider.size(), i + j + k);
        EXPECT_TRUE(is_connected(spider));
        const Graph net = generate(FamilySpec::net(i, j, k));
        EXPECT_EQ(net.order(), 3 + i + j + k);
        EXPECT_EQ(net.size(), 3 + i + j + k);
        EXPECT_TRUE(is_connected(net));
      }
    }
  }
  for (int r = 1; r <= 6; ++r) {
    const Graph star = generate(FamilySpec::star(r));
    EXPECT_EQ(star.degree(0), r);
    EXPECT_EQ(star.size(), r);
  }
}

TEST(GeneratorsTest, UniformNetIsNet) {
  EXPECT_TRUE(are_isomorphic(generate(FamilySpec::g3(4)), generate(FamilySpec::net(3, 3, 3))));
}

TEST(GeneratorsTest, RejectsInvalidParameters) {
  EXPECT_THROW(generate(FamilySpec::cycle(2)), PreconditionError);
  EXPECT_THROW(generate(FamilySpec::path(0)), PreconditionError);
  EXPECT_THROW(generate(FamilySpec::g1(1)), PreconditionError);
  EXPECT_THROW(generate(FamilySpec::g4(2)), PreconditionError);
  EXPECT_THROW(generate(FamilySpec::complete(63)), PreconditionError);
  EXPECT_THROW(generate(FamilySpec::g3(22)), PreconditionError);  // 66 vertices
}

TEST(GeneratorsTest, ParsesNames) {
  EXPECT_EQ(generate(parse_family_name("P5")), generate(FamilySpec::path(5)));
  EXPECT_EQ(generate(parse_family_name("C6")), generate(FamilySpec::cycle(6)));
  EXPECT_EQ(generate(parse_family_name("K1,3")), generate(FamilySpec::star(3)));
  EXPECT_EQ(generate(parse_family_name("claw")), generate(FamilySpec::star(3)));
  EXPECT_EQ(generate(parse_family_name("K4h")), generate(FamilySpec::g2(4)));
  EXPECT_EQ(generate(parse_family_name("S122")), generate(FamilySpec::spider(1, 2, 2)));
  EXPECT_EQ(generate(parse_family_name("S1,2,2")), generate(FamilySpec::spider(1, 2, 2)));
  EXPECT_EQ(generate(parse_family_name("N")), generate(FamilySpec::net(1, 1, 1)));
  EXPECT_EQ(generate(parse_family_name("net")), generate(FamilySpec::net(1, 1, 1)));
  EXPECT_EQ(generate(parse_family_name("N2,1,1")), generate(FamilySpec::net(2, 1, 1)));
  EXPECT_EQ(generate(parse_family_name("G4^8")), generate(FamilySpec::g4(8)));
  for (const char* bad : {"", "Q3", "P", "K1,", "G5^3", "S12", "Px"}) {
    EXPECT_THROW(parse_family_name(bad), FormatError) << bad;
  }
}

}  // namespace
}  // namespace rvclab
