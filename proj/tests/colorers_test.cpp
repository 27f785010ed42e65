#include "rvclab/colorers.hpp"

#include <gtest/gtest.h>

#include "rvclab/detect.hpp"
#include "rvclab/generators.hpp"
#include "rvclab/rvc.hpp"
#include "test_support.hpp"

namespace rvclab {
namespace {

Graph named(const char* name) { return generate(parse_family_name(name)); }

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

void expect_clean(const ConstructiveColoring& c, const Graph& g) {
  EXPECT_TRUE(c.verified) << c.case_trace;
  EXPECT_EQ(c.escalation, Escalation::kNone) << c.case_trace;
  EXPECT_LE(c.coloring.palette, c.bound_claimed);
  EXPECT_TRUE(is_rainbow_vertex_connected(g, c.coloring).connected);
}

TEST(P4FreeColorerTest, Examples) {
  const auto k5 = color_p4_free(named("K5"));
  expect_clean(k5, named("K5"));
  EXPECT_EQ(k5.coloring.palette, 0);

  const auto c4 = color_p4_free(named("C4"));
  expect_clean(c4, named("C4"));
  EXPECT_EQ(c4.coloring.palette, 1);

  const Graph star = generate(FamilySpec::star(6));
  const auto s = color_p4_free(star);
  expect_clean(s, star);
  EXPECT_EQ(s.coloring.palette, 1);
}

TEST(P4FreeColorerTest, RejectsBadInput) {
  EXPECT_THROW(color_p4_free(named("P4")), PreconditionError);
  EXPECT_THROW(color_p4_free(Graph(2, {})), PreconditionError);
}

TEST(P5KthColorerTest, CompleteGraph) {
  const Graph k7 = named("K7");
  const auto c = color_p5_kth_free(k7, 4);
  expect_clean(c, k7);
  EXPECT_EQ(c.case_trace, "p5-kth/dominating-clique");
  EXPECT_LE(c.coloring.palette, 2);
}

TEST(P5KthColorerTest, CycleUsesDominatingP3) {
  const Graph c5 = named("C5");
  const auto c = color_p5_kth_free(c5, 4);
  expect_clean(c, c5);
  EXPECT_EQ(c.case_trace, "p5-kth/dominating-p3");
  EXPECT_LE(c.coloring.palette, 4);
}

TEST(P5KthColorerTest, PendantCompleteUsesClique) {
  const Graph g = generate(FamilySpec::g2(5));
  const auto c = color_p5_kth_free(g, 6);
  expect_clean(c, g);
  EXPECT_EQ(c.case_trace, "p5-kth/dominating-clique");
  EXPECT_LE(c.coloring.palette, 7);
  EXPECT_GE(c.coloring.palette, rvc_exact(g).value);
}

TEST(P5KthColorerTest, RejectsBadInput) {
  EXPECT_THROW(color_p5_kth_free(named("P5"), 4), PreconditionError);
  EXPECT_THROW(color_p5_kth_free(generate(FamilySpec::g2(4)), 4), PreconditionError);
  EXPECT_THROW(color_p5_kth_free(named("C5"), 3), PreconditionError);
}

TEST(S122NColorerTest, Examples) {
  const Graph c7 = named("C7");
  const auto a = color_s122_n_free(c7);
  expect_clean(a, c7);
  EXPECT_TRUE(starts_with(a.case_trace, "s122-n/diam3"));
  EXPECT_LE(a.coloring.palette, 14);

  const Graph c12 = named("C12");
  const auto b = color_s122_n_free(c12);
  expect_clean(b, c12);
  EXPECT_EQ(b.case_trace, "s122-n/long/escape-cycle");
  EXPECT_EQ(b.coloring.palette, 6);
  ASSERT_TRUE(b.escape_cycle);
  EXPECT_EQ(b.escape_cycle->cycle.size(), 12U);
  EXPECT_TRUE(b.escape_cycle->chordless);
  EXPECT_GE(b.coloring.palette, cycle_rvc(12));

  const Graph p9 = named("P9");
  const auto c = color_s122_n_free(p9);
  expect_clean(c, p9);
  EXPECT_EQ(c.case_trace, "s122-n/long/barrier-separates");
  EXPECT_LE(c.coloring.palette, 15);
  EXPECT_EQ(rvc_exact(p9).value, 7);
}

TEST(S122NColorerTest, DiameterFourBranch) {
  const Graph c9 = named("C9");
  const auto c = color_s122_n_free(c9);
  expect_clean(c, c9);
  EXPECT_TRUE(starts_with(c.case_trace, "s122-n/diam4"));
}

TEST(S122NColorerTest, EscapeCycleOnLongCycles) {
  for (int n = 10; n <= 24; ++n) {
    const Graph c = generate(FamilySpec::cycle(n));
    const auto cc = color_s122_n_free(c);
    expect_clean(cc, c);
    EXPECT_EQ(cc.case_trace, "s122-n/long/escape-cycle") << n;
    EXPECT_EQ(cc.coloring.palette, (n + 1) / 2) << n;
  }
}

TEST(S122NColorerTest, EscapeCycleWithTriangleEar) {
  // C_12 plus a vertex on the edge 0-1; the ear is dominated twice.
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 12; ++i) edges.emplace_back(i, (i + 1) % 12);
  edges.emplace_back(12, 0);
  edges.emplace_back(12, 1);
  const Graph g(13, edges);
  const auto cc = color_s122_n_free(g);
  expect_clean(cc, g);
  EXPECT_EQ(cc.case_trace, "s122-n/long/escape-cycle");
  ASSERT_TRUE(cc.escape_cycle);
  EXPECT_TRUE(cc.escape_cycle->dominating);
  EXPECT_LE(cc.escape_cycle->return_length, diameter(g) + 2);
}

TEST(S122NColorerTest, RejectsBadInput) {
  EXPECT_THROW(color_s122_n_free(named("S122")), PreconditionError);
  EXPECT_THROW(color_s122_n_free(named("N")), PreconditionError);
}

TEST(ColorerSweepTest, P5KthFreeSmallCatalog) {
  const std::vector<Graph> forbidden = {named("P5"), named("K4h")};
  int count = 0;
  for (const Graph& g : testing::connected_up_to(7)) {
    if (!is_family_free(g, forbidden)) continue;
    ++count;
    const auto c = color_p5_kth_free(g, 4);
    ASSERT_TRUE(c.verified) << serialize_graph6(g) << " " << c.case_trace;
    ASSERT_EQ(c.escalation, Escalation::kNone) << serialize_graph6(g) << " " << c.case_trace;
    ASSERT_LE(c.coloring.palette, diameter(g) + 4);
    ASSERT_GE(c.coloring.palette, rvc_exact(g).value);
  }
  EXPECT_GT(count, 100);
}

TEST(ColorerSweepTest, S122NFreeSmallCatalog) {
  const std::vector<Graph> forbidden = {named("S122"), named("N")};
  int count = 0;
  for (const Graph& g : testing::connected_up_to(7)) {
    if (!is_family_free(g, forbidden)) continue;
    ++count;
    const auto c = color_s122_n_free(g);
    ASSERT_TRUE(c.verified) << serialize_graph6(g) << " " << c.case_trace;
    ASSERT_EQ(c.escalation, Escalation::kNone) << serialize_graph6(g) << " " << c.case_trace;
    ASSERT_LE(c.coloring.palette, diameter(g) + 11);
    ASSERT_GE(c.coloring.palette, rvc_exact(g).value);
  }
  EXPECT_GT(count, 100);
}

TEST(ColorerSweepTest, FallbackStillVerifies) {
  // Recorded escalations must still hand back a usable coloring.
  const Graph g = generate(FamilySpec::cycle(15));
  const auto c = color_s122_n_free(g);
  EXPECT_TRUE(is_rainbow_vertex_connected(g, c.coloring).connected);
}

}  // namespace
}  // namespace rvclab
