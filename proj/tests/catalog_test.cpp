#include "rvclab/catalog.hpp"

#include <gtest/gtest.h>

#include "rvclab/detect.hpp"
#include "rvclab/generators.hpp"
#include "test_support.hpp"

namespace rvclab {
namespace {

TEST(CatalogTest, CountsConnectedGraphs) {
  const auto levels = connected_catalog(8);
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112, 853, 11117};
  ASSERT_EQ(levels.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(levels[i].size(), expected[i]) << "n = " << i + 1;
    for (const Graph& g : levels[i]) ASSERT_TRUE(is_connected(g));
  }
}

TEST(CatalogTest, LevelsHaveNoIsomorphicDuplicates) {
  for (const auto& level : connected_catalog(6)) {
    for (std::size_t a = 0; a < level.size(); ++a)
      for (std::size_t b = a + 1; b < level.size(); ++b)
        ASSERT_FALSE(are_isomorphic(level[a], level[b]));
  }
}

TEST(CatalogTest, FilterMatchesPostHocFiltering) {
  const Graph p4 = generate(FamilySpec::path(4));
  const auto filtered = connected_catalog(7, [&](const Graph& g) { return !find_induced(p4, g); });
  const auto& all = testing::connected_up_to(7);
  std::size_t expected = 0;
  for (const Graph& g : all) expected += find_induced(p4, g) ? 0 : 1;
  std::size_t got = 0;
  for (const auto& level : filtered) got += level.size();
  EXPECT_EQ(got, expected);
}

TEST(CatalogTest, InvariantIsLabelIndependent) {
  const Graph a(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
  const Graph b(5, {{4, 3}, {3, 2}, {2, 1}, {1, 0}, {3, 1}});
  const Graph c(5, {{2, 0}, {0, 4}, {4, 1}, {1, 3}, {0, 1}});
  EXPECT_EQ(refinement_invariant(a), refinement_invariant(b));
  EXPECT_EQ(refinement_invariant(a), refinement_invariant(c));
  EXPECT_NE(refinement_invariant(a), refinement_invariant(generate(FamilySpec::path(5))));
}

TEST(SamplerTest, SamplesAreFreeConnectedAndDeterministic) {
  const std::vector<Graph> forbidden = {generate(parse_family_name("S122")),
                                        generate(parse_family_name("N"))};
  std::mt19937_64 rng1(99), rng2(99);
  for (int i = 0; i < 20; ++i) {
    const Graph g = sample_free_graph(rng1, forbidden, {.min_order = 9, .max_order = 14});
    EXPECT_EQ(g, sample_free_graph(rng2, forbidden, {.min_order = 9, .max_order = 14}));
    EXPECT_TRUE(is_connected(g));
    EXPECT_GE(g.order(), 9);
    EXPECT_LE(g.order(), 14);
    EXPECT_TRUE(is_family_free(g, forbidden));
  }
}

}  // namespace
}  // namespace rvclab
