#include <gtest/gtest.h>

#include "fullerene.hpp"
#include "oracles.hpp"

using namespace fullerene;

TEST(CoxeterVertexCount, Examples) {
  EXPECT_EQ(coxeter_vertex_count({1, 0}), 20);
  EXPECT_EQ(coxeter_vertex_count({1, 1}), 60);
  EXPECT_EQ(coxeter_vertex_count({3, 2}), 380);
  EXPECT_THROW(coxeter_vertex_count({0, 0}), InvalidCoxeterCoords);
  EXPECT_THROW(coxeter_vertex_count({-1, 2}), InvalidCoxeterCoords);
}

TEST(Goldberg, C20IsDodecahedron) {
  EXPECT_TRUE(oracle::maps_isomorphic(goldberg({1, 0}).graph().rotation(), oracle::dodecahedron_rotation(), true));
  EXPECT_TRUE(oracle::maps_isomorphic(goldberg({0, 1}).graph().rotation(), oracle::dodecahedron_rotation(), true));
}

TEST(Goldberg, C60IsTruncatedIcosahedron) {
  const auto fixture = validate_fullerene(oracle::truncated_icosahedron_rotation());
  EXPECT_TRUE(are_isomorphic(goldberg({1, 1}), fixture, Chirality::mirror_identified));
  EXPECT_TRUE(oracle::maps_isomorphic(goldberg({1, 1}).graph().rotation(), fixture.graph().rotation(), true));
}

TEST(Goldberg, Examples) {
  const auto a = goldberg({2, 2});
  EXPECT_EQ(a.vertex_count(), 240u);
  EXPECT_EQ(pentagon_separation(a).separation, 4);
  const auto b = goldberg({2, 1});
  EXPECT_EQ(b.vertex_count(), 140u);
  EXPECT_EQ(pentagon_separation(b).separation, 3);
}

TEST(Goldberg, CountAndSeparationUpToSix) {
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q) {
      if (p + q == 0) continue;
      const auto f = goldberg({p, q});
      EXPECT_EQ(static_cast<long>(f.vertex_count()), coxeter_vertex_count({p, q})) << p << "," << q;
      EXPECT_EQ(pentagon_separation(f).separation, p + q) << p << "," << q;
    }
}

TEST(Goldberg, MirrorPairs) {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}}) {
    const auto a = goldberg({p, q}), b = goldberg({q, p});
    EXPECT_TRUE(are_isomorphic(a, b, Chirality::mirror_identified));
    EXPECT_FALSE(are_isomorphic(a, b, Chirality::chirality_sensitive));
    EXPECT_TRUE(are_isomorphic(validate_fullerene(a.graph().mirrored()), b, Chirality::chirality_sensitive));
  }
  for (int p = 1; p <= 3; ++p) {
    const auto a = goldberg({p, p});
    EXPECT_TRUE(are_isomorphic(a, validate_fullerene(a.graph().mirrored()), Chirality::chirality_sensitive));
    const auto z = goldberg({p, 0}), w = goldberg({0, p});
    EXPECT_TRUE(are_isomorphic(z, w, Chirality::chirality_sensitive));
  }
}

TEST(MinimalSeparationFullerene, SmallestForEachD) {
  const long expected[] = {0, 20, 60, 140, 240, 380};
  for (int d = 1; d <= 5; ++d) {
    const auto fs = minimal_separation_fullerene(d);
    ASSERT_EQ(fs.size(), (d >= 3 && d % 2 == 1) ? 2u : 1u) << d;
    for (const auto& f : fs) {
      EXPECT_EQ(static_cast<long>(f.vertex_count()), expected[d]);
      EXPECT_EQ(pentagon_separation(f).separation, d);
    }
    if (fs.size() == 2) {
      EXPECT_TRUE(are_isomorphic(fs[0], fs[1], Chirality::mirror_identified));
      EXPECT_FALSE(are_isomorphic(fs[0], fs[1], Chirality::chirality_sensitive));
    }
  }
  EXPECT_EQ(minimal_separation_fullerene(3)[0].vertex_count(), 15u * 9 + 5);
  EXPECT_EQ(minimal_separation_fullerene(4)[0].vertex_count(), 15u * 16);
  EXPECT_THROW(minimal_separation_fullerene(0), InvalidD);
}

TEST(MinimalSeparationFullerene, D2IsTheIprSixty) {
  const auto f = minimal_separation_fullerene(2).front();
  const auto ipr = generate(60, 2);
  ASSERT_EQ(ipr.size(), 1u);
  EXPECT_TRUE(are_isomorphic(f, ipr.front().fullerene, Chirality::mirror_identified));
}
