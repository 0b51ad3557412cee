#include <gtest/gtest.h>

#include <set>

#include "fullerene.hpp"
#include "oracles.hpp"

using namespace fullerene;

namespace {

SpiralCode code(int faces, std::array<int, 12> pos) { return SpiralCode{faces, pos}; }

}  // namespace

TEST(SpiralCode, Validate) {
  EXPECT_NO_THROW(code(12, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}).validate());
  EXPECT_THROW(code(12, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13}).validate(), InvalidSpiralCode);
  EXPECT_THROW(code(14, {1, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}).validate(), InvalidSpiralCode);
  EXPECT_THROW(code(14, {0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}).validate(), InvalidSpiralCode);
}

TEST(Windup, Dodecahedron) {
  const auto f = windup(code(12, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  EXPECT_EQ(f.vertex_count(), 20u);
  EXPECT_TRUE(oracle::maps_isomorphic(f.graph().rotation(), oracle::dodecahedron_rotation(), true));
}

TEST(Windup, ThirteenFacesFails) {
  try {
    windup(code(13, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
    FAIL() << "expected WindupFailure";
  } catch (const WindupFailure& e) {
    EXPECT_GE(e.step(), 1u);
    EXPECT_LE(e.step(), 13u);
  }
}

TEST(Windup, C60RoundTrip) {
  const auto c60 = goldberg({1, 1});
  const auto s = unwind(c60);
  EXPECT_EQ(s.face_count, 32);
  EXPECT_EQ(s.pentagon_positions, (std::array<int, 12>{1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32}));
  EXPECT_TRUE(are_isomorphic(windup(s), c60, Chirality::mirror_identified));
  EXPECT_TRUE(oracle::maps_isomorphic(windup(s).graph().rotation(), c60.graph().rotation(), true));
}

TEST(Unwind, Examples) {
  const auto s = unwind(goldberg({1, 0}));
  EXPECT_EQ(s.pentagon_positions, (std::array<int, 12>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  EXPECT_EQ(unwind(goldberg({2, 1})), unwind(goldberg({1, 2})));
}

TEST(Unwind, RoundTripAt40) {
  const auto all = generate(40, 1, 1);
  ASSERT_EQ(all.size(), 40u);
  for (const auto& iso : all) {
    const auto s = unwind(iso.fullerene);
    EXPECT_EQ(s, iso.spiral);
    EXPECT_TRUE(oracle::maps_isomorphic(windup(s).graph().rotation(), iso.fullerene.graph().rotation(), true));
  }
}

TEST(Generate, Examples) {
  EXPECT_EQ(generate(20, 1).size(), 1u);
  EXPECT_EQ(generate(48, 1).size(), 199u);
  EXPECT_EQ(generate(60, 2).size(), 1u);
  EXPECT_TRUE(generate(22, 1).empty());
}

TEST(Generate, UnsupportedN) {
  EXPECT_THROW(generate(18, 1), UnsupportedN);
  EXPECT_THROW(generate(41, 1), UnsupportedN);
  EXPECT_THROW(generate(380, 1), UnsupportedN);
  EXPECT_THROW(generate_spirals(-2), UnsupportedN);
}

TEST(Generate, CountsUpTo50) {
  const std::size_t want[] = {1, 0, 1, 1, 2, 3, 6, 6, 15, 17, 40, 45, 89, 116, 199, 271};
  for (int n = 20, i = 0; n <= 50; n += 2, ++i) EXPECT_EQ(generate_spirals(n).size(), want[i]) << n;
}

TEST(Generate, OutputsAreValidDistinctAndSorted) {
  for (int n = 20; n <= 44; n += 2) {
    const auto all = generate(n, 1);
    std::set<CanonicalForm> codes;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& iso = all[i];
      EXPECT_EQ(iso.fullerene.vertex_count(), static_cast<std::size_t>(n));
      EXPECT_NO_THROW(validate_fullerene(iso.fullerene.graph()));
      const auto c = canonical_code(iso.fullerene, Chirality::mirror_identified);
      EXPECT_EQ(c.spiral(), iso.spiral);
      codes.insert(c);
      if (i) EXPECT_LT(canonical_code(all[i - 1].fullerene, Chirality::mirror_identified), c);
    }
    EXPECT_EQ(codes.size(), all.size());
  }
}

TEST(Generate, NoTwoIsomersAreIsomorphicByBruteForce) {
  for (int n = 28; n <= 36; n += 2) {
    const auto all = generate(n, 1, 1);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        EXPECT_FALSE(oracle::maps_isomorphic(all[i].fullerene.graph().rotation(),
                                             all[j].fullerene.graph().rotation(), true));
  }
}

TEST(Generate, FilterSoundness) {
  for (int n = 20; n <= 50; n += 2) {
    const auto all = generate(n, 1);
    for (int d = 2; d <= 3; ++d) {
      std::vector<SpiralCode> filtered;
      for (const auto& iso : all)
        if (iso.separation >= d) filtered.push_back(iso.spiral);
      std::vector<SpiralCode> direct;
      for (const auto& iso : generate(n, d)) direct.push_back(iso.spiral);
      EXPECT_EQ(direct, filtered) << n << " " << d;
    }
  }
  // nonempty case
  const auto ipr = generate(60, 2);
  ASSERT_EQ(ipr.size(), 1u);
  EXPECT_EQ(ipr.front().separation, 2);
}

TEST(Generate, WorkerCountDoesNotChangeOutput) {
  for (int n : {36, 44}) {
    const auto one = generate_spirals(n, false, 1);
    EXPECT_EQ(generate_spirals(n, false, 3), one);
    EXPECT_EQ(generate_spirals(n, false, 8), one);
  }
}

TEST(CountTable, Rows) {
  const auto r30 = count_row(30);
  EXPECT_EQ(r30, (CountTableRow{30, 17, 3, 0, 0, 0, 0}));
  EXPECT_EQ(count_row(70, true).sep_ge_2, 1);
  EXPECT_EQ(count_row(76, true).sep_ge_2, 2);
  const auto rows = count_table(20, 26);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1], (CountTableRow{22, 13, 0, 0, 0, 0, 0}));
}
