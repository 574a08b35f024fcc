#include <gtest/gtest.h>

#include "pentile/atlas.hpp"

using namespace pentile;

TEST(Patch, F2E2HasOnePatch) {
  for (int f : {12, 20, 28}) {
    auto t = build(Family::kF2E2, f);
    auto ps = find_patches(t);
    ASSERT_EQ(ps.size(), 1u) << f;
    for (int i : ps[0].tiles) EXPECT_EQ(t.tiles[i].orientation, t.tiles[ps[0].tiles[0]].orientation);
    EXPECT_EQ(ps[0].tile_set().size(), 4u);
  }
}

TEST(Patch, F1E2IsOffTheChain) {
  auto t = build(Family::kF1E2, 20);
  EXPECT_FALSE(locate_patch(t).has_value());
  for (const auto& c : patch_chain(20)) EXPECT_FALSE(isomorphic(c, t));
}

TEST(Patch, LiteralFlipIsInvolution) {
  auto t = build(Family::kF2E2, 20);
  auto p = find_patches(t).front();
  auto once = flip_patch(t, p);
  ASSERT_TRUE(validate_under(once, e2_alpha_beta_system(20)).ok);
  const PatchA* back = nullptr;
  auto ps = find_patches(once);
  for (const auto& x : ps)
    if (x.tile_set() == p.tile_set()) back = &x;
  ASSERT_NE(back, nullptr);
  EXPECT_EQ(flip_patch(once, *back), t);
}

TEST(Patch, CentralFlipGivesDisjointPair) {
  auto t = build(Family::kF2E2, 20);
  auto once = flip_patch(t, find_patches(t).front());
  auto ps = find_patches(once);
  EXPECT_EQ(ps.size(), 3u);
  EXPECT_GE(disjoint_patch_pairs(ps), 1);
  EXPECT_TRUE(isomorphic(once, patch_chain(20)[1]));
}

TEST(Patch, TilesDiffering) {
  auto t = build(Family::kE2, 20);
  EXPECT_EQ(tiles_differing(t, t), 0);
  auto m = t;
  m.tiles[3].orientation = -m.tiles[3].orientation;
  EXPECT_EQ(tiles_differing(t, m), 1);
}

TEST(Patch, RelabelingsIncludeHost) {
  auto host = build(Family::kF2E2, 20);
  auto states = relabelings(host, {0, 1}, e2_alpha_beta_system(20));
  bool found = false;
  for (const auto& s : states) found = found || s == host;
  EXPECT_TRUE(found);
}
