#include <gtest/gtest.h>

#include "pentile/atlas.hpp"

using namespace pentile;

namespace {

Region e2_half_by_hand(int f) {
  int q = (f - 4) / 8, n = f / 4;
  Region r;
  for (int k = 0; k <= q; ++k) r.insert({4 * (k % n), 4 * ((k + 1) % n) + 1});
  for (int k = 1; k <= q; ++k) r.insert({4 * k + 3, 4 * k + 2});
  return r;
}

} // namespace

TEST(Surgery, HalfEarthMapIsTwelveEdgeDisk) {
  for (int f : {12, 20, 28, 36}) {
    auto t = build_earth_map(f, EarthMapKind::kE2);
    Region r = e2_half_by_hand(f);
    EXPECT_EQ(r, detail::e2_half(f));
    EXPECT_TRUE(is_disk(t, r)) << f;
    EXPECT_EQ(boundary_cycle(t, r).size(), 12u) << f;
  }
}

TEST(Surgery, SingleTileAndBadRegions) {
  auto t = build_earth_map(16, EarthMapKind::kE2);
  EXPECT_TRUE(is_disk(t, {0}));
  EXPECT_EQ(boundary_cycle(t, {0}).size(), 5u);
  EXPECT_FALSE(is_disk(t, {}));
  Region all;
  for (int i = 0; i < 16; ++i) all.insert(i);
  EXPECT_FALSE(is_disk(t, all));
  // T_0 and B_2 share no vertex
  EXPECT_FALSE(is_disk(t, {0, 11}));
  EXPECT_THROW(reglue_rotate(t, {0, 11}, 1), Error);
}

TEST(Surgery, BoundaryCycleIsConnected) {
  auto t = build_earth_map(20, EarthMapKind::kE2);
  auto h = boundary_cycle(t, detail::e2_half(20));
  VertexIndex vi = index_vertices(t);
  // dart i ends where dart i+1 starts
  for (std::size_t i = 0; i < h.size(); ++i) {
    Dart d = h[i], e = h[(i + 1) % h.size()];
    EXPECT_EQ(vi.id[d.tile][(d.slot + 1) % 5], vi.id[e.tile][e.slot]);
  }
}

TEST(Surgery, TrivialRegluesAreIdentity) {
  auto t = build_earth_map(20, EarthMapKind::kE2);
  Region r = detail::e2_half(20);
  EXPECT_EQ(reglue_rotate(t, r, 0), t);
  EXPECT_EQ(reglue_rotate(t, r, 12), t);
  auto m = reglue_rotate(reglue_rotate(t, r, 4), r, -4);
  EXPECT_TRUE(isomorphic(m, t));
}

TEST(Surgery, RotationByFourGivesNewTiling) {
  auto t = build_earth_map(20, EarthMapKind::kE2);
  auto x = reglue_rotate(t, detail::e2_half(20), 4);
  auto v = validate_under(x, e2_system(20));
  ASSERT_TRUE(v.ok) << v.reason;
  EXPECT_FALSE(isomorphic(x, t));
  EXPECT_TRUE(avc_types(extract_avc(x)).count(VertexType(0, 1, 3, 0, 0)));
}

TEST(Surgery, OddRotationBreaksEdgeMatch) {
  auto t = build_earth_map(20, EarthMapKind::kE2);
  auto x = reglue_rotate(t, detail::e2_half(20), 1);
  EXPECT_FALSE(validate_under(x, e2_system(20)).ok);
}

TEST(Surgery, ReflectionsValidateUnderAlphaBeta) {
  auto t = build_earth_map(20, EarthMapKind::kE2);
  for (int c : {0, 4, 8}) {
    auto x = reglue_reflect(t, detail::e2_half(20), c);
    auto v = validate_under(x, e2_alpha_beta_system(20));
    EXPECT_TRUE(v.ok) << c << " " << v.reason;
    EXPECT_FALSE(validate_under(x, e2_system(20)).ok) << c;
  }
}

TEST(Surgery, AngleSystemAdmits) {
  auto sys = e2_system(16);
  EXPECT_TRUE(sys.admits(VertexType(1, 0, 0, 1, 1)));
  EXPECT_TRUE(sys.admits(VertexType(0, 2, 1, 0, 0)));
  EXPECT_TRUE(sys.admits(VertexType(0, 0, 4, 0, 0)));
  // alpha = beta only on the alpha=beta subfamily
  EXPECT_FALSE(sys.admits(VertexType(2, 0, 1, 0, 0)));
  EXPECT_TRUE(e2_alpha_beta_system(16).admits(VertexType(2, 0, 1, 0, 0)));
}
