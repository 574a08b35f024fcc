#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "pentile/earthmap.hpp"
#include "pentile/subdivision.hpp"

using namespace pentile;

namespace {

// Vertex classes from union-find: the corner at the start of a dart is the corner at the
// start of the next dart of its twin.
std::vector<int> corner_classes(const CombinatorialTiling& t, int& count) {
  std::vector<int> parent(5 * t.f());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < t.f(); ++i)
    for (int k = 0; k < 5; ++k) {
      Dart o = t.twin({i, k});
      parent[find(5 * i + k)] = find(5 * o.tile + (o.slot + 1) % 5);
    }
  std::map<int, int> ids;
  std::vector<int> out(5 * t.f());
  for (int x = 0; x < 5 * t.f(); ++x) out[x] = ids.emplace(find(x), static_cast<int>(ids.size())).first->second;
  count = static_cast<int>(ids.size());
  return out;
}

std::map<VertexType, int> oracle_avc(const CombinatorialTiling& t) {
  int n = 0;
  auto cls = corner_classes(t, n);
  std::vector<VertexType> v(n);
  for (int x = 0; x < 5 * t.f(); ++x) v[cls[x]][t.tiles[x / 5].corners[x % 5]] += 1;
  std::map<VertexType, int> out;
  for (const auto& x : v) out[x] += 1;
  return out;
}

CombinatorialTiling permuted(const CombinatorialTiling& t, unsigned seed) {
  std::vector<int> perm(t.f());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(seed));
  CombinatorialTiling out = t;
  for (int i = 0; i < t.f(); ++i) {
    Tile tile = t.tiles[i];
    for (auto& d : tile.twin) d.tile = perm[d.tile];
    out.tiles[perm[i]] = tile;
  }
  return out;
}

} // namespace

TEST(Combmap, EarthMapE2Sixteen) {
  auto t = build_earth_map(16, EarthMapKind::kE2);
  auto r = verify_tiling(t);
  ASSERT_TRUE(r.ok) << r.issues.front().message;
  EXPECT_EQ(r.v, 26);
  EXPECT_EQ(r.e, 40);
  EXPECT_EQ(r.degrees[3], 24);
  EXPECT_EQ(r.degrees[4], 2);
  AVCCounts want{{VertexType(1, 0, 0, 1, 1), 16}, {VertexType(0, 2, 1, 0, 0), 8}, {VertexType(0, 0, 4, 0, 0), 2}};
  EXPECT_EQ(extract_avc(t), want);
  EXPECT_EQ(oracle_avc(t), want);
}

TEST(Combmap, EarthMapE1Sixteen) {
  auto t = build_earth_map(16, EarthMapKind::kE1);
  ASSERT_TRUE(verify_tiling(t).ok);
  AVCCounts want{{VertexType(1, 2, 0, 0, 0), 8}, {VertexType(0, 1, 0, 2, 0), 16}, {VertexType(4, 0, 0, 0, 0), 2}};
  EXPECT_EQ(collapse_symmetric(extract_avc(t)), want);
  EXPECT_EQ(collapse_symmetric(oracle_avc(t)), want);
}

TEST(Combmap, EarthMapAvcFormula) {
  for (int f = 16; f <= 48; f += 8) {
    auto t = build_earth_map(f, EarthMapKind::kE2);
    ASSERT_TRUE(verify_tiling(t).ok) << f;
    AVCCounts want{{VertexType(1, 0, 0, 1, 1), f}, {VertexType(0, 2, 1, 0, 0), f / 2}, {VertexType(0, 0, f / 4, 0, 0), 2}};
    EXPECT_EQ(oracle_avc(t), want) << f;
    EXPECT_TRUE(counting_check(extract_avc(t), f).pass);
  }
}

TEST(Combmap, DegreeStatistics) {
  auto e1 = build_earth_map(20, EarthMapKind::kE1);
  auto d = degree_stats(e1);
  EXPECT_EQ(d[3], 30);
  EXPECT_EQ(d[5], 2);
  for (int f = 12; f <= 40; f += 4)
    for (auto kind : {EarthMapKind::kE1, EarthMapKind::kE2}) {
      auto t = build_earth_map(f, kind);
      int v = 0, k2 = 0;
      for (auto [k, n] : degree_stats(t)) {
        v += n;
        k2 += k * n;
      }
      int n = 0;
      corner_classes(t, n);
      EXPECT_EQ(v, n);
      EXPECT_EQ(k2, 5 * f);
    }
}

TEST(Combmap, SubdivisionOctahedron) {
  auto t = build_pentagonal_subdivision(8, SubdivisionCase::kAlphaCubed);
  auto r = verify_tiling(t);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(r.f, 24);
  EXPECT_EQ(r.v, 38);
  EXPECT_EQ(r.e, 60);
  // v4 counts the six octahedron vertices; the eight face centres have degree 3
  EXPECT_EQ(r.degrees[4], 6);
  EXPECT_EQ(r.degrees[3], 32);
  auto ic = build_pentagonal_subdivision(20, SubdivisionCase::kGammaCubed);
  auto ri = verify_tiling(ic);
  ASSERT_TRUE(ri.ok);
  EXPECT_EQ(ri.f, 60);
  EXPECT_EQ(ri.degrees[5], 12);
}

TEST(Combmap, EdgeFlipBreaksEdgeMatch) {
  auto t = build_earth_map(16, EarthMapKind::kE2);
  int k = 0;
  while (t.tiles[0].edge[k] != EdgeLen::kA) ++k;
  t.tiles[0].edge[k] = EdgeLen::kB;
  auto r = verify_tiling(t);
  EXPECT_FALSE(r.ok);
  bool edge_match = false;
  for (const auto& i : r.issues) edge_match = edge_match || i.check == "edge-match";
  EXPECT_TRUE(edge_match);
}

TEST(Combmap, BrokenTwinIsStructural) {
  auto t = build_earth_map(16, EarthMapKind::kE2);
  t.tiles[0].twin[0] = t.tiles[0].twin[1];
  auto r = verify_tiling(t);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.issues.front().check, "structure");
}

TEST(Combmap, CompanionPairs) {
  auto r = verify_tiling(build_earth_map(16, EarthMapKind::kE2));
  EXPECT_EQ(r.matched_pairs + r.twisted_pairs, 8);
}

TEST(Combmap, IsomorphismIgnoresTileOrder) {
  auto t = build_earth_map(20, EarthMapKind::kE2);
  for (unsigned seed : {1u, 2u, 3u}) {
    auto p = permuted(t, seed);
    ASSERT_TRUE(verify_tiling(p).ok);
    EXPECT_TRUE(isomorphic(t, p));
    EXPECT_EQ(canonical_form(t), canonical_form(p));
  }
  EXPECT_TRUE(isomorphic(t, mirror(t)));
  EXPECT_FALSE(isomorphic(t, build_earth_map(20, EarthMapKind::kE1)));
  EXPECT_FALSE(isomorphic(build_earth_map(16, EarthMapKind::kE2), build_earth_map(20, EarthMapKind::kE2)));
}

TEST(Combmap, MirrorAndExchangeStayValid) {
  auto t = build_earth_map(16, EarthMapKind::kE2);
  auto m = mirror(t);
  ASSERT_TRUE(verify_tiling(m).ok);
  EXPECT_EQ(mirror(m), t);
  auto x = exchange_labels(t);
  ASSERT_TRUE(verify_tiling(x).ok);
  EXPECT_EQ(exchange_labels(x), t);
}

TEST(Combmap, JsonRoundTrip) {
  for (auto kind : {EarthMapKind::kE1, EarthMapKind::kE2}) {
    auto t = build_earth_map(24, kind);
    auto text = tiling_to_json(t).dump();
    EXPECT_EQ(tiling_from_json(nlohmann::json::parse(text)), t);
  }
  auto j = tiling_to_json(build_earth_map(16, EarthMapKind::kE2));
  j["f"] = 17;
  EXPECT_THROW(tiling_from_json(j), Error);
}

TEST(Combmap, EarthMapRejectsBadF) {
  EXPECT_THROW(build_earth_map(18, EarthMapKind::kE2), Error);
  EXPECT_THROW(build_earth_map(8, EarthMapKind::kE1), Error);
}
