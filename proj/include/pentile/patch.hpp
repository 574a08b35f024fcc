#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <vector>

#include "pentile/combmap.hpp"
#include "pentile/surgery.hpp"

namespace pentile {

inline int slot_of(const Tile& t, Label l) {
  for (int s = 0; s < 5; ++s)
    if (t.corners[s] == l) return s;
  return -1;
}

// Slot of the edge whose endpoints carry labels x and y.
inline int edge_between(const Tile& t, Label x, Label y) {
  for (int s = 0; s < 5; ++s) {
    Label p = t.corners[s], q = t.corners[(s + 1) % 5];
    if ((p == x && q == y) || (p == y && q == x)) return s;
  }
  return -1;
}

// Four tiles of one orientation: T1, T2 share their beta-delta edges, T4 and T3 are the
// b-edge companions of T1 and T2, and T4, T3 close up against the alpha-beta edges of T2, T1.
struct PatchA {
  std::array<int, 4> tiles{};  // T1, T2, T3, T4

  std::set<int> tile_set() const { return {tiles.begin(), tiles.end()}; }
};

inline std::vector<PatchA> find_patches(const CombinatorialTiling& t) {
  std::vector<PatchA> out;
  std::set<std::set<int>> seen;
  for (int i = 0; i < t.f(); ++i) {
    const Tile& t1 = t.tiles[i];
    Dart d2 = t1.twin[edge_between(t1, kBeta, kDelta)];
    int j = d2.tile;
    const Tile& t2 = t.tiles[j];
    if (j == i || t2.orientation != t1.orientation || d2.slot != edge_between(t2, kBeta, kDelta)) continue;
    int k4 = t1.twin[edge_between(t1, kDelta, kEpsilon)].tile;
    int k3 = t2.twin[edge_between(t2, kDelta, kEpsilon)].tile;
    const Tile& t4 = t.tiles[k4];
    const Tile& t3 = t.tiles[k3];
    if (t4.orientation != t1.orientation || t3.orientation != t1.orientation) continue;
    if (t4.twin[edge_between(t4, kEpsilon, kGamma)] != Dart{j, edge_between(t2, kAlpha, kBeta)}) continue;
    if (t3.twin[edge_between(t3, kEpsilon, kGamma)] != Dart{i, edge_between(t1, kAlpha, kBeta)}) continue;
    std::set<int> s = {i, j, k3, k4};
    if (s.size() != 4 || !seen.insert(s).second) continue;
    out.push_back({{i, j, k3, k4}});
  }
  return out;
}

// Pairs of patches with no tile in common.
inline int disjoint_patch_pairs(const std::vector<PatchA>& ps) {
  int n = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      std::set<int> s = ps[i].tile_set();
      s.insert(ps[j].tiles.begin(), ps[j].tiles.end());
      if (s.size() == 8) ++n;
    }
  return n;
}

// Reflection of the patch across the line through the gamma corners of T1 and T2.
inline CombinatorialTiling flip_patch(const CombinatorialTiling& t, const PatchA& p) {
  Region r = p.tile_set();
  auto h = boundary_cycle(t, r);
  Dart tip{p.tiles[0], slot_of(t.tiles[p.tiles[0]], kGamma)};
  for (int j = 0; j < static_cast<int>(h.size()); ++j)
    if (h[j] == tip) return reglue_reflect(t, r, 2 * j - 1);
  throw Error("no-patch-at-location", "gamma tip of the patch is not on its boundary");
}

// Every way to relabel the given tiles (rotation and orientation of each corner cycle) that keeps
// the face graph, matches edge lengths across twins and leaves every vertex admissible.
// A nonempty allowed set further restricts the vertex types that may appear.
inline std::vector<CombinatorialTiling> relabelings(const CombinatorialTiling& t, const std::vector<int>& tiles,
                                                    const AngleSystem& sys, const AVC& allowed = {}) {
  std::vector<CombinatorialTiling> out;
  CombinatorialTiling w = t;
  VertexIndex vi = index_vertices(t);
  std::vector<char> fixed(t.f(), 1);
  for (int i : tiles) fixed[i] = 0;
  auto assign = [&](int i, int r, int o) {
    Tile& tile = w.tiles[i];
    const auto& cyc = o > 0 ? kPositiveCycle : kNegativeCycle;
    for (int k = 0; k < 5; ++k) tile.corners[k] = cyc[(k + r) % 5];
    tile.orientation = o;
    tile.edge = edges_from_corners(tile.corners);
  };
  auto vertex_ok = [&](int v) {
    VertexType vt;
    for (Dart d : vi.corners[v]) {
      if (!fixed[d.tile]) return true;
      vt.counts[w.corner(d)]++;
    }
    return sys.admits(vt) && (allowed.empty() || allowed.count(vt) > 0);
  };
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == tiles.size()) {
      out.push_back(w);
      return;
    }
    int i = tiles[idx];
    for (int o : {1, -1})
      for (int r = 0; r < 5; ++r) {
        assign(i, r, o);
        fixed[i] = 1;
        bool ok = true;
        for (int k = 0; k < 5 && ok; ++k) {
          Dart tw = w.tiles[i].twin[k];
          if (fixed[tw.tile] && w.edge(tw) != w.tiles[i].edge[k]) ok = false;
        }
        for (int k = 0; k < 5 && ok; ++k) ok = vertex_ok(vi.id[i][k]);
        if (ok) rec(idx + 1);
        fixed[i] = 0;
      }
    w.tiles[i] = t.tiles[i];
  };
  rec(0);
  return out;
}

inline int tiles_differing(const CombinatorialTiling& x, const CombinatorialTiling& y) {
  int n = 0;
  for (int i = 0; i < x.f(); ++i)
    if (!(x.tiles[i] == y.tiles[i])) ++n;
  return n;
}

} // namespace pentile
