#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pentile/combmap.hpp"

namespace pentile {

// Exact affine family of angle values (in units of pi): base + span(directions).
// A vertex is admissible when its angle sum equals 2pi on the whole family.
struct AngleSystem {
  std::string name;
  std::array<Angle, 5> base{};
  std::vector<std::array<Angle, 5>> directions;

  bool admits(const VertexType& v) const {
    Angle s;
    for (Label l : kLabels) s += v[l] * base[l];
    if (s != Angle(2)) return false;
    for (const auto& d : directions) {
      Angle x;
      for (Label l : kLabels) x += v[l] * d[l];
      if (x != Angle(0)) return false;
    }
    return true;
  }
};

using Region = std::set<int>;

// Boundary darts of a region, in counterclockwise order around the region.
// Returns an empty vector when the boundary is not a single cycle.
inline std::vector<Dart> boundary_cycle(const CombinatorialTiling& t, const Region& r) {
  auto inside = [&](Dart d) { return r.count(d.tile) > 0; };
  std::vector<Dart> all;
  for (int i : r)
    for (int k = 0; k < 5; ++k)
      if (!inside(t.twin({i, k}))) all.push_back({i, k});
  if (all.empty()) return {};
  std::vector<Dart> cycle;
  Dart d = all.front();
  for (std::size_t guard = 0; guard <= all.size(); ++guard) {
    cycle.push_back(d);
    Dart g = next(d);
    int spins = 0;
    while (inside(t.twin(g))) {
      g = next(t.twin(g));
      if (++spins > 5 * t.f()) return {};
    }
    d = g;
    if (d == cycle.front()) break;
  }
  if (cycle.size() != all.size()) return {};
  return cycle;
}

// A region is a disk when it is edge-connected, has one boundary cycle through
// distinct vertices, and Euler characteristic 1.
inline bool is_disk(const CombinatorialTiling& t, const Region& r) {
  if (r.empty() || static_cast<int>(r.size()) >= t.f()) return false;
  auto cyc = boundary_cycle(t, r);
  if (cyc.empty()) return false;
  VertexIndex vi = index_vertices(t);
  std::set<int> bverts;
  for (Dart d : cyc)
    if (!bverts.insert(vi.id[d.tile][d.slot]).second) return false;
  std::set<int> verts;
  int inner_edges = 0;
  for (int i : r)
    for (int k = 0; k < 5; ++k) {
      verts.insert(vi.id[i][k]);
      if (r.count(t.twin({i, k}).tile)) ++inner_edges;
    }
  int edges = inner_edges / 2 + static_cast<int>(cyc.size());
  if (static_cast<int>(verts.size()) - edges + static_cast<int>(r.size()) != 1) return false;
  std::set<int> seen = {*r.begin()};
  std::vector<int> stack = {*r.begin()};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int k = 0; k < 5; ++k) {
      int j = t.twin({i, k}).tile;
      if (r.count(j) && seen.insert(j).second) stack.push_back(j);
    }
  }
  return seen.size() == r.size();
}

// Regions are cut along their boundary and glued back rotated or reflected.
// The gluing is returned even when edge lengths do not match; validate afterwards.
inline CombinatorialTiling reglue_rotate(const CombinatorialTiling& t, const Region& r, int k) {
  auto h = boundary_cycle(t, r);
  if (h.empty()) throw Error("not-a-disk", "region boundary is not a single cycle");
  int n = static_cast<int>(h.size());
  CombinatorialTiling out = t;
  for (int i = 0; i < n; ++i) {
    Dart inner = h[((i + k) % n + n) % n];
    Dart outer = t.twin(h[i]);
    out.twin(inner) = outer;
    out.twin(outer) = inner;
  }
  return out;
}

// Reflection: inner tiles are mirrored and boundary dart i is glued to the outer twin of
// boundary dart c-i. Odd c = 2j-1 keeps the boundary vertex at the start of dart j in place.
inline CombinatorialTiling reglue_reflect(const CombinatorialTiling& t, const Region& r, int c) {
  auto h = boundary_cycle(t, r);
  if (h.empty()) throw Error("not-a-disk", "region boundary is not a single cycle");
  int n = static_cast<int>(h.size());
  CombinatorialTiling out = t;
  for (int i : r) {
    const Tile& a = t.tiles[i];
    Tile& b = out.tiles[i];
    for (int j = 0; j < 5; ++j) {
      b.corners[j] = a.corners[(5 - j) % 5];
      b.edge[j] = a.edge[4 - j];
      Dart o = a.twin[4 - j];
      if (r.count(o.tile)) b.twin[j] = {o.tile, 4 - o.slot};
    }
    b.orientation = -a.orientation;
  }
  for (int i = 0; i < n; ++i) {
    Dart inner{h[i].tile, 4 - h[i].slot};
    Dart outer = t.twin(h[((c - i) % n + n) % n]);
    out.twin(inner) = outer;
    out.twin(outer) = inner;
  }
  return out;
}

struct Validation {
  bool ok = false;
  std::string reason;
};

inline Validation validate_under(const CombinatorialTiling& t, const AngleSystem& sys) {
  VerifyReport rep = verify_tiling(t);
  if (!rep.ok) return {false, rep.issues.front().check + ": " + rep.issues.front().message};
  for (const auto& [v, n] : extract_avc(t))
    if (!sys.admits(v)) return {false, "vertex " + v.name() + " violates " + sys.name};
  return {true, ""};
}

} // namespace pentile
