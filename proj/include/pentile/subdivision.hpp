#pragma once

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "pentile/combmap.hpp"

namespace pentile {

enum class SubdivisionCase { kAlphaCubed, kGammaCubed };

namespace detail {

inline std::vector<Eigen::Vector3d> octahedron_vertices() {
  return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

inline std::vector<Eigen::Vector3d> icosahedron_vertices() {
  const double g = (1 + std::sqrt(5.0)) / 2;
  std::vector<Eigen::Vector3d> v;
  for (double s : {1.0, -1.0})
    for (double t : {g, -g}) {
      v.push_back({0, s, t});
      v.push_back({s, t, 0});
      v.push_back({t, 0, s});
    }
  return v;
}

// Triangles of mutually nearest vertices, each listed counterclockwise seen from outside.
inline std::vector<std::array<int, 3>> hull_triangles(const std::vector<Eigen::Vector3d>& v) {
  int n = static_cast<int>(v.size());
  double d = INFINITY;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d = std::min(d, (v[i] - v[j]).norm());
  auto near = [&](int i, int j) { return std::abs((v[i] - v[j]).norm() - d) < 1e-9; };
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (!near(i, j) || !near(j, k) || !near(i, k)) continue;
        Eigen::Vector3d nrm = (v[j] - v[i]).cross(v[k] - v[i]);
        if (nrm.dot(v[i] + v[j] + v[k]) > 0)
          out.push_back({i, j, k});
        else
          out.push_back({i, k, j});
      }
  return out;
}

} // namespace detail

// Pentagonal subdivision of the octahedron (24 tiles) or icosahedron (60 tiles). Each triangle
// (V1, V2, V3) gives the tile (C, p12, V2, p23, p32): C the centre, p12 the third point of V1V2 next
// to V2, and the b-edge is the middle third p23 p32 of V2V3.
inline CombinatorialTiling build_pentagonal_subdivision(int solid_faces, SubdivisionCase variant) {
  std::vector<Eigen::Vector3d> verts;
  if (solid_faces == 8)
    verts = detail::octahedron_vertices();
  else if (solid_faces == 20)
    verts = detail::icosahedron_vertices();
  else
    throw Error("inadmissible", "pentagonal subdivision needs the octahedron or icosahedron");
  auto tris = detail::hull_triangles(verts);
  int next_id = static_cast<int>(verts.size());
  std::map<std::pair<int, int>, int> third;
  auto point = [&](int u, int v) {
    auto [it, fresh] = third.emplace(std::make_pair(u, v), next_id);
    if (fresh) ++next_id;
    return it->second;
  };
  const auto a = kAlpha, b = kBeta, c = kGamma, d = kDelta, e = kEpsilon;
  std::array<Label, 5> lab = variant == SubdivisionCase::kAlphaCubed ? std::array<Label, 5>{b, a, c, e, d}
                                                                     : std::array<Label, 5>{c, a, b, d, e};
  std::vector<std::array<int, 5>> faces;
  std::vector<std::array<Label, 5>> labels;
  for (const auto& tri : tris) {
    int centre = next_id++;
    for (int k = 0; k < 3; ++k) {
      int v1 = tri[k], v2 = tri[(k + 1) % 3], v3 = tri[(k + 2) % 3];
      faces.push_back({centre, point(v2, v1), v2, point(v2, v3), point(v3, v2)});
      labels.push_back(lab);
    }
  }
  return tiling_from_faces(faces, labels);
}

} // namespace pentile
