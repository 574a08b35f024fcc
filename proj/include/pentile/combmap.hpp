#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pentile/vertex.hpp"

namespace pentile {

enum class EdgeLen { kA, kB };

struct Dart {
  int tile = -1;
  int slot = -1;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Counterclockwise corner cycles. The b-edge runs delta -> epsilon on a positive tile.
inline constexpr std::array<Label, 5> kPositiveCycle = {kAlpha, kBeta, kDelta, kEpsilon, kGamma};
inline constexpr std::array<Label, 5> kNegativeCycle = {kAlpha, kGamma, kEpsilon, kDelta, kBeta};

// Slot k is the edge from corner k to corner k+1, counterclockwise.
struct Tile {
  std::array<Label, 5> corners{};
  int orientation = +1;
  std::array<Dart, 5> twin{};
  std::array<EdgeLen, 5> edge{};
};

struct CombinatorialTiling {
  std::vector<Tile> tiles;

  int f() const { return static_cast<int>(tiles.size()); }
  const Dart& twin(Dart d) const { return tiles[d.tile].twin[d.slot]; }
  Dart& twin(Dart d) { return tiles[d.tile].twin[d.slot]; }
  Label corner(Dart d) const { return tiles[d.tile].corners[d.slot]; }
  EdgeLen edge(Dart d) const { return tiles[d.tile].edge[d.slot]; }
};

inline Dart next(Dart d) { return {d.tile, (d.slot + 1) % 5}; }
inline Dart prev(Dart d) { return {d.tile, (d.slot + 4) % 5}; }

// Edge labels implied by a corner cycle: b where the two endpoints are delta and epsilon.
inline std::array<EdgeLen, 5> edges_from_corners(const std::array<Label, 5>& c) {
  std::array<EdgeLen, 5> e{};
  for (int k = 0; k < 5; ++k) {
    Label x = c[k], y = c[(k + 1) % 5];
    bool b = (x == kDelta && y == kEpsilon) || (x == kEpsilon && y == kDelta);
    e[k] = b ? EdgeLen::kB : EdgeLen::kA;
  }
  return e;
}

// Orientation of a corner cycle: +1, -1, or 0 if it is neither cycle.
inline int cycle_orientation(const std::array<Label, 5>& c) {
  for (int r = 0; r < 5; ++r) {
    bool pos = true, neg = true;
    for (int k = 0; k < 5; ++k) {
      pos = pos && c[(r + k) % 5] == kPositiveCycle[k];
      neg = neg && c[(r + k) % 5] == kNegativeCycle[k];
    }
    if (pos) return +1;
    if (neg) return -1;
  }
  return 0;
}

// Builds a tiling from faces given as counterclockwise vertex lists with corner labels.
inline CombinatorialTiling tiling_from_faces(const std::vector<std::array<int, 5>>& faces,
                                             const std::vector<std::array<Label, 5>>& labels) {
  CombinatorialTiling t;
  t.tiles.resize(faces.size());
  std::map<std::pair<int, int>, Dart> directed;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    Tile& tile = t.tiles[i];
    tile.corners = labels[i];
    tile.orientation = cycle_orientation(labels[i]);
    if (tile.orientation == 0) throw Error("bad-face", "face " + std::to_string(i) + " has an invalid corner cycle");
    tile.edge = edges_from_corners(labels[i]);
    for (int k = 0; k < 5; ++k) {
      auto key = std::make_pair(faces[i][k], faces[i][(k + 1) % 5]);
      if (!directed.emplace(key, Dart{i, k}).second)
        throw Error("bad-face", "directed edge repeated at face " + std::to_string(i));
    }
  }
  for (const auto& [key, d] : directed) {
    auto it = directed.find({key.second, key.first});
    if (it == directed.end()) throw Error("bad-face", "edge without opposite at face " + std::to_string(d.tile));
    t.twin(d) = it->second;
  }
  return t;
}

// Vertex ids per corner: the orbit of twin(prev(.)) around a vertex.
struct VertexIndex {
  std::vector<std::array<int, 5>> id;  // id[tile][corner]
  std::vector<std::vector<Dart>> corners;  // corners around each vertex, counterclockwise
  int count() const { return static_cast<int>(corners.size()); }
};

inline Dart rotate_around_vertex(const CombinatorialTiling& t, Dart d) { return t.twin(prev(d)); }

inline VertexIndex index_vertices(const CombinatorialTiling& t) {
  VertexIndex vi;
  vi.id.assign(t.tiles.size(), {-1, -1, -1, -1, -1});
  for (int i = 0; i < t.f(); ++i)
    for (int k = 0; k < 5; ++k) {
      if (vi.id[i][k] >= 0) continue;
      int v = vi.count();
      vi.corners.emplace_back();
      Dart d{i, k};
      for (int guard = 0; guard <= 5 * t.f(); ++guard) {
        if (d.tile < 0 || d.tile >= t.f() || d.slot < 0 || d.slot > 4)
          throw Error("bad-structure", "dangling twin reached at tile " + std::to_string(i));
        if (vi.id[d.tile][d.slot] == v) break;
        if (vi.id[d.tile][d.slot] >= 0) throw Error("bad-structure", "vertex orbit is not a cycle");
        vi.id[d.tile][d.slot] = v;
        vi.corners[v].push_back(d);
        d = rotate_around_vertex(t, d);
      }
    }
  return vi;
}

inline VertexType vertex_type(const CombinatorialTiling& t, const std::vector<Dart>& around) {
  VertexType v;
  for (Dart d : around) v[t.corner(d)] += 1;
  return v;
}

struct Issue {
  std::string check;
  std::string entity;
  std::string message;
};

struct VerifyReport {
  bool ok = true;
  int v = 0, e = 0, f = 0;
  std::map<int, int> degrees;
  int twisted_pairs = 0, matched_pairs = 0;
  std::vector<Issue> issues;

  void fail(std::string check, std::string entity, std::string message) {
    ok = false;
    issues.push_back({std::move(check), std::move(entity), std::move(message)});
  }
};

inline std::string dart_name(Dart d) { return "tile " + std::to_string(d.tile) + " slot " + std::to_string(d.slot); }

inline VerifyReport verify_tiling(const CombinatorialTiling& t) {
  VerifyReport r;
  r.f = t.f();
  // (i) twin is a fixed-point-free involution
  for (int i = 0; i < t.f(); ++i)
    for (int k = 0; k < 5; ++k) {
      Dart d{i, k}, o = t.twin(d);
      if (o.tile < 0 || o.tile >= t.f() || o.slot < 0 || o.slot > 4) {
        r.fail("structure", dart_name(d), "twin out of range");
        continue;
      }
      if (o.tile == i) r.fail("structure", dart_name(d), "edge glued to its own tile");
      if (t.twin(o) != d) r.fail("structure", dart_name(d), "twin is not an involution");
    }
  if (!r.ok) return r;
  // (ii) corner cycle matches orientation
  for (int i = 0; i < t.f(); ++i) {
    int o = cycle_orientation(t.tiles[i].corners);
    if (o == 0) r.fail("labels", "tile " + std::to_string(i), "corner cycle is not a pentagon labelling");
    else if (o != t.tiles[i].orientation) r.fail("labels", "tile " + std::to_string(i), "orientation disagrees with corner cycle");
    if (t.tiles[i].edge != edges_from_corners(t.tiles[i].corners))
      r.fail("labels", "tile " + std::to_string(i), "edge lengths disagree with corners");
  }
  // (iii) twins carry equal edge lengths
  for (int i = 0; i < t.f(); ++i)
    for (int k = 0; k < 5; ++k) {
      Dart d{i, k};
      if (t.edge(d) != t.edge(t.twin(d))) r.fail("edge-match", dart_name(d), "a-edge glued to b-edge");
    }
  VertexIndex vi;
  try {
    vi = index_vertices(t);
  } catch (const Error& e) {
    r.fail("structure", "vertices", e.what());
    return r;
  }
  r.v = vi.count();
  r.e = 5 * t.f() / 2;
  // (iv) Euler
  if (5 * t.f() % 2 != 0) r.fail("euler", "tiling", "5f is odd");
  if (r.v - r.e + r.f != 2) r.fail("euler", "tiling", "v - e + f = " + std::to_string(r.v - r.e + r.f));
  // (v) degree identities
  long fsum = 12, v3sum = 20;
  for (int v = 0; v < vi.count(); ++v) {
    int k = static_cast<int>(vi.corners[v].size());
    r.degrees[k] += 1;
    if (k < 3) r.fail("degree", "vertex " + std::to_string(v), "degree " + std::to_string(k));
    // (vi) parity
    if (!parity_check(vertex_type(t, vi.corners[v])))
      r.fail("parity", "vertex " + std::to_string(v), "odd number of delta and epsilon");
  }
  for (const auto& [k, n] : r.degrees)
    if (k >= 4) {
      fsum += 2L * (k - 3) * n;
      v3sum += (3L * k - 10) * n;
    }
  if (fsum != t.f()) r.fail("vertex-count", "tiling", "f != 12 + sum 2(k-3) v_k");
  if (r.degrees.count(3) ? r.degrees.at(3) != v3sum : v3sum != 0)
    r.fail("vertex-count", "tiling", "v3 != 20 + sum (3k-10) v_k");
  // (vii) companion pairs
  for (int i = 0; i < t.f(); ++i)
    for (int k = 0; k < 5; ++k) {
      Dart d{i, k};
      if (t.edge(d) != EdgeLen::kB) continue;
      Dart o = t.twin(d);
      if (o.tile < i) continue;
      // the corner at the start of d meets the corner at the start of next(o)
      Label here = t.corner(d), there = t.corner(next(o));
      if (here == there) ++r.matched_pairs;
      else ++r.twisted_pairs;
    }
  return r;
}

inline AVCCounts extract_avc(const CombinatorialTiling& t) {
  VertexIndex vi = index_vertices(t);
  AVCCounts out;
  for (const auto& c : vi.corners) out[vertex_type(t, c)] += 1;
  return out;
}

inline AVC avc_types(const AVCCounts& c) {
  AVC out;
  for (const auto& [v, n] : c) out.insert(v);
  return out;
}

inline std::map<int, int> degree_stats(const CombinatorialTiling& t) {
  std::map<int, int> out;
  for (const auto& c : index_vertices(t).corners) out[static_cast<int>(c.size())] += 1;
  return out;
}

// Mirror image: every tile's corner cycle reversed. New slot j is old slot 4-j.
inline CombinatorialTiling mirror(const CombinatorialTiling& t) {
  CombinatorialTiling m = t;
  for (int i = 0; i < t.f(); ++i) {
    const Tile& a = t.tiles[i];
    Tile& b = m.tiles[i];
    for (int j = 0; j < 5; ++j) {
      b.corners[j] = a.corners[(5 - j) % 5];
      Dart o = a.twin[4 - j];
      b.twin[j] = {o.tile, 4 - o.slot};
      b.edge[j] = a.edge[4 - j];
    }
    b.orientation = -a.orientation;
  }
  return m;
}

// Exchange (beta, delta) <-> (gamma, epsilon) on every tile; flips every orientation.
inline CombinatorialTiling exchange_labels(const CombinatorialTiling& t) {
  static constexpr std::array<Label, 5> swap = {kAlpha, kGamma, kBeta, kEpsilon, kDelta};
  CombinatorialTiling m = t;
  for (Tile& tile : m.tiles) {
    for (Label& c : tile.corners) c = swap[c];
    tile.orientation = -tile.orientation;
  }
  return m;
}

struct CanonicalOptions {
  bool allow_mirror = true;
  bool collapse_symmetric = false;  // identify beta with gamma and delta with epsilon
};

// Lexicographically least breadth-first encoding over all starting darts.
inline std::vector<int> canonical_form(const CombinatorialTiling& t, CanonicalOptions opt = {}) {
  auto code_label = [&](Label l) {
    if (!opt.collapse_symmetric) return static_cast<int>(l);
    return static_cast<int>(l == kGamma ? kBeta : l == kEpsilon ? kDelta : l);
  };
  auto encode = [&](const CombinatorialTiling& g, Dart start) {
    std::vector<int> order(g.f(), -1), entry(g.f(), -1), code;
    code.reserve(static_cast<std::size_t>(g.f()) * 11);
    std::queue<int> q;
    order[start.tile] = 0;
    entry[start.tile] = start.slot;
    q.push(start.tile);
    int seen = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      int s = entry[i];
      code.push_back(opt.collapse_symmetric ? 0 : g.tiles[i].orientation);
      for (int k = 0; k < 5; ++k) {
        Dart d{i, (s + k) % 5};
        code.push_back(code_label(g.corner(d)));
        Dart o = g.twin(d);
        if (order[o.tile] < 0) {
          order[o.tile] = seen++;
          entry[o.tile] = o.slot;
          q.push(o.tile);
        }
        code.push_back(order[o.tile]);
        code.push_back((o.slot - entry[o.tile] + 5) % 5);
      }
    }
    return code;
  };
  std::vector<int> best;
  std::vector<const CombinatorialTiling*> variants = {&t};
  CombinatorialTiling m;
  if (opt.allow_mirror) {
    m = mirror(t);
    variants.push_back(&m);
  }
  for (const auto* g : variants)
    for (int i = 0; i < g->f(); ++i)
      for (int k = 0; k < 5; ++k) {
        auto c = encode(*g, {i, k});
        if (best.empty() || c < best) best = std::move(c);
      }
  return best;
}

inline bool isomorphic(const CombinatorialTiling& x, const CombinatorialTiling& y, CanonicalOptions opt = {}) {
  return x.f() == y.f() && canonical_form(x, opt) == canonical_form(y, opt);
}

inline nlohmann::json tiling_to_json(const CombinatorialTiling& t) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const Tile& tile : t.tiles) {
    nlohmann::json corners = nlohmann::json::array(), hes = nlohmann::json::array();
    for (int k = 0; k < 5; ++k) {
      corners.push_back(label_name(tile.corners[k]));
      hes.push_back({{"twin", {tile.twin[k].tile, tile.twin[k].slot}}, {"edge", tile.edge[k] == EdgeLen::kA ? "a" : "b"}});
    }
    tiles.push_back({{"corners", corners}, {"orientation", tile.orientation > 0 ? "+" : "-"}, {"halfedges", hes}});
  }
  return {{"f", t.f()}, {"tiles", tiles}};
}

inline CombinatorialTiling tiling_from_json(const nlohmann::json& j) {
  CombinatorialTiling t;
  for (const auto& jt : j.at("tiles")) {
    Tile tile;
    for (int k = 0; k < 5; ++k) {
      tile.corners[k] = label_from_name(jt.at("corners").at(k).get<std::string>());
      const auto& he = jt.at("halfedges").at(k);
      tile.twin[k] = {he.at("twin").at(0).get<int>(), he.at("twin").at(1).get<int>()};
      std::string e = he.at("edge").get<std::string>();
      if (e != "a" && e != "b") throw Error("bad-json", "edge label must be a or b");
      tile.edge[k] = e == "a" ? EdgeLen::kA : EdgeLen::kB;
    }
    std::string o = jt.at("orientation").get<std::string>();
    tile.orientation = o == "-" ? -1 : +1;
    t.tiles.push_back(tile);
  }
  if (j.contains("f") && j["f"].get<int>() != t.f()) throw Error("bad-json", "f does not match tile count");
  return t;
}

inline bool operator==(const Tile& x, const Tile& y) {
  return x.corners == y.corners && x.orientation == y.orientation && x.twin == y.twin && x.edge == y.edge;
}
inline bool operator==(const CombinatorialTiling& x, const CombinatorialTiling& y) { return x.tiles == y.tiles; }

} // namespace pentile
