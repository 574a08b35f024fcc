#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pentile/combmap.hpp"
#include "pentile/pentagon.hpp"

namespace pentile {

struct RealizedTiling {
  CombinatorialTiling base;
  PentagonSpec pentagon;
  VertexIndex vertices;
  std::vector<Vec3> positions;   // per vertex, unit length
  std::vector<Mat3> placement;   // per tile, rotation taking the template to the sphere
  std::vector<char> mirrored;    // per tile, template reflected before rotating
  double closure_residual = 0.0;
};

struct RealizeOptions {
  double tol = 1e-8;
};

namespace detail {

// Template corner positions indexed by label, for the given handedness.
inline std::array<Vec3, 5> corner_template(const PentagonSpec& p, bool mirror) {
  static constexpr std::array<Label, 5> order = {kAlpha, kBeta, kDelta, kEpsilon, kGamma};
  auto v = pentagon_vertices(p);
  std::array<Vec3, 5> by_label;
  for (int i = 0; i < 5; ++i) {
    by_label[order[i]] = v[i];
    if (mirror) by_label[order[i]].y() = -by_label[order[i]].y();
  }
  return by_label;
}

inline Mat3 frame(const Vec3& u, const Vec3& w) {
  Vec3 e1 = u.normalized();
  Vec3 e2 = (w - w.dot(e1) * e1).normalized();
  Mat3 m;
  m.col(0) = e1;
  m.col(1) = e2;
  m.col(2) = e1.cross(e2);
  return m;
}

inline std::vector<Vec3> arc_samples(const Vec3& p, const Vec3& q, int samples) {
  double ang = std::acos(std::clamp(p.dot(q), -1.0, 1.0));
  std::vector<Vec3> out;
  for (int i = 0; i <= samples; ++i) {
    double t = static_cast<double>(i) / samples;
    if (ang < 1e-12) {
      out.push_back(p);
      continue;
    }
    out.push_back((std::sin((1 - t) * ang) * p + std::sin(t * ang) * q) / std::sin(ang));
  }
  return out;
}

} // namespace detail

// Places tile 0 with its alpha corner at the north pole and spreads across shared edges breadth first.
inline RealizedTiling realize(const CombinatorialTiling& t, const PentagonSpec& p, RealizeOptions opt = {}) {
  VerifyReport rep = verify_tiling(t);
  if (!rep.ok) throw Error("invalid-tiling", rep.issues.front().check + ": " + rep.issues.front().message);
  RealizedTiling r;
  r.base = t;
  r.pentagon = p;
  r.vertices = index_vertices(t);
  const std::array<std::array<Vec3, 5>, 2> tmpl = {detail::corner_template(p, false),
                                                   detail::corner_template(p, true)};
  int n = t.f();
  r.placement.assign(n, Mat3::Identity());
  r.mirrored.assign(n, 0);
  for (int i = 0; i < n; ++i) r.mirrored[i] = t.tiles[i].orientation * p.orientation < 0;
  auto local = [&](int i, int slot) -> const Vec3& { return tmpl[r.mirrored[i]][t.tiles[i].corners[slot]]; };
  auto world = [&](int i, int slot) -> Vec3 { return r.placement[i] * local(i, slot); };
  std::vector<char> placed(n, 0);
  std::queue<int> todo;
  placed[0] = 1;
  todo.push(0);
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop();
    for (int k = 0; k < 5; ++k) {
      Dart o = t.twin({i, k});
      if (placed[o.tile]) continue;
      int j = o.tile, m = o.slot;
      Mat3 g = detail::frame(world(i, (k + 1) % 5), world(i, k));
      Mat3 l = detail::frame(local(j, m), local(j, (m + 1) % 5));
      r.placement[j] = g * l.transpose();
      placed[j] = 1;
      todo.push(j);
    }
  }
  std::vector<std::vector<Vec3>> cand(r.vertices.count());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 5; ++k) cand[r.vertices.id[i][k]].push_back(world(i, k));
  r.positions.resize(cand.size());
  for (std::size_t v = 0; v < cand.size(); ++v) {
    Vec3 s = Vec3::Zero();
    for (const Vec3& c : cand[v]) s += c;
    r.positions[v] = s.normalized();
    for (std::size_t x = 0; x < cand[v].size(); ++x)
      for (std::size_t y = x + 1; y < cand[v].size(); ++y)
        r.closure_residual = std::max(r.closure_residual, (cand[v][x] - cand[v][y]).norm());
  }
  if (r.closure_residual > opt.tol) {
    std::ostringstream msg;
    msg << "merged vertex candidates differ by " << r.closure_residual << " > " << opt.tol;
    throw Error("closure-failure", msg.str());
  }
  return r;
}

inline std::array<Vec3, 5> tile_corners(const RealizedTiling& r, int i) {
  std::array<Vec3, 5> out;
  for (int k = 0; k < 5; ++k) out[k] = r.positions[r.vertices.id[i][k]];
  return out;
}

// Interior angle at each corner of tile i, measured from the realized positions.
inline std::array<double, 5> tile_angles(const RealizedTiling& r, int i) {
  auto v = tile_corners(r, i);
  std::array<double, 5> out;
  for (int k = 0; k < 5; ++k) {
    const Vec3& x = v[k];
    Vec3 tn = v[(k + 1) % 5] - v[(k + 1) % 5].dot(x) * x;
    Vec3 tp = v[(k + 4) % 5] - v[(k + 4) % 5].dot(x) * x;
    double a = std::atan2(x.dot(tn.cross(tp)), tn.dot(tp));
    out[k] = a < 0 ? a + 2 * kPi : a;
  }
  return out;
}

inline double tile_area(const RealizedTiling& r, int i) {
  auto a = tile_angles(r, i);
  return a[0] + a[1] + a[2] + a[3] + a[4] - 3 * kPi;
}

inline double total_area(const RealizedTiling& r) {
  double s = 0;
  for (int i = 0; i < r.base.f(); ++i) s += tile_area(r, i);
  return s;
}

inline bool tiles_simple(const RealizedTiling& r) {
  for (int i = 0; i < r.base.f(); ++i)
    if (!polygon_is_simple(tile_corners(r, i))) return false;
  return true;
}

// ---- export ----

enum class ExportFormat { kJson, kObj, kSvg };

inline ExportFormat parse_export_format(const std::string& s) {
  if (s == "json") return ExportFormat::kJson;
  if (s == "obj") return ExportFormat::kObj;
  if (s == "svg") return ExportFormat::kSvg;
  throw Error("bad-format", "unknown export format '" + s + "'");
}

struct ExportOptions {
  int arc_samples = 16;
  Vec3 pole = Vec3(0, 0, -1);
};

inline nlohmann::json realized_to_json(const RealizedTiling& r) {
  nlohmann::json j = tiling_to_json(r.base);
  j["positions"] = nlohmann::json::array();
  for (const Vec3& p : r.positions) j["positions"].push_back({p.x(), p.y(), p.z()});
  j["vertex_ids"] = r.vertices.id;
  j["pentagon"] = to_json(r.pentagon);
  j["closure_residual"] = r.closure_residual;
  return j;
}

// Unique edges as (tile, slot) with the lower dart first.
inline std::vector<Dart> edge_representatives(const CombinatorialTiling& t) {
  std::vector<Dart> out;
  for (int i = 0; i < t.f(); ++i)
    for (int k = 0; k < 5; ++k) {
      Dart d{i, k}, o = t.twin(d);
      if (i < o.tile || (i == o.tile && k < o.slot)) out.push_back(d);
    }
  return out;
}

inline std::string to_obj(const RealizedTiling& r, const ExportOptions& opt = {}) {
  std::ostringstream os;
  os.precision(12);
  os << "# " << r.base.f() << " pentagons on the unit sphere\n";
  for (const Vec3& p : r.positions) os << "v " << p.x() << ' ' << p.y() << ' ' << p.z() << '\n';
  for (int i = 0; i < r.base.f(); ++i) {
    os << 'f';
    for (int k = 0; k < 5; ++k) os << ' ' << r.vertices.id[i][k] + 1;
    os << '\n';
  }
  int next = static_cast<int>(r.positions.size()) + 1;
  for (Dart d : edge_representatives(r.base)) {
    int u = r.vertices.id[d.tile][d.slot], w = r.vertices.id[d.tile][(d.slot + 1) % 5];
    auto s = detail::arc_samples(r.positions[u], r.positions[w], opt.arc_samples);
    std::vector<int> ids = {u + 1};
    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
      os << "v " << s[k].x() << ' ' << s[k].y() << ' ' << s[k].z() << '\n';
      ids.push_back(next++);
    }
    ids.push_back(w + 1);
    os << 'l';
    for (int x : ids) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

namespace detail {

// Stereographic projection from the pole onto the plane through the centre.
inline Eigen::Vector2d project(const Vec3& x, const Vec3& pole) {
  Mat3 rot = Eigen::Quaterniond::FromTwoVectors(pole.normalized(), Vec3(0, 0, -1)).toRotationMatrix();
  Vec3 y = rot * x;
  double d = std::max(1.0 + y.z(), 1e-4);
  return {y.x() / d, y.y() / d};
}

} // namespace detail

inline std::string to_svg(const RealizedTiling& r, const ExportOptions& opt = {}) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
  os << "<g fill-opacity=\"0.35\" stroke=\"black\" stroke-width=\"0.004\" stroke-linejoin=\"round\">\n";
  for (int i = 0; i < r.base.f(); ++i) {
    std::vector<Eigen::Vector2d> pts;
    auto c = tile_corners(r, i);
    for (int k = 0; k < 5; ++k) {
      auto s = detail::arc_samples(c[k], c[(k + 1) % 5], opt.arc_samples);
      for (std::size_t m = 0; m + 1 < s.size(); ++m) pts.push_back(detail::project(s[m], opt.pole));
    }
    std::size_t n = pts.size();
    auto at = [&](std::size_t m) { return pts[m % n]; };
    os << "<path fill=\"" << (r.base.tiles[i].orientation > 0 ? "#9ecae1" : "#fdae6b") << "\" d=\"M "
       << pts[0].x() << ' ' << -pts[0].y();
    for (std::size_t m = 0; m < n; ++m) {
      Eigen::Vector2d c1 = at(m) + (at(m + 1) - at(m + n - 1)) / 6.0;
      Eigen::Vector2d c2 = at(m + 1) - (at(m + 2) - at(m)) / 6.0;
      Eigen::Vector2d e = at(m + 1);
      os << " C " << c1.x() << ' ' << -c1.y() << ' ' << c2.x() << ' ' << -c2.y() << ' ' << e.x() << ' ' << -e.y();
    }
    os << " Z\"/>\n";
  }
  os << "</g>\n<g fill=\"black\">\n";
  for (int v = 0; v < r.vertices.count(); ++v) {
    auto p = detail::project(r.positions[v], opt.pole);
    std::size_t deg = r.vertices.corners[v].size();
    os << "<circle cx=\"" << p.x() << "\" cy=\"" << -p.y() << "\" r=\"" << (deg > 3 ? 0.012 : 0.006) << "\"><title>"
       << vertex_type(r.base, r.vertices.corners[v]).name() << "</title></circle>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("io", "failed writing '" + path + "'");
}

inline void export_tiling(const RealizedTiling& r, ExportFormat fmt, const std::string& path,
                          const ExportOptions& opt = {}) {
  switch (fmt) {
    case ExportFormat::kJson: write_text(path, realized_to_json(r).dump(2) + "\n"); break;
    case ExportFormat::kObj: write_text(path, to_obj(r, opt)); break;
    case ExportFormat::kSvg: write_text(path, to_svg(r, opt)); break;
  }
}

inline void export_tiling(const CombinatorialTiling& t, ExportFormat fmt, const std::string& path) {
  if (fmt != ExportFormat::kJson) throw Error("not-realized", "obj and svg need a realized tiling");
  write_text(path, tiling_to_json(t).dump(2) + "\n");
}

} // namespace pentile
