#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "pentile/angle.hpp"

namespace pentile {

enum Label : int { kAlpha = 0, kBeta = 1, kGamma = 2, kDelta = 3, kEpsilon = 4 };

inline constexpr std::array<Label, 5> kLabels = {kAlpha, kBeta, kGamma, kDelta, kEpsilon};

inline const char* label_symbol(Label l) {
  static const char* s[] = {"α", "β", "γ", "δ", "ε"};
  return s[l];
}

inline const char* label_name(Label l) {
  static const char* s[] = {"alpha", "beta", "gamma", "delta", "epsilon"};
  return s[l];
}

inline Label label_from_name(const std::string& n) {
  for (Label l : kLabels)
    if (n == label_name(l) || n == label_symbol(l)) return l;
  throw Error("bad-label", "unknown corner label '" + n + "'");
}

struct VertexType {
  std::array<int, 5> counts{};

  VertexType() = default;
  VertexType(int a, int b, int c, int d, int e) : counts{a, b, c, d, e} {}

  int operator[](Label l) const { return counts[l]; }
  int& operator[](Label l) { return counts[l]; }
  int degree() const { return counts[0] + counts[1] + counts[2] + counts[3] + counts[4]; }

  friend auto operator<=>(const VertexType&, const VertexType&) = default;

  // "αδε", "β²γ", "γ⁴"
  std::string name() const {
    static const char* sup[] = {"", "", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s;
    for (Label l : kLabels) {
      int n = counts[l];
      if (n == 0) continue;
      s += label_symbol(l);
      if (n < 10) s += sup[n];
      else s += "^" + std::to_string(n);
    }
    return s;
  }
};

// Angle values in radians; exact values are kept when known.
struct AngleAssignment {
  std::array<double, 5> value{};
  std::array<std::optional<Angle>, 5> exact{};

  static AngleAssignment from_exact(Angle a, Angle b, Angle c, Angle d, Angle e) {
    AngleAssignment x;
    std::array<Angle, 5> v{a, b, c, d, e};
    for (int i = 0; i < 5; ++i) {
      x.value[i] = v[i].radians();
      x.exact[i] = v[i];
    }
    return x;
  }
  static AngleAssignment from_radians(const std::array<double, 5>& v) {
    AngleAssignment x;
    x.value = v;
    return x;
  }
  bool all_exact() const {
    return std::all_of(exact.begin(), exact.end(), [](const auto& e) { return e.has_value(); });
  }
  double sum() const { return value[0] + value[1] + value[2] + value[3] + value[4]; }
};

using AVC = std::set<VertexType>;
using AVCCounts = std::map<VertexType, int>;

inline bool parity_check(const VertexType& v) { return (v[kDelta] + v[kEpsilon]) % 2 == 0; }

inline double vertex_angle_sum(const VertexType& v, const AngleAssignment& a) {
  double s = 0.0;
  for (Label l : kLabels) s += v[l] * a.value[l];
  return s;
}

inline std::optional<Angle> exact_vertex_angle_sum(const VertexType& v, const AngleAssignment& a) {
  if (!a.all_exact()) return std::nullopt;
  Angle s;
  for (Label l : kLabels) s += v[l] * *a.exact[l];
  return s;
}

// All vertex types of degree 3..max_degree with angle sum 2pi that pass the parity lemma.
// tol == 0 selects exact arithmetic and requires an all-exact assignment.
inline AVC enumerate_vertices(const AngleAssignment& a, int max_degree, double tol = kDefaultTol) {
  if (max_degree < 3) throw Error("bad-degree", "max_degree must be >= 3");
  for (double x : a.value)
    if (!(x > 0.0)) throw Error("bad-angle", "all angle values must be positive");
  bool exact = tol == 0.0;
  if (exact && !a.all_exact()) throw Error("not-exact", "tol=0 requires exact angle values");
  std::array<int, 5> cap{};
  for (Label l : kLabels) cap[l] = std::min(max_degree, static_cast<int>(std::floor(2.0 * kPi / a.value[l] + 1e-9)));
  AVC out;
  VertexType v;
  for (v[kAlpha] = 0; v[kAlpha] <= cap[0]; ++v[kAlpha])
    for (v[kBeta] = 0; v[kBeta] <= cap[1]; ++v[kBeta])
      for (v[kGamma] = 0; v[kGamma] <= cap[2]; ++v[kGamma])
        for (v[kDelta] = 0; v[kDelta] <= cap[3]; ++v[kDelta])
          for (v[kEpsilon] = 0; v[kEpsilon] <= cap[4]; ++v[kEpsilon]) {
            int d = v.degree();
            if (d < 3 || d > max_degree || !parity_check(v)) continue;
            bool hit = exact ? *exact_vertex_angle_sum(v, a) == Angle(2)
                             : std::abs(vertex_angle_sum(v, a) - 2.0 * kPi) <= tol;
            if (hit) out.insert(v);
          }
  return out;
}

// Merges beta into gamma's slot and delta into epsilon's, for the symmetric pentagon
// (beta = gamma and delta = epsilon), written with labels alpha, beta, delta.
inline VertexType collapse_symmetric(const VertexType& v) {
  return VertexType(v[kAlpha], v[kBeta] + v[kGamma], 0, v[kDelta] + v[kEpsilon], 0);
}

inline AVC collapse_symmetric(const AVC& avc) {
  AVC out;
  for (const auto& v : avc) out.insert(collapse_symmetric(v));
  return out;
}

inline AVCCounts collapse_symmetric(const AVCCounts& avc) {
  AVCCounts out;
  for (const auto& [v, n] : avc) out[collapse_symmetric(v)] += n;
  return out;
}

inline bool balance_check(const AVC& avc) {
  bool dd = false, ee = false;
  for (const auto& v : avc) {
    dd = dd || v[kDelta] >= 2;
    ee = ee || v[kEpsilon] >= 2;
  }
  return dd == ee;
}

// Collapsed labels carry delta and epsilon together, so balance holds trivially.
inline bool balance_check_collapsed(const AVC&) { return true; }

struct CountingReport {
  std::array<long, 5> totals{};
  std::array<long, 5> expected{};
  bool pass = true;
  std::vector<std::string> failures;
};

// Each angle occurs once per tile; collapsed labels count beta and delta twice per tile.
inline CountingReport counting_check(const AVCCounts& multiplicities, int f, bool collapsed = false) {
  CountingReport r;
  for (const auto& [v, n] : multiplicities)
    for (Label l : kLabels) r.totals[l] += static_cast<long>(v[l]) * n;
  r.expected = {f, f, f, f, f};
  if (collapsed) r.expected = {f, 2L * f, 0, 2L * f, 0};
  for (Label l : kLabels)
    if (r.totals[l] != r.expected[l]) {
      r.pass = false;
      r.failures.push_back(std::string("#") + label_symbol(l) + " = " + std::to_string(r.totals[l]) +
                           ", expected " + std::to_string(r.expected[l]));
    }
  return r;
}

inline bool is_b_vertex(const VertexType& v) { return v[kDelta] + v[kEpsilon] > 0; }

// Allowed pairs of degree-3 b-vertices without alpha.
inline bool degree3_b_vertex_pairs_allowed(const VertexType& p, const VertexType& q) {
  for (const auto* v : {&p, &q})
    if (v->degree() != 3 || !is_b_vertex(*v) || (*v)[kAlpha] != 0)
      throw Error("precondition", "expected degree 3 b-vertices without alpha, got " + v->name());
  const VertexType bde(0, 1, 0, 1, 1), ce2(0, 0, 1, 0, 2), cde(0, 0, 1, 1, 1), bd2(0, 1, 0, 2, 0);
  auto is_pair = [&](const VertexType& x, const VertexType& y) {
    return (p == x && q == y) || (p == y && q == x);
  };
  return is_pair(bde, ce2) || is_pair(cde, bd2) || is_pair(bd2, ce2);
}

inline VertexType parse_vertex_type(const std::string& s) {
  static const std::map<std::string, int> sup = {{"²", 2}, {"³", 3}, {"⁴", 4}, {"⁵", 5},
                                                 {"⁶", 6}, {"⁷", 7}, {"⁸", 8}, {"⁹", 9}};
  VertexType v;
  std::size_t i = 0;
  std::optional<Label> last;
  while (i < s.size()) {
    bool matched = false;
    for (Label l : kLabels) {
      std::string sym = label_symbol(l);
      if (s.compare(i, sym.size(), sym) == 0) {
        v[l] += 1;
        last = l;
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const auto& [k, n] : sup)
      if (s.compare(i, k.size(), k) == 0 && last) {
        v[*last] += n - 1;
        i += k.size();
        matched = true;
        break;
      }
    if (matched) continue;
    if (s[i] == '^' && last) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      v[*last] += std::stoi(s.substr(i + 1, j - i - 1)) - 1;
      i = j;
      continue;
    }
    throw Error("bad-vertex", "cannot parse vertex type '" + s + "'");
  }
  return v;
}

inline void to_json(nlohmann::json& j, const VertexType& v) { j = v.counts; }
inline void from_json(const nlohmann::json& j, VertexType& v) { v.counts = j.get<std::array<int, 5>>(); }

inline nlohmann::json avc_json(const AVCCounts& avc) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [v, n] : avc) j[v.name()] = n;
  return j;
}

} // namespace pentile
