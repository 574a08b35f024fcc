#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "pentile/angle.hpp"
#include "pentile/roots.hpp"
#include "pentile/vertex.hpp"

namespace pentile {

using Angles5 = std::array<double, 5>;  // indexed by Label: alpha, beta, gamma, delta, epsilon
using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

struct PentagonSpec {
  Angles5 angle{};
  double a = 0.0;
  double b = 0.0;
  int orientation = +1;
  std::array<std::optional<Angle>, 5> exact{};

  double operator[](Label l) const { return angle[l]; }
};

struct Residuals3 {
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
  double max_abs() const { return std::max({std::abs(r1), std::abs(r2), std::abs(r3)}); }
};

inline Mat3 rot_y(double t) {
  Mat3 m;
  m << std::cos(t), 0, std::sin(t), 0, 1, 0, -std::sin(t), 0, std::cos(t);
  return m;
}

inline Mat3 rot_z(double t) {
  Mat3 m;
  m << std::cos(t), -std::sin(t), 0, std::sin(t), std::cos(t), 0, 0, 0, 1;
  return m;
}

namespace detail {
inline double eq1_bracket(const Angles5& g) {
  double al = g[kAlpha], be = g[kBeta], ga = g[kGamma], de = g[kDelta], ep = g[kEpsilon];
  return ((1 - std::cos(be)) * std::sin(de - al / 2) - (1 - std::cos(ga)) * std::sin(ep - al / 2)) *
             std::sin((de - ep) / 2) -
         (1 - std::cos(be - ga)) * std::sin(al / 2) * std::sin((de + ep) / 2);
}
inline double eq1_factor(const Angles5& g) { return std::cos((g[kDelta] + g[kEpsilon] - g[kAlpha]) / 2); }
} // namespace detail

inline Residuals3 existence_residuals(const Angles5& g, double a) {
  double al = g[kAlpha], be = g[kBeta], ga = g[kGamma], de = g[kDelta], ep = g[kEpsilon];
  double c = detail::eq1_factor(g);
  double s = std::sin(al / 2) * std::sin((be - ga) / 2);
  Residuals3 r;
  r.r1 = detail::eq1_bracket(g) * c;
  r.r2 = s * (std::sin(be / 2) * std::sin(de) * std::cos(a) - std::cos(be / 2) * std::cos(de)) +
         std::sin(ga / 2) * std::sin((de - ep) / 2) * c;
  r.r3 = s * (std::sin(ga / 2) * std::sin(ep) * std::cos(a) - std::cos(ga / 2) * std::cos(ep)) +
         std::sin(be / 2) * std::sin((de - ep) / 2) * c;
  return r;
}

// The bracket of eq1 once the factor cos((delta+epsilon-alpha)/2) is divided out.
inline double eq15_residual(const Angles5& g) { return detail::eq1_bracket(g); }

inline double eq10_residual(const Angles5& g) {
  return std::cos(g[kBeta] / 2) * std::cos(g[kDelta]) * std::sin(g[kGamma] / 2) * std::sin(g[kEpsilon]) -
         std::sin(g[kBeta] / 2) * std::sin(g[kDelta]) * std::cos(g[kGamma] / 2) * std::cos(g[kEpsilon]);
}

inline bool eq10_branch(const Angles5& g, double tol = kDefaultTol) { return std::abs(detail::eq1_factor(g)) < tol; }

// The angle condition that must vanish: eq10 when delta+epsilon-alpha is an odd multiple of pi, else eq15.
inline double angle_condition(const Angles5& g, double tol = kDefaultTol) {
  return eq10_branch(g, tol) ? eq10_residual(g) : eq15_residual(g);
}

inline double solve_a_from_eq2(const Angles5& g, double tol = kDefaultTol) {
  double al = g[kAlpha], be = g[kBeta], ga = g[kGamma], de = g[kDelta], ep = g[kEpsilon];
  double s = std::sin(al / 2) * std::sin((be - ga) / 2);
  if (std::abs(std::sin((be - ga) / 2)) < tol) throw Error("indeterminate", "beta = gamma, eq2 vanishes identically");
  if (std::abs(std::sin(de)) < tol || std::abs(std::sin(al / 2)) < tol || std::abs(std::sin(be / 2)) < tol)
    throw Error("indeterminate", "eq2 does not determine a");
  double num = std::cos(be / 2) * std::cos(de) * s - std::sin(ga / 2) * std::sin((de - ep) / 2) * detail::eq1_factor(g);
  double cos_a = num / (s * std::sin(be / 2) * std::sin(de));
  if (!(std::abs(cos_a) < 1.0)) throw Error("no-pentagon", "|cos a| >= 1");
  return std::acos(cos_a);
}

inline Mat3 closure_matrix_k(const Angles5& g, double a) {
  return rot_z(kPi - g[kEpsilon]) * rot_y(a) * rot_z(kPi - g[kGamma]) * rot_y(a) * rot_z(kPi - g[kAlpha]) * rot_y(a) *
         rot_z(kPi - g[kBeta]) * rot_y(a) * rot_z(kPi - g[kDelta]);
}

inline double solve_b_closure(const Angles5& g, double a, double tol = 1e-8) {
  Mat3 k = closure_matrix_k(g, a);
  if (std::abs(k(1, 1) - 1.0) > tol) throw Error("not-closed", "K(2,2) deviates from 1");
  double b = std::atan2(-k(0, 2), k(0, 0));
  if (b < 0) b += 2 * kPi;
  return b;
}

inline Mat3 five_edge_product(const PentagonSpec& p) {
  const auto& g = p.angle;
  return rot_y(p.a) * rot_z(kPi - g[kAlpha]) * rot_y(p.a) * rot_z(kPi - g[kBeta]) * rot_y(p.a) *
         rot_z(kPi - g[kDelta]) * rot_y(p.b) * rot_z(kPi - g[kEpsilon]) * rot_y(p.a) * rot_z(kPi - g[kGamma]);
}

inline double rotation_closure_residual(const PentagonSpec& p) {
  return (five_edge_product(p) - Mat3::Identity()).norm();
}

// Completes a pentagon from its angles: a from eq2 and b from the closure.
inline PentagonSpec complete_pentagon(const Angles5& g, double tol = kDefaultTol) {
  PentagonSpec p;
  p.angle = g;
  p.a = solve_a_from_eq2(g, tol);
  p.b = solve_b_closure(g, p.a);
  return p;
}

// Vertices on the unit sphere in the counterclockwise order alpha, beta, delta, epsilon, gamma,
// starting with alpha at the north pole and the alpha-beta edge leaving along the x meridian.
inline std::array<Vec3, 5> pentagon_vertices(const PentagonSpec& p) {
  static constexpr std::array<Label, 5> order = {kAlpha, kBeta, kDelta, kEpsilon, kGamma};
  std::array<double, 5> len = {p.a, p.a, p.b, p.a, p.a};
  Vec3 x(0, 0, 1), t(1, 0, 0);
  std::array<Vec3, 5> out;
  out[0] = x;
  for (int i = 0; i < 4; ++i) {
    Vec3 nx = std::cos(len[i]) * x + std::sin(len[i]) * t;
    Vec3 nt = -std::sin(len[i]) * x + std::cos(len[i]) * t;
    x = nx;
    t = nt;
    double turn = kPi - p.angle[order[i + 1]];
    t = std::cos(turn) * t + std::sin(turn) * x.cross(t);
    out[i + 1] = x;
  }
  return out;
}

inline bool arcs_cross(const Vec3& p1, const Vec3& p2, const Vec3& q1, const Vec3& q2, double eps = 1e-12) {
  Vec3 n1 = p1.cross(p2), n2 = q1.cross(q2);
  Vec3 d = n1.cross(n2);
  if (d.norm() < 1e-14) return false;
  d.normalize();
  for (const Vec3& x : {d, Vec3(-d)}) {
    bool on_p = p1.cross(x).dot(n1) > eps && x.cross(p2).dot(n1) > eps;
    bool on_q = q1.cross(x).dot(n2) > eps && x.cross(q2).dot(n2) > eps;
    if (on_p && on_q) return true;
  }
  return false;
}

// True when no two non-adjacent edges of the closed polygon cross.
inline bool polygon_is_simple(const std::array<Vec3, 5>& v) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 2; j < 5; ++j) {
      if (i == 0 && j == 4) continue;
      if (arcs_cross(v[i], v[(i + 1) % 5], v[j], v[(j + 1) % 5])) return false;
    }
  return true;
}

enum class Verdict { kTrue, kFalse, kInconclusive };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::kTrue ? "true" : v == Verdict::kFalse ? "false" : "inconclusive";
}

struct SimplicityReport {
  Verdict verdict = Verdict::kInconclusive;
  double theta = 0.0;  // base angle of the isosceles triangle at beta
  double rho = 0.0;    // base angle of the isosceles triangle at gamma
  std::string detail;
};

// Sufficient condition for simplicity: alpha exceeds both base angles and (beta-gamma)(delta-epsilon) < 0.
inline SimplicityReport simplicity_check(const PentagonSpec& p) {
  SimplicityReport r;
  const auto& g = p.angle;
  if (!(g[kAlpha] < kPi && g[kBeta] < kPi && g[kGamma] < kPi)) {
    r.detail = "alpha, beta, gamma must all be below pi";
    return r;
  }
  double ca = std::cos(p.a);
  r.theta = std::atan2(1.0, ca * std::tan(g[kBeta] / 2));
  r.rho = std::atan2(1.0, ca * std::tan(g[kGamma] / 2));
  double sign = (g[kBeta] - g[kGamma]) * (g[kDelta] - g[kEpsilon]);
  if (sign == 0.0) {
    r.detail = "(beta-gamma)(delta-epsilon) = 0";
    return r;
  }
  if (g[kAlpha] > r.theta && g[kAlpha] > r.rho && sign < 0) {
    r.verdict = Verdict::kTrue;
    r.detail = "alpha exceeds both base angles";
  } else {
    r.detail = "sufficient condition not met";
  }
  return r;
}

inline int sign_of(double x, double tol) { return x > tol ? 1 : x < -tol ? -1 : 0; }

inline bool geometry1_consistency(const PentagonSpec& p, double tol = kDefaultTol) {
  int s1 = sign_of(p.angle[kBeta] - p.angle[kGamma], tol);
  int s2 = sign_of(p.angle[kDelta] - p.angle[kEpsilon], tol);
  return s1 == -s2;
}

inline PentagonSpec exchange(const PentagonSpec& p) {
  PentagonSpec q = p;
  std::swap(q.angle[kBeta], q.angle[kGamma]);
  std::swap(q.angle[kDelta], q.angle[kEpsilon]);
  std::swap(q.exact[kBeta], q.exact[kGamma]);
  std::swap(q.exact[kDelta], q.exact[kEpsilon]);
  q.orientation = -p.orientation;
  return q;
}

enum class InfeasibleFamily { kB2dC2eAbc, kAdeAc2F20 };

struct InfeasibilityCertificate {
  std::string family;
  int f = 0;
  int samples = 0;
  double lo = 0.0, hi = 0.0;  // sampled range of epsilon (radians)
  double min_abs_residual = 0.0;
  int sign_changes = 0;
  double residual_at_symmetric = 0.0;
  double proportionality_spread = 0.0;  // relative spread of eq15 / printed expression
  bool infeasible = false;
};

// Printed factorization for the beta delta^2, gamma epsilon^2, alpha beta gamma system.
inline double b2d_c2e_abc_factorization(double de, double ep) {
  double sd = std::sin(de), se = std::sin(ep);
  return (sd - se) * (sd - se) * (sd * sd + se * se + 3 * sd * se);
}

inline double ade_ac2_f20_expression(double ep) {
  double r5 = std::sqrt(5.0);
  return (r5 * (r5 - 1) * std::sin(ep) + std::sqrt(50 - 22 * r5) * std::cos(ep)) * std::sin(ep);
}

inline InfeasibilityCertificate check_infeasible_family(InfeasibleFamily fam, int f = 16, int samples = 10000) {
  InfeasibilityCertificate c;
  c.samples = samples;
  c.min_abs_residual = INFINITY;
  double rmin = INFINITY, rmax = -INFINITY;
  if (fam == InfeasibleFamily::kB2dC2eAbc) {
    check_face_count(f);
    c.family = "B2D_C2E_ABC";
    c.f = f;
    double sum = (1.0 + 4.0 / f) * kPi;
    // delta, epsilon < pi and delta + epsilon fixed: epsilon in (sum - pi, pi)
    c.lo = sum - kPi;
    c.hi = kPi;
    auto angles = [&](double ep) {
      double de = sum - ep;
      return Angles5{2 * (de + ep - kPi), 2 * kPi - 2 * de, 2 * kPi - 2 * ep, de, ep};
    };
    double prev = NAN;
    for (int i = 0; i < samples; ++i) {
      double ep = c.lo + (i + 0.5) * (c.hi - c.lo) / samples;
      double de = sum - ep;
      double r = existence_residuals(angles(ep), 1.0).r1;
      if (std::abs(de - ep) > 1e-12) c.min_abs_residual = std::min(c.min_abs_residual, std::abs(r));
      if (!std::isnan(prev) && std::signbit(prev) != std::signbit(r)) ++c.sign_changes;
      prev = r;
      double printed = b2d_c2e_abc_factorization(de, ep);
      if (std::abs(printed) > 1e-12) {
        double q = r / printed;
        rmin = std::min(rmin, q);
        rmax = std::max(rmax, q);
      }
    }
    c.residual_at_symmetric = existence_residuals(angles(sum / 2), 1.0).r1;
    c.infeasible = c.min_abs_residual > 1e-8 && c.sign_changes == 0 && std::abs(c.residual_at_symmetric) < 1e-12;
  } else {
    c.family = "ADE_AC2_F20";
    c.f = 20;
    Angles5 base{0.4 * kPi, 0.4 * kPi, 0.8 * kPi, 0.0, 0.0};
    c.lo = 0.0;
    c.hi = 0.8 * kPi;
    double prev = NAN;
    for (int i = 0; i < samples; ++i) {
      double ep = c.lo + (i + 0.5) * (c.hi - c.lo) / samples;
      double v = ade_ac2_f20_expression(ep);
      c.min_abs_residual = std::min(c.min_abs_residual, std::abs(v));
      if (!std::isnan(prev) && std::signbit(prev) != std::signbit(v)) ++c.sign_changes;
      prev = v;
      Angles5 g = base;
      g[kDelta] = 1.6 * kPi - ep;
      g[kEpsilon] = ep;
      double q = eq15_residual(g) / v;
      rmin = std::min(rmin, q);
      rmax = std::max(rmax, q);
    }
    c.infeasible = c.sign_changes == 0 && c.min_abs_residual > 0.0;
  }
  c.proportionality_spread = std::abs(rmax - rmin) / std::max(std::abs(rmax), std::abs(rmin));
  return c;
}

inline nlohmann::json to_json(const PentagonSpec& p) {
  nlohmann::json j;
  for (Label l : kLabels) {
    j[label_name(l)] = p.angle[l];
    if (p.exact[l]) j[std::string(label_name(l)) + "_exact"] = *p.exact[l];
  }
  j["a"] = p.a;
  j["b"] = p.b;
  j["orientation"] = p.orientation > 0 ? "+" : "-";
  return j;
}

inline PentagonSpec pentagon_from_json(const nlohmann::json& j) {
  PentagonSpec p;
  for (Label l : kLabels) {
    const auto& v = j.at(label_name(l));
    if (v.is_object()) {
      Angle x = v.get<Angle>();
      p.angle[l] = x.radians();
      p.exact[l] = x;
    } else {
      p.angle[l] = v.get<double>();
    }
  }
  p.a = j.at("a").get<double>();
  p.b = j.value("b", 0.0);
  if (j.contains("orientation")) p.orientation = j["orientation"] == "-" ? -1 : +1;
  return p;
}

} // namespace pentile
