#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentile/combmap.hpp"
#include "pentile/earthmap.hpp"
#include "pentile/patch.hpp"
#include "pentile/pentagon.hpp"
#include "pentile/roots.hpp"
#include "pentile/subdivision.hpp"
#include "pentile/surgery.hpp"

namespace pentile {

enum class Family { kE1, kF1E1, kF2E1, kE2, kRE2, kF1E2, kF2E2, kF2E2Prime, kF2E2DoublePrime, kPP8, kPP20, kS16 };

inline constexpr std::array<Family, 12> kAllFamilies = {
    Family::kE1,  Family::kF1E1, Family::kF2E1,      Family::kE2,             Family::kRE2,  Family::kF1E2,
    Family::kF2E2, Family::kF2E2Prime, Family::kF2E2DoublePrime, Family::kPP8, Family::kPP20, Family::kS16};

inline const char* family_name(Family x) {
  switch (x) {
    case Family::kE1: return "e1";
    case Family::kF1E1: return "f1e1";
    case Family::kF2E1: return "f2e1";
    case Family::kE2: return "e2";
    case Family::kRE2: return "re2";
    case Family::kF1E2: return "f1e2";
    case Family::kF2E2: return "f2e2";
    case Family::kF2E2Prime: return "f2e2-prime";
    case Family::kF2E2DoublePrime: return "f2e2-doubleprime";
    case Family::kPP8: return "pp8";
    case Family::kPP20: return "pp20";
    case Family::kS16: return "s16";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  for (Family x : kAllFamilies)
    if (s == family_name(x)) return x;
  throw Error("bad-family", "unknown family '" + s + "'");
}

inline bool uses_e1_pentagon(Family x) { return x == Family::kE1 || x == Family::kF1E1 || x == Family::kF2E1; }

inline bool is_e2_modification(Family x) {
  return x == Family::kF1E2 || x == Family::kF2E2 || x == Family::kF2E2Prime || x == Family::kF2E2DoublePrime;
}

// Throws "inadmissible" naming the violated condition.
inline void check_admissible(Family x, int f) {
  auto fail = [&](const std::string& why) {
    throw Error("inadmissible", std::string(family_name(x)) + " at f=" + std::to_string(f) + ": " + why);
  };
  switch (x) {
    case Family::kE1:
    case Family::kE2:
      if (f < 12 || f % 4 != 0) fail("needs f >= 12 and f = 0 mod 4");
      break;
    case Family::kPP8:
      if (f != 24) fail("needs f = 24");
      break;
    case Family::kPP20:
      if (f != 60) fail("needs f = 60");
      break;
    case Family::kS16:
      if (f != 16) fail("needs f = 16");
      break;
    default:
      if (f < 12 || f % 8 != 4) fail("needs f >= 12 and f = 4 mod 8");
  }
}

struct PatchLocator {
  enum Orientation { kAsIs = 0, kFlipped = 1 };
  int position = 0;
  Orientation orientation = kAsIs;

  friend bool operator==(const PatchLocator&, const PatchLocator&) = default;
};

enum class PatchAction { kShift, kFlip };

struct BuildOptions {
  SubdivisionCase variant = SubdivisionCase::kAlphaCubed;
  std::optional<PatchLocator> locator;
};

// Angle systems in units of pi. Vertices of a family's tiling must sum to 2pi on the whole system.
inline AngleSystem e1_system(int f) {
  Angle b = Angle(1) - Angle(4, f), d = Angle(1, 2) + Angle(2, f);
  return {"E1", {Angle(8, f), b, b, d, d}, {}};
}

inline AngleSystem e2_system(int f) {
  Angle b = Angle(1) - Angle(4, f), h = (Angle(1) + Angle(4, f)) / 2;
  return {"E2", {b, b, Angle(8, f), h, h}, {{Angle(-1), 0, 0, Angle(1), 0}, {0, 0, 0, Angle(1), Angle(-1)}}};
}

inline AngleSystem e2_alpha_beta_system(int f) {
  Angle b = Angle(1) - Angle(4, f), h = (Angle(1) + Angle(4, f)) / 2;
  return {"E2 alpha=beta", {b, b, Angle(8, f), h, h}, {{0, 0, 0, Angle(1), Angle(-1)}}};
}

// Fixed alpha, beta, gamma with delta + epsilon = sum.
inline AngleSystem fixed_sum_system(std::string name, Angle al, Angle be, Angle ga, Angle sum) {
  return {std::move(name), {al, be, ga, sum / 2, sum / 2}, {{0, 0, 0, Angle(1), Angle(-1)}}};
}

struct FixedSumCase {
  Angle alpha, beta, gamma, sum;
};

inline FixedSumCase subdivision_angles(Family x, SubdivisionCase v) {
  bool octa = x == Family::kPP8;
  if (v == SubdivisionCase::kAlphaCubed)
    return octa ? FixedSumCase{Angle(2, 3), Angle(2, 3), Angle(1, 2), Angle(4, 3)}
                : FixedSumCase{Angle(2, 3), Angle(2, 3), Angle(2, 5), Angle(4, 3)};
  return octa ? FixedSumCase{Angle(1, 2), Angle(1, 2), Angle(2, 3), Angle(3, 2)}
              : FixedSumCase{Angle(2, 5), Angle(2, 5), Angle(2, 3), Angle(8, 5)};
}

inline FixedSumCase s16_angles() { return {Angle(1, 2), Angle(1, 2), Angle(3, 4), Angle(3, 2)}; }

inline AngleSystem family_system(Family x, int f, SubdivisionCase v = SubdivisionCase::kAlphaCubed) {
  if (uses_e1_pentagon(x)) return e1_system(f);
  if (x == Family::kE2 || x == Family::kRE2) return e2_system(f);
  if (is_e2_modification(x)) return e2_alpha_beta_system(f);
  FixedSumCase c = x == Family::kS16 ? s16_angles() : subdivision_angles(x, v);
  return fixed_sum_system(family_name(x), c.alpha, c.beta, c.gamma, c.sum);
}

namespace detail {

inline int half_q(int f) { return (f - 4) / 8; }

// Half earth map of E1 made of q+1 and q shaded tiles on either side.
inline Region e1_half(int f) {
  int q = half_q(f);
  EarthMapIndex I{f / 4};
  Region r;
  for (int k = 0; k <= q; ++k) r.insert({I.U(k), I.B(k)});
  for (int k = 0; k < q; ++k) r.insert({I.T(k), I.L(k)});
  return r;
}

// Half of E2 whose boundary consists of twelve edges.
inline Region e2_half(int f) {
  int q = half_q(f);
  EarthMapIndex I{f / 4};
  Region r;
  for (int k = 0; k <= q; ++k) r.insert({I.T(k), I.U(k + 1)});
  for (int k = 1; k <= q; ++k) r.insert({I.B(k), I.L(k)});
  return r;
}

inline CombinatorialTiling checked(CombinatorialTiling t, const AngleSystem& sys) {
  Validation v = validate_under(t, sys);
  if (!v.ok) throw Error("internal", "constructed tiling is invalid: " + v.reason);
  return t;
}

inline CombinatorialTiling f2e2(int f) {
  return reglue_reflect(build_earth_map(f, EarthMapKind::kE2), e2_half(f), 8);
}

} // namespace detail

// The tilings reachable from F2E2 by flipping and shifting its patch, in order. Consecutive
// members differ by one flip on four tiles; member 0 is F2E2 and the last one is F2E2 with the
// patch shifted to the far side.
inline std::vector<CombinatorialTiling> patch_chain(int f) {
  check_admissible(Family::kF2E2, f);
  int q = detail::half_q(f);
  CombinatorialTiling host = detail::f2e2(f);
  auto patches = find_patches(host);
  if (patches.size() != 1) throw Error("internal", "F2E2 should contain exactly one patch");
  Region half = detail::e2_half(f);
  std::vector<int> free;
  for (int i = 0; i < f; ++i)
    if (!half.count(i) || i == patches[0].tiles[0] || i == patches[0].tiles[3]) free.push_back(i);
  AVC allowed = avc_types(extract_avc(host));
  allowed.insert(VertexType(2, 0, 1, 0, 0));
  auto states = relabelings(host, free, e2_alpha_beta_system(f), allowed);
  std::size_t start = 0;
  while (start < states.size() && !(states[start] == host)) ++start;
  if (start == states.size()) throw Error("internal", "F2E2 missing from its own relabelings");
  std::size_t len = 2 * static_cast<std::size_t>(q + 1);
  std::vector<std::size_t> path = {start};
  std::function<bool()> walk = [&]() {
    if (path.size() == len) return true;
    int want = 2 * static_cast<int>(path.size()) + 2;
    for (std::size_t j = 0; j < states.size(); ++j) {
      if (tiles_differing(states[j], states[path.back()]) != 4) continue;
      if (tiles_differing(states[j], host) != want) continue;
      path.push_back(j);
      if (walk()) return true;
      path.pop_back();
    }
    return false;
  };
  if (!walk()) throw Error("internal", "patch chain could not be traced");
  std::vector<CombinatorialTiling> out;
  for (std::size_t j : path) out.push_back(states[j]);
  return out;
}

// Position p as-is is the patch shifted p steps; flipped pairs it with its neighbour in the chain.
inline int chain_index(const PatchLocator& loc) {
  int k = 2 * loc.position;
  bool odd = (loc.position > 0) != (loc.orientation == PatchLocator::kFlipped);
  return k + (odd ? 1 : 0);
}

inline PatchLocator chain_locator(int k) {
  PatchLocator loc;
  loc.position = k / 2;
  bool odd = k % 2 == 1;
  loc.orientation = odd != (loc.position > 0) ? PatchLocator::kFlipped : PatchLocator::kAsIs;
  return loc;
}

inline std::optional<PatchLocator> locate_patch(const CombinatorialTiling& t) {
  if (t.f() < 12 || t.f() % 8 != 4) return std::nullopt;
  auto chain = patch_chain(t.f());
  for (int k = 0; k < static_cast<int>(chain.size()); ++k)
    if (chain[k] == t) return chain_locator(k);
  return std::nullopt;
}

inline CombinatorialTiling shift_flip_patch(const CombinatorialTiling& t, const PatchLocator& loc, PatchAction action) {
  int f = t.f();
  if (f < 12 || f % 8 != 4) throw Error("no-patch-at-location", "no patch family for f=" + std::to_string(f));
  int q = detail::half_q(f);
  if (loc.position < 0 || loc.position > q)
    throw Error("no-patch-at-location", "position must lie in 0.." + std::to_string(q));
  auto chain = patch_chain(f);
  int k = chain_index(loc);
  if (!(chain[k] == t)) throw Error("no-patch-at-location", "tiling does not carry the patch at this location");
  if (action == PatchAction::kFlip) return chain[k ^ 1];
  if (loc.position == q) throw Error("no-patch-at-location", "patch is already at the last position");
  return chain[chain_index({loc.position + 1, loc.orientation})];
}

inline CombinatorialTiling build(Family x, int f, const BuildOptions& opt = {}) {
  check_admissible(x, f);
  AngleSystem sys = family_system(x, f, opt.variant);
  switch (x) {
    case Family::kE1:
      return detail::checked(build_earth_map(f, EarthMapKind::kE1), sys);
    case Family::kE2:
      return detail::checked(build_earth_map(f, EarthMapKind::kE2), sys);
    case Family::kF1E1:
    case Family::kF2E1:
      return detail::checked(
          reglue_rotate(build_earth_map(f, EarthMapKind::kE1), detail::e1_half(f), x == Family::kF1E1 ? 2 : 4), sys);
    case Family::kRE2:
      return detail::checked(reglue_rotate(build_earth_map(f, EarthMapKind::kE2), detail::e2_half(f), 4), sys);
    case Family::kF1E2:
      return detail::checked(reglue_reflect(build_earth_map(f, EarthMapKind::kE2), detail::e2_half(f), 0), sys);
    case Family::kF2E2:
      return detail::checked(detail::f2e2(f), sys);
    case Family::kF2E2Prime:
    case Family::kF2E2DoublePrime: {
      PatchLocator loc = opt.locator.value_or(x == Family::kF2E2Prime ? PatchLocator{1, PatchLocator::kAsIs}
                                                                       : PatchLocator{0, PatchLocator::kFlipped});
      int q = detail::half_q(f);
      if (loc.position < 0 || loc.position > q)
        throw Error("inadmissible", "patch position must lie in 0.." + std::to_string(q));
      return detail::checked(patch_chain(f)[chain_index(loc)], sys);
    }
    case Family::kPP8:
    case Family::kPP20:
      return detail::checked(build_pentagonal_subdivision(x == Family::kPP8 ? 8 : 20, opt.variant), sys);
    case Family::kS16: {
      EarthMapIndex I{4};
      Region lower;
      for (int k = 0; k < 4; ++k) lower.insert({I.L(k), I.B(k)});
      return detail::checked(exchange_labels(reglue_reflect(build_earth_map(16, EarthMapKind::kE2), lower, 2)), sys);
    }
  }
  throw Error("bad-family", "unhandled family");
}

// ---- pentagon solvers ----

inline PentagonSpec solve_e1(int f) {
  check_admissible(Family::kE1, f);
  Angle al(8, f), be = Angle(1) - Angle(4, f), de = Angle(1, 2) + Angle(2, f);
  PentagonSpec p;
  p.exact = {al, be, be, de, de};
  for (Label l : kLabels) p.angle[l] = p.exact[l]->radians();
  double s = 1.0 / std::cos(2 * kPi / f);
  p.a = std::acos(1.0 + (std::sqrt(5.0) - 3.0) / 4.0 * s * s);
  p.b = solve_b_closure(p.angle, p.a);
  return p;
}

struct AlphaBetaQuadratic {
  double A = 0, B = 0, C = 0;
  double tan_minus = 0, tan_plus = 0;
  double eps_minus = 0, eps_plus = 0;  // representatives in (pi/2, 3pi/2)
  double lo = 0, hi = 0;               // ((1/2 + 2/f) pi, (1 + 4/f) pi)
};

// A cos^2 eps + B cos eps sin eps + C sin^2 eps = 0 for alpha = beta, delta + epsilon = (1 + 4/f) pi.
inline AlphaBetaQuadratic alpha_beta_quadratic(int f) {
  check_face_count(f);
  double t = 4 * kPi / f;
  AlphaBetaQuadratic q;
  q.A = 2 + 2 * std::cos(t) - std::cos(3 * t) - 2 * std::cos(4 * t) - std::cos(5 * t);
  q.B = 4 * std::sin(t) + 4 * std::sin(2 * t) + 4 * std::sin(3 * t) + 2 * std::sin(4 * t);
  q.C = -6 * std::cos(t) - 4 * std::cos(2 * t) - std::cos(3 * t) - 4 * std::cos(4 * t) - std::cos(5 * t);
  if (std::abs(q.C) < 1e-14) throw Error("indeterminate", "C vanishes");
  double disc = q.B * q.B - 4 * q.A * q.C;
  if (disc < 0) throw Error("no-root-in-range", "quadratic in tan epsilon has no real root");
  double r1 = (-q.B - std::sqrt(disc)) / (2 * q.C), r2 = (-q.B + std::sqrt(disc)) / (2 * q.C);
  q.tan_minus = std::min(r1, r2);
  q.tan_plus = std::max(r1, r2);
  q.eps_minus = std::atan(q.tan_minus) + kPi;
  q.eps_plus = std::atan(q.tan_plus) + kPi;
  q.lo = (0.5 + 2.0 / f) * kPi;
  q.hi = (1.0 + 4.0 / f) * kPi;
  return q;
}

inline PentagonSpec solve_e2_alpha_beta(int f) {
  check_admissible(Family::kE2, f);
  if (f < 16) throw Error("inadmissible", "beta = gamma at f=12 leaves the pentagon undetermined");
  auto q = alpha_beta_quadratic(f);
  auto inside = [&](double e) { return e > q.lo && e < q.hi; };
  double eps;
  if (inside(q.eps_minus)) eps = q.eps_minus;
  else if (inside(q.eps_plus)) eps = q.eps_plus;
  else throw Error("no-root-in-range", "neither root lies in the admissible range");
  Angle be = Angle(1) - Angle(4, f), sum = Angle(1) + Angle(4, f);
  PentagonSpec p;
  p.exact = {be, be, Angle(8, f), std::nullopt, std::nullopt};
  p.angle = {be.radians(), be.radians(), Angle(8, f).radians(), sum.radians() - eps, eps};
  PentagonSpec c = complete_pentagon(p.angle);
  p.a = c.a;
  p.b = c.b;
  return p;
}

// Fixed alpha, beta, gamma and delta + epsilon; epsilon is sought on the side allowed by the sign rule
// relating beta - gamma and delta - epsilon.
inline PentagonSpec solve_fixed_sum(const FixedSumCase& c) {
  double al = c.alpha.radians(), be = c.beta.radians(), ga = c.gamma.radians(), sum = c.sum.radians();
  double lo = 0.0, hi = sum / 2;
  if (be > ga) {
    lo = sum / 2;
    hi = sum;
  }
  hi = std::min(hi, 2 * kPi);
  lo = std::max(lo, sum - 2 * kPi);
  auto angles = [&](double e) { return Angles5{al, be, ga, sum - e, e}; };
  auto cond = [&](double e) { return angle_condition(angles(e)); };
  double pad = 1e-9 * (hi - lo);
  for (double e : scan_roots(cond, lo + pad, hi - pad, 4000)) {
    try {
      PentagonSpec p = complete_pentagon(angles(e));
      if (!(p.a > 0 && p.a < kPi)) continue;
      p.exact = {c.alpha, c.beta, c.gamma, std::nullopt, std::nullopt};
      return p;
    } catch (const Error&) {
    }
  }
  throw Error("no-root-in-range", "no admissible epsilon in the allowed range");
}

// ---- general E2 pentagon: beta = pi - theta, gamma = 2 theta, alpha + delta + epsilon = 2pi ----

namespace detail {

inline Angles5 e2_angles(int f, double de, double ep) {
  double th = 4 * kPi / f;
  return {2 * kPi - de - ep, kPi - th, 2 * th, de, ep};
}

// delta solving the angle condition for the given epsilon, nearest the guess.
inline std::optional<double> e2_delta(int f, double ep, double guess) {
  auto g = [&](double de) { return angle_condition(e2_angles(f, de, ep)); };
  double lo_lim = 1e-9, hi_lim = 2 * kPi - ep - 1e-9;
  if (!(guess > lo_lim && guess < hi_lim)) return std::nullopt;
  for (double w = 1e-4; w < 0.5; w *= 2) {
    double lo = std::max(lo_lim, guess - w), hi = std::min(hi_lim, guess + w);
    double glo = g(lo), ghi = g(hi), gm = g(guess);
    try {
      if (std::signbit(glo) != std::signbit(gm) && std::signbit(gm) != std::signbit(ghi)) {
        double r1 = find_root(g, lo, guess), r2 = find_root(g, guess, hi);
        return std::abs(r1 - guess) < std::abs(r2 - guess) ? r1 : r2;
      }
      if (std::signbit(glo) != std::signbit(gm)) return find_root(g, lo, guess);
      if (std::signbit(gm) != std::signbit(ghi)) return find_root(g, guess, hi);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline std::optional<double> e2_a(int f, double de, double ep) {
  try {
    return solve_a_from_eq2(e2_angles(f, de, ep));
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct BranchPoint {
  double eps, delta, a;
};

// The solution curve through the alpha = beta pentagon, sampled in epsilon.
inline std::vector<BranchPoint> e2_branch(int f, double step = 0.001 * kPi) {
  PentagonSpec p0 = solve_e2_alpha_beta(f);
  std::vector<BranchPoint> down, up;
  for (int dir : {-1, 1}) {
    auto& out = dir < 0 ? down : up;
    double ep = p0.angle[kEpsilon], de = p0.angle[kDelta];
    for (int i = 1; i < 4000; ++i) {
      double e = ep + dir * step;
      if (!(e > 0 && e < 2 * kPi)) break;
      auto d = e2_delta(f, e, de);
      if (!d) break;
      auto a = e2_a(f, *d, e);
      if (!a || 2 * kPi - *d - e <= 0) break;
      out.push_back({e, *d, *a});
      ep = e;
      de = *d;
    }
  }
  std::vector<BranchPoint> all(down.rbegin(), down.rend());
  all.push_back({p0.angle[kEpsilon], p0.angle[kDelta], p0.a});
  all.insert(all.end(), up.begin(), up.end());
  return all;
}

// a along the branch near a sampled point, for refinement between samples.
inline std::optional<std::pair<double, double>> e2_point(int f, double ep, double delta_guess) {
  auto d = e2_delta(f, ep, delta_guess);
  if (!d) return std::nullopt;
  auto a = e2_a(f, *d, ep);
  if (!a) return std::nullopt;
  return std::make_pair(*d, *a);
}

inline std::size_t branch_min_index(const std::vector<BranchPoint>& br) {
  std::size_t m = 0;
  for (std::size_t i = 1; i < br.size(); ++i)
    if (br[i].a < br[m].a) m = i;
  return m;
}

} // namespace detail

struct E2Interval {
  double a_lo = 0, a_hi = 0;
  double eps_at_lo = 0;
};

// Lower end: the smallest edge length along the solution curve. Upper end: the degenerate
// configuration where the isosceles triangles with top angles pi - theta and 2 theta fill a right angle.
inline E2Interval e2_parameter_interval(int f) {
  check_admissible(Family::kE2, f);
  double th = 4 * kPi / f;
  auto rho = [&](double a, double top) { return std::atan2(1.0, std::cos(a) * std::tan(top / 2)); };
  auto gap = [&](double a) { return rho(a, kPi - th) + rho(a, 2 * th) - kPi / 2; };
  E2Interval r;
  r.a_hi = find_root(gap, 1e-9, kPi / 2 - 1e-9);
  auto br = detail::e2_branch(f);
  std::size_t m = detail::branch_min_index(br);
  if (m == 0 || m + 1 >= br.size()) throw Error("bracket-failure", "edge length has no interior minimum on the branch");
  double lo = br[m - 1].eps, hi = br[m + 1].eps, guess = br[m].delta;
  const double g = (std::sqrt(5.0) - 1) / 2;
  auto a_at = [&](double e) {
    auto p = detail::e2_point(f, e, guess);
    if (!p) throw Error("bracket-failure", "branch lost during refinement");
    return p->second;
  };
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = a_at(x1), f2 = a_at(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = a_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = a_at(x2);
    }
  }
  r.eps_at_lo = 0.5 * (lo + hi);
  r.a_lo = a_at(r.eps_at_lo);
  if (!(r.a_lo < r.a_hi)) throw Error("bracket-failure", "interval endpoints out of order");
  return r;
}

// The pentagon of the general family with the given a, on the side of the curve through alpha = beta.
inline PentagonSpec solve_e2_general(int f, double a) {
  check_admissible(Family::kE2, f);
  if (f < 16) throw Error("inadmissible", "beta = gamma at f=12 leaves the pentagon undetermined");
  E2Interval iv = e2_parameter_interval(f);
  if (!(a > iv.a_lo && a < iv.a_hi))
    throw Error("outside-parameter-interval", "a must lie in (" + std::to_string(iv.a_lo) + ", " +
                                                  std::to_string(iv.a_hi) + ")");
  auto br = detail::e2_branch(f);
  std::size_t m = detail::branch_min_index(br);
  for (std::size_t i = m; i + 1 < br.size(); ++i) {
    if ((br[i].a - a) * (br[i + 1].a - a) > 0) continue;
    double guess = br[i].delta;
    auto h = [&](double e) {
      auto p = detail::e2_point(f, e, guess);
      if (!p) throw Error("no-root-in-range", "branch lost during refinement");
      return p->second - a;
    };
    double ep = br[i].a == a ? br[i].eps : br[i + 1].a == a ? br[i + 1].eps : find_root(h, br[i].eps, br[i + 1].eps);
    auto p = detail::e2_point(f, ep, guess);
    PentagonSpec s;
    s.angle = detail::e2_angles(f, p->first, ep);
    s.exact[kBeta] = Angle(1) - Angle(4, f);
    s.exact[kGamma] = Angle(8, f);
    s.a = p->second;
    s.b = solve_b_closure(s.angle, s.a);
    return s;
  }
  throw Error("no-root-in-range", "the curve does not reach the requested a");
}

inline PentagonSpec solve_family(Family x, int f, std::optional<double> a = std::nullopt,
                                 SubdivisionCase variant = SubdivisionCase::kAlphaCubed) {
  check_admissible(x, f);
  bool general = x == Family::kE2 || x == Family::kRE2;
  if (a && !general) throw Error("inadmissible", std::string(family_name(x)) + " has no free parameter");
  if (uses_e1_pentagon(x)) return solve_e1(f);
  if (general && a) return solve_e2_general(f, *a);
  if (general || is_e2_modification(x)) return solve_e2_alpha_beta(f);
  if (x == Family::kS16) return solve_fixed_sum(s16_angles());
  return solve_fixed_sum(subdivision_angles(x, variant));
}

} // namespace pentile
