#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pentile/atlas.hpp"
#include "pentile/realize.hpp"

namespace pentile {

struct GoldenRow {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GoldenTolerances {
  double printed = 1.5e-4 * kPi;  // four printed digits of a multiple of pi
  double closed_form = 1e-9;
  double closure = 1e-8;
  double area_total = 1e-8;
  double area_tile = 1e-9;
};

namespace detail {

class RowBuilder {
public:
  explicit RowBuilder(int id, std::string name) { row_.id = id; row_.name = std::move(name); }

  // Records |got - want| <= tol.
  void near(const std::string& what, double got, double want, double tol) {
    double d = std::abs(got - want);
    if (!(d <= tol)) fail(what + " off by " + fmt(d));
    worst_ = std::max(worst_, d);
  }
  void check(const std::string& what, bool ok) {
    if (!ok) fail(what);
  }
  void fail(const std::string& why) {
    ok_ = false;
    if (failures_++ < 3) msg_ << (msg_.tellp() > 0 ? "; " : "") << why;
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }

  GoldenRow done() {
    row_.pass = ok_;
    std::string n = notes_.str();
    if (ok_) row_.detail = n.empty() ? "max deviation " + fmt(worst_) : n;
    else row_.detail = msg_.str() + (failures_ > 3 ? " (+" + std::to_string(failures_ - 3) + " more)" : "");
    return row_;
  }

  static std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
  }

private:
  GoldenRow row_;
  bool ok_ = true;
  int failures_ = 0;
  double worst_ = 0.0;
  std::ostringstream msg_, notes_;
};

template <class F>
GoldenRow guarded(int id, const std::string& name, F body) {
  RowBuilder rb(id, name);
  try {
    body(rb);
  } catch (const std::exception& e) {
    rb.fail(std::string("exception: ") + e.what());
  }
  return rb.done();
}

inline void check_pentagon(RowBuilder& rb, const std::string& tag, const PentagonSpec& p, double eps, double a,
                           double b, double tol) {
  rb.near(tag + " epsilon", p.angle[kEpsilon], eps * kPi, tol);
  rb.near(tag + " a", p.a, a * kPi, tol);
  rb.near(tag + " b", p.b, b * kPi, tol);
}

// Every (family, f, variant) solved by the atlas, with f limited to the given bound for the infinite families.
inline std::vector<std::tuple<Family, int, SubdivisionCase>> solvable_instances(int f_max) {
  std::vector<std::tuple<Family, int, SubdivisionCase>> out;
  for (Family x : kAllFamilies)
    for (int f = 12; f <= std::max(f_max, 60); f += 4)
      for (auto v : {SubdivisionCase::kAlphaCubed, SubdivisionCase::kGammaCubed}) {
        bool pp = x == Family::kPP8 || x == Family::kPP20;
        if (v == SubdivisionCase::kGammaCubed && !pp) continue;
        if (!pp && f > f_max) continue;
        try {
          check_admissible(x, f);
        } catch (const Error&) {
          continue;
        }
        if ((x == Family::kE2 || x == Family::kRE2 || is_e2_modification(x)) && f < 16) continue;
        out.emplace_back(x, f, v);
      }
  return out;
}

} // namespace detail

inline std::vector<GoldenRow> run_goldens(const GoldenTolerances& tol = {}) {
  using detail::RowBuilder;
  std::vector<GoldenRow> rows;

  rows.push_back(detail::guarded(1, "subdivision f=24, alpha^3 case", [&](RowBuilder& rb) {
    auto p = solve_family(Family::kPP8, 24, {}, SubdivisionCase::kAlphaCubed);
    double r = std::pow(3.0, 0.75);
    rb.near("tan epsilon closed form", std::tan(p.angle[kEpsilon]), -r / (std::sqrt(2.0) + r), tol.closed_form);
    rb.near("cos a closed form", std::cos(p.a), std::sqrt(2 * std::sqrt(3.0) + 3) / 3, tol.closed_form);
    detail::check_pentagon(rb, "", p, 0.8240, 0.1781, 0.1613, tol.printed);
  }));

  rows.push_back(detail::guarded(2, "subdivision f=60, alpha^3 case", [&](RowBuilder& rb) {
    auto p = solve_family(Family::kPP20, 60, {}, SubdivisionCase::kAlphaCubed);
    detail::check_pentagon(rb, "", p, 0.9310, 0.1206, 0.1129, tol.printed);
  }));

  rows.push_back(detail::guarded(3, "subdivision gamma^3 case, f=24 and f=60", [&](RowBuilder& rb) {
    auto p = solve_family(Family::kPP8, 24, {}, SubdivisionCase::kGammaCubed);
    detail::check_pentagon(rb, "f=24", p, 0.2068, 0.2252, 0.0766, tol.printed);
    rb.near("f=24 cos a = cot(alpha/2) cot(delta)", std::cos(p.a),
            1 / std::tan(p.angle[kAlpha] / 2) / std::tan(p.angle[kDelta]), tol.closed_form);
    rb.near("f=24 cos a = cot(gamma/2) cot(epsilon)", std::cos(p.a),
            1 / std::tan(p.angle[kGamma] / 2) / std::tan(p.angle[kEpsilon]), tol.closed_form);
    auto q = solve_family(Family::kPP20, 60, {}, SubdivisionCase::kGammaCubed);
    detail::check_pentagon(rb, "f=60", q, 0.0126, 0.1835, 0.1349, tol.printed);
  }));

  rows.push_back(detail::guarded(4, "alpha=beta earth map, f=16", [&](RowBuilder& rb) {
    auto p = solve_family(Family::kE2, 16);
    double r2 = std::sqrt(2.0);
    rb.near("cos a closed form", std::cos(p.a), std::sqrt(4 * r2 - 5), tol.closed_form);
    rb.near("cos b closed form", std::cos(p.b), 3 - 2 * r2 + std::sqrt(44 * r2 - 62), tol.closed_form);
    rb.near("tan epsilon closed form", std::tan(p.angle[kEpsilon]), std::sqrt(11 + 8 * r2) / r2 - 2 - 3 / r2,
            tol.closed_form);
    detail::check_pentagon(rb, "", p, 0.7889, 0.1992, 0.2763, tol.printed);
  }));

  rows.push_back(detail::guarded(5, "sporadic S16", [&](RowBuilder& rb) {
    auto p = solve_family(Family::kS16, 16);
    rb.near("cos epsilon = 2^(-1/4)", std::cos(p.angle[kEpsilon]), std::pow(2.0, -0.25), tol.closed_form);
    detail::check_pentagon(rb, "", p, 0.1820, 0.2774, 0.1359, tol.printed);
  }));

  rows.push_back(detail::guarded(6, "symmetric E1, f=12..64", [&](RowBuilder& rb) {
    double worst = 0;
    for (int f = 12; f <= 64; f += 4) {
      auto p = solve_family(Family::kE1, f);
      double s = 1 / std::cos(2 * kPi / f);
      rb.near("f=" + std::to_string(f) + " cos a", std::cos(p.a), 1 + (std::sqrt(5.0) - 3) / 4 * s * s,
              tol.closed_form);
      auto r = realize(build(Family::kE1, f), p, {tol.closure});
      worst = std::max(worst, r.closure_residual);
    }
    rb.note("14 values of f, worst closure residual " + RowBuilder::fmt(worst));
  }));

  rows.push_back(detail::guarded(7, "every family builds and verifies, f=12..44", [&](RowBuilder& rb) {
    int built = 0;
    for (Family x : kAllFamilies)
      for (int f = 12; f <= 44; f += 4)
        for (auto v : {SubdivisionCase::kAlphaCubed, SubdivisionCase::kGammaCubed}) {
          if (v == SubdivisionCase::kGammaCubed && x != Family::kPP8) continue;
          try {
            check_admissible(x, f);
          } catch (const Error&) {
            continue;
          }
          BuildOptions o;
          o.variant = v;
          std::string tag = std::string(family_name(x)) + "(" + std::to_string(f) + ")";
          auto t = build(x, f, o);
          auto rep = verify_tiling(t);
          rb.check(tag + " verify", rep.ok);
          rb.check(tag + " euler", rep.v - rep.e + rep.f == 2);
          long fsum = 12, v3 = 20;
          for (auto [k, n] : rep.degrees)
            if (k >= 4) {
              fsum += 2L * (k - 3) * n;
              v3 += (3L * k - 10) * n;
            }
          rb.check(tag + " f identity", fsum == f);
          rb.check(tag + " v3 identity", rep.degrees.count(3) && rep.degrees.at(3) == v3);
          auto avc = extract_avc(t);
          for (const auto& [vt, n] : avc) rb.check(tag + " parity " + vt.name(), parity_check(vt));
          rb.check(tag + " balance", balance_check(avc_types(avc)));
          rb.check(tag + " counting", counting_check(avc, f).pass);
          ++built;
        }
    rb.note(std::to_string(built) + " tilings checked");
  }));

  rows.push_back(detail::guarded(8, "AVC goldens", [&](RowBuilder& rb) {
    for (int q = 1; q <= 3; ++q) {
      int f = 8 * q + 4;
      AVC want = {VertexType(1, 0, 0, 1, 1), VertexType(0, 2, 1, 0, 0), VertexType(0, 1, q + 1, 0, 0)};
      rb.check("RE2(" + std::to_string(f) + ")", avc_types(extract_avc(build(Family::kRE2, f))) == want);
      AVC want1 = {VertexType(1, 2, 0, 0, 0), VertexType(0, 1, 0, 2, 0), VertexType(q + 1, 1, 0, 0, 0)};
      rb.check("F2E1(" + std::to_string(f) + ") collapsed",
               collapse_symmetric(avc_types(extract_avc(build(Family::kF2E1, f)))) == want1);
    }
    for (int k = 2; k <= 5; ++k) {
      VertexType pole(0, 0, 2 * k, 0, 0);
      rb.check("E2(" + std::to_string(8 * k) + ") has gamma^" + std::to_string(2 * k),
               extract_avc(build(Family::kE2, 8 * k)).count(pole) == 1);
    }
    auto pp = build(Family::kPP8, 24);
    auto avc = extract_avc(pp);
    AVC want = {VertexType(1, 0, 0, 1, 1), VertexType(0, 3, 0, 0, 0), VertexType(0, 0, 4, 0, 0)};
    rb.check("PP8 types", avc_types(avc) == want);
    auto deg = degree_stats(pp);
    rb.check("PP8 gamma^4 count", avc[VertexType(0, 0, 4, 0, 0)] == 6 && deg[4] == 6);
    rb.note("RE2 and F2E1 for q=1..3, E2(16..40), PP8 {αδε, β³, γ⁴} with v4=6 (f=12+2v4 at f=24)");
  }));

  rows.push_back(detail::guarded(9, "infeasibility certificates", [&](RowBuilder& rb) {
    auto c = check_infeasible_family(InfeasibleFamily::kB2dC2eAbc, 16, 10000);
    rb.check("B2D_C2E_ABC min residual > 1e-8", c.min_abs_residual > 1e-8);
    rb.check("B2D_C2E_ABC no sign change", c.sign_changes == 0);
    rb.check("B2D_C2E_ABC zero at delta=epsilon", std::abs(c.residual_at_symmetric) < 1e-12);
    auto d = check_infeasible_family(InfeasibleFamily::kAdeAc2F20);
    rb.check("ADE_AC2_F20 has no root below 0.8pi", d.infeasible && d.sign_changes == 0);
    rb.note("B2D min |residual| " + RowBuilder::fmt(c.min_abs_residual) + ", AC2 min |expr| " +
            RowBuilder::fmt(d.min_abs_residual));
  }));

  rows.push_back(detail::guarded(10, "alpha=beta quadratic, f=20..100", [&](RowBuilder& rb) {
    for (int f = 20; f <= 100; f += 4) {
      auto q = alpha_beta_quadratic(f);
      std::string tag = "f=" + std::to_string(f);
      rb.check(tag + " C != 0", std::abs(q.C) > 1e-9);
      rb.check(tag + " epsilon- in range", q.eps_minus > q.lo && q.eps_minus < kPi);
      rb.check(tag + " epsilon+ rejected", !(q.eps_plus > q.lo && q.eps_plus < q.hi));
      auto p = solve_family(Family::kE2, f);
      rb.check(tag + " uses epsilon-", std::abs(p.angle[kEpsilon] - q.eps_minus) < 1e-12);
      rb.check(tag + " cos a in (0,1)", std::cos(p.a) > 0 && std::cos(p.a) < 1);
    }
  }));

  rows.push_back(detail::guarded(11, "geometric realization", [&](RowBuilder& rb) {
    double worst_res = 0, worst_area = 0, worst_tile = 0;
    int n = 0;
    auto one = [&](const std::string& tag, const CombinatorialTiling& t, const PentagonSpec& p) {
      auto r = realize(t, p, {tol.closure});
      int f = t.f();
      worst_res = std::max(worst_res, r.closure_residual);
      double da = std::abs(total_area(r) - 4 * kPi);
      worst_area = std::max(worst_area, da);
      rb.check(tag + " total area", da <= tol.area_total);
      for (int i = 0; i < f; ++i) {
        double dt = std::abs(tile_area(r, i) - 4 * kPi / f);
        worst_tile = std::max(worst_tile, dt);
        rb.check(tag + " tile area", dt <= tol.area_tile);
      }
      rb.check(tag + " simple", tiles_simple(r));
      ++n;
    };
    for (auto [x, f, v] : detail::solvable_instances(44)) {
      BuildOptions o;
      o.variant = v;
      one(std::string(family_name(x)) + "(" + std::to_string(f) + ")", build(x, f, o), solve_family(x, f, {}, v));
    }
    for (int f : {16, 20, 28}) {
      auto iv = e2_parameter_interval(f);
      for (double s : {0.1, 0.5, 0.9}) {
        double a = iv.a_lo + s * (iv.a_hi - iv.a_lo);
        auto p = solve_family(Family::kE2, f, a);
        one("E2 general f=" + std::to_string(f), build(Family::kE2, f), p);
        if (f % 8 == 4) one("RE2 general f=" + std::to_string(f), build(Family::kRE2, f), p);
      }
    }
    rb.note(std::to_string(n) + " realizations; worst closure " + RowBuilder::fmt(worst_res) + ", area " +
            RowBuilder::fmt(worst_area) + ", tile area " + RowBuilder::fmt(worst_tile));
  }));

  rows.push_back(detail::guarded(12, "patch algebra", [&](RowBuilder& rb) {
    for (int f : {12, 20, 28, 36}) {
      std::string tag = "f=" + std::to_string(f);
      int q = (f - 4) / 8;
      AngleSystem sys = e2_alpha_beta_system(f);
      auto host = build(Family::kF2E2, f);
      for (int p = 0; p <= q; ++p)
        for (auto o : {PatchLocator::kAsIs, PatchLocator::kFlipped}) {
          PatchLocator loc{p, o};
          auto t = build(Family::kF2E2Prime, f, {SubdivisionCase::kAlphaCubed, loc});
          auto flipped = shift_flip_patch(t, loc, PatchAction::kFlip);
          PatchLocator other{p, o == PatchLocator::kAsIs ? PatchLocator::kFlipped : PatchLocator::kAsIs};
          rb.check(tag + " flip twice", shift_flip_patch(flipped, other, PatchAction::kFlip) == t);
        }
      auto dbl = shift_flip_patch(host, {0, PatchLocator::kAsIs}, PatchAction::kFlip);
      rb.check(tag + " central flip gives two disjoint patches", disjoint_patch_pairs(find_patches(dbl)) >= 1);
      auto cur = host;
      for (int p = 0; p < q; ++p) {
        cur = shift_flip_patch(cur, {p, PatchLocator::kAsIs}, PatchAction::kShift);
        rb.check(tag + " shift step valid", validate_under(cur, sys).ok);
      }
      rb.check(tag + " full shift gives the third flip class",
               isomorphic(cur, reglue_reflect(build_earth_map(f, EarthMapKind::kE2), detail::e2_half(f), 4)));
      auto lit = find_patches(host);
      rb.check(tag + " host has one patch", lit.size() == 1);
      auto once = flip_patch(host, lit.at(0));
      rb.check(tag + " literal flip matches the chain", isomorphic(once, dbl));
      bool back = false;
      for (const auto& p : find_patches(once))
        if (p.tile_set() == lit[0].tile_set()) back = flip_patch(once, p) == host;
      rb.check(tag + " literal flip is an involution", back);
    }
  }));

  return rows;
}

} // namespace pentile
