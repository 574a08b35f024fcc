#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pentile/atlas.hpp"

using namespace pentile;

namespace {

void expect_code(const std::function<void()>& fn, const std::string& code) {
  try {
    fn();
    ADD_FAILURE() << "expected " << code;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// a values in (0, pi/2) where the walked delta corner equals the prescribed one
std::vector<double> e1_oracle_roots(int f) {
  double al = 8 * kPi / f, be = kPi - 4 * kPi / f, de = kPi / 2 + 2 * kPi / f;
  auto h = [&](double a) { return oracle::sides(al, be, be, a).delta - de; };
  std::vector<double> out;
  const int n = 2000;
  for (int i = 1; i < n; ++i) {
    double lo = i * (kPi / 2) / n, hi = (i + 1) * (kPi / 2) / n;
    if ((h(lo) < 0) == (h(hi) < 0) || std::abs(h(lo) - h(hi)) > 1) continue;
    for (int k = 0; k < 100; ++k) {
      double m = (lo + hi) / 2;
      ((h(m) < 0) == (h(lo) < 0) ? lo : hi) = m;
    }
    out.push_back((lo + hi) / 2);
  }
  return out;
}

void expect_oracle_fixed_sum(const PentagonSpec& p, double tol) {
  double al = p.angle[kAlpha], be = p.angle[kBeta], ga = p.angle[kGamma];
  double sum = p.angle[kDelta] + p.angle[kEpsilon];
  double ep = p.angle[kEpsilon] + 1e-3, a = p.a - 1e-3;
  ASSERT_TRUE(oracle::newton([&](double e) { return std::array<double, 5>{al, be, ga, sum - e, e}; }, ep, a));
  EXPECT_NEAR(ep, p.angle[kEpsilon], tol);
  EXPECT_NEAR(a, p.a, tol);
  EXPECT_NEAR(oracle::sides(al, be, ga, a).b, p.b, tol);
}

} // namespace

TEST(Atlas, FamilyNamesRoundTrip) {
  for (Family x : kAllFamilies) EXPECT_EQ(parse_family(family_name(x)), x);
  EXPECT_THROW(parse_family("f9e9"), Error);
}

TEST(Atlas, Admissibility) {
  expect_code([] { build(Family::kRE2, 16); }, "inadmissible");
  expect_code([] { build(Family::kE2, 18); }, "inadmissible");
  expect_code([] { build(Family::kPP8, 60); }, "inadmissible");
  expect_code([] { build(Family::kS16, 20); }, "inadmissible");
  expect_code([] { solve_family(Family::kF2E2, 12); }, "inadmissible");
  expect_code([] { solve_family(Family::kPP8, 24, 0.3); }, "inadmissible");
  EXPECT_NO_THROW(build(Family::kRE2, 12));
}

TEST(Atlas, EveryFamilyValidates) {
  for (Family x : kAllFamilies)
    for (int f = 12; f <= 60; f += 4) {
      try {
        check_admissible(x, f);
      } catch (const Error&) {
        continue;
      }
      auto t = build(x, f);
      EXPECT_EQ(t.f(), f);
      auto v = validate_under(t, family_system(x, f));
      EXPECT_TRUE(v.ok) << family_name(x) << " f=" << f << " " << v.reason;
    }
}

TEST(Atlas, AvcGoldens) {
  AVCCounts e2{{VertexType(1, 0, 0, 1, 1), 16}, {VertexType(0, 2, 1, 0, 0), 8}, {VertexType(0, 0, 4, 0, 0), 2}};
  EXPECT_EQ(extract_avc(build(Family::kE2, 16)), e2);
  for (int q = 1; q <= 4; ++q) {
    int f = 8 * q + 4;
    AVC re2{VertexType(1, 0, 0, 1, 1), VertexType(0, 2, 1, 0, 0), VertexType(0, 1, q + 1, 0, 0)};
    EXPECT_EQ(avc_types(extract_avc(build(Family::kRE2, f))), re2) << f;
    AVC f2e1{VertexType(1, 2, 0, 0, 0), VertexType(0, 1, 0, 2, 0), VertexType(q + 1, 1, 0, 0, 0)};
    EXPECT_EQ(collapse_symmetric(avc_types(extract_avc(build(Family::kF2E1, f)))), f2e1) << f;
  }
  auto pp8 = build(Family::kPP8, 24);
  EXPECT_EQ(degree_stats(pp8)[4], 6);
  EXPECT_EQ(extract_avc(pp8)[VertexType(0, 0, 4, 0, 0)], 6);
}

TEST(Atlas, S16UpperHalfMatchesE2) {
  auto s = build(Family::kS16, 16);
  auto e = build(Family::kE2, 16);
  EXPECT_EQ(s.f(), 16);
  EXPECT_FALSE(isomorphic(s, e));
  EarthMapIndex I{4};
  int same = 0;
  for (int k = 0; k < 4; ++k)
    for (int i : {I.T(k), I.U(k)}) same += exchange_labels(e).tiles[i].corners == s.tiles[i].corners;
  EXPECT_EQ(same, 8);
}

TEST(Atlas, E1ClosedFormMatchesWalk) {
  for (int f = 12; f <= 64; f += 4) {
    auto p = solve_family(Family::kE1, f);
    double sec = 1 / std::cos(2 * kPi / f);
    EXPECT_NEAR(std::cos(p.a), 1 + (std::sqrt(5.0) - 3) / 4 * sec * sec, 1e-12);
    auto roots = e1_oracle_roots(f);
    bool hit = false;
    for (double r : roots) hit = hit || std::abs(r - p.a) < 1e-9;
    EXPECT_TRUE(hit) << f;
    auto s = oracle::sides(p.angle[kAlpha], p.angle[kBeta], p.angle[kGamma], p.a);
    EXPECT_NEAR(s.b, p.b, 1e-9) << f;
    EXPECT_NEAR(s.epsilon, p.angle[kEpsilon], 1e-9) << f;
  }
  EXPECT_NEAR(solve_e1(16).a, 0.21712 * kPi, 1e-5 * kPi);
}

TEST(Atlas, AlphaBetaMatchesWalk) {
  for (int f = 16; f <= 100; f += 4) {
    PentagonSpec p = solve_family(Family::kE2, f);
    auto q = alpha_beta_quadratic(f);
    EXPECT_GT(p.angle[kEpsilon], q.lo);
    EXPECT_LT(p.angle[kEpsilon], q.hi);
    double t = std::tan(p.angle[kEpsilon]);
    EXPECT_NEAR(q.A + q.B * t + q.C * t * t, 0.0, 1e-9);
    expect_oracle_fixed_sum(p, 1e-9);
  }
  auto p = solve_family(Family::kE2, 16);
  EXPECT_NEAR(p.angle[kEpsilon], 0.7889 * kPi, 1.5e-4 * kPi);
  EXPECT_NEAR(p.a, 0.1992 * kPi, 1.5e-4 * kPi);
  EXPECT_NEAR(p.b, 0.2763 * kPi, 1.5e-4 * kPi);
}

TEST(Atlas, FixedSumPentagonsMatchWalk) {
  struct Case {
    Family x;
    int f;
    SubdivisionCase v;
    double eps, a, b;
  };
  const auto a3 = SubdivisionCase::kAlphaCubed, g3 = SubdivisionCase::kGammaCubed;
  for (const Case& c : {Case{Family::kPP8, 24, a3, 0.8240, 0.1781, 0.1613}, Case{Family::kPP20, 60, a3, 0.9310, 0.1206, -1},
                        Case{Family::kPP8, 24, g3, 0.2068, 0.2252, 0.0766}, Case{Family::kPP20, 60, g3, 0.0126, 0.1835, 0.1349},
                        Case{Family::kS16, 16, a3, 0.1820, 0.2774, 0.1359}}) {
    auto p = solve_family(c.x, c.f, std::nullopt, c.v);
    EXPECT_NEAR(p.angle[kEpsilon], c.eps * kPi, 1.5e-4 * kPi) << family_name(c.x);
    EXPECT_NEAR(p.a, c.a * kPi, 1.5e-4 * kPi) << family_name(c.x);
    if (c.b > 0) {
      EXPECT_NEAR(p.b, c.b * kPi, 1.5e-4 * kPi) << family_name(c.x);
    }
    expect_oracle_fixed_sum(p, 1e-9);
  }
}

TEST(Atlas, GeneralE2Interval) {
  for (int f : {16, 20}) {
    auto iv = e2_parameter_interval(f);
    double a0 = solve_e2_alpha_beta(f).a;
    EXPECT_LT(iv.a_lo, a0) << f;
    EXPECT_LT(a0, iv.a_hi) << f;
    EXPECT_LT(iv.a_hi, kPi / 2);
  }
  auto iv = e2_parameter_interval(16);
  EXPECT_NEAR(iv.a_lo, 0.182028 * kPi, 1e-5);
  EXPECT_NEAR(iv.a_hi, 0.277442 * kPi, 1e-5);
}

TEST(Atlas, GeneralE2AgreesAtAlphaBeta) {
  auto ab = solve_e2_alpha_beta(16);
  auto g = solve_e2_general(16, ab.a);
  for (Label l : kLabels) EXPECT_NEAR(g.angle[l], ab.angle[l], 1e-8) << label_name(l);
  EXPECT_NEAR(g.b, ab.b, 1e-8);
}

TEST(Atlas, GeneralE2MatchesWalk) {
  const int f = 16;
  auto iv = e2_parameter_interval(f);
  for (double s : {0.1, 0.3, 0.6, 0.9}) {
    double a = iv.a_lo + s * (iv.a_hi - iv.a_lo);
    auto p = solve_e2_general(f, a);
    EXPECT_NEAR(p.a, a, 1e-12);
    EXPECT_NEAR(p.angle[kBeta], kPi - 4 * kPi / f, 1e-12);
    EXPECT_NEAR(p.angle[kGamma], 8 * kPi / f, 1e-12);
    EXPECT_NEAR(p.angle[kAlpha] + p.angle[kDelta] + p.angle[kEpsilon], 2 * kPi, 1e-12);
    auto w = oracle::sides(p.angle[kAlpha], p.angle[kBeta], p.angle[kGamma], a);
    EXPECT_NEAR(w.delta, p.angle[kDelta], 1e-8);
    EXPECT_NEAR(w.epsilon, p.angle[kEpsilon], 1e-8);
    EXPECT_NEAR(w.b, p.b, 1e-8);
  }
  expect_code([&] { solve_e2_general(f, iv.a_hi + 0.01); }, "outside-parameter-interval");
  expect_code([&] { solve_e2_general(f, iv.a_lo - 0.01); }, "outside-parameter-interval");
}

TEST(Atlas, PatchChain) {
  for (int f : {12, 20, 28}) {
    int q = (f - 4) / 8;
    auto chain = patch_chain(f);
    ASSERT_EQ(static_cast<int>(chain.size()), 2 * (q + 1));
    EXPECT_EQ(chain.front(), build(Family::kF2E2, f));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) EXPECT_EQ(tiles_differing(chain[k], chain[k + 1]), 4);
    for (int k = 0; k < static_cast<int>(chain.size()); ++k) {
      EXPECT_EQ(chain_index(chain_locator(k)), k);
      auto loc = locate_patch(chain[k]);
      ASSERT_TRUE(loc.has_value());
      EXPECT_EQ(*loc, chain_locator(k));
    }
    auto f3 = reglue_reflect(build(Family::kE2, f), detail::e2_half(f), 4);
    EXPECT_TRUE(isomorphic(chain.back(), f3)) << f;
  }
}

TEST(Atlas, ShiftAndFlip) {
  const int f = 20, q = 2;
  auto t = build(Family::kF2E2, f);
  PatchLocator loc{0, PatchLocator::kAsIs};
  auto flipped = shift_flip_patch(t, loc, PatchAction::kFlip);
  EXPECT_EQ(shift_flip_patch(flipped, {0, PatchLocator::kFlipped}, PatchAction::kFlip), t);
  EXPECT_GE(disjoint_patch_pairs(find_patches(flipped)), 1);
  auto cur = t;
  for (int p = 0; p < q; ++p) {
    cur = shift_flip_patch(cur, {p, PatchLocator::kAsIs}, PatchAction::kShift);
    EXPECT_TRUE(validate_under(cur, e2_alpha_beta_system(f)).ok);
  }
  EXPECT_TRUE(isomorphic(cur, reglue_reflect(build(Family::kE2, f), detail::e2_half(f), 4)));
  expect_code([&] { shift_flip_patch(cur, {q, PatchLocator::kAsIs}, PatchAction::kShift); }, "no-patch-at-location");
  expect_code([&] { shift_flip_patch(t, {q + 1, PatchLocator::kAsIs}, PatchAction::kFlip); }, "no-patch-at-location");
  expect_code([&] { shift_flip_patch(t, {1, PatchLocator::kAsIs}, PatchAction::kFlip); }, "no-patch-at-location");
  expect_code([&] { shift_flip_patch(build(Family::kF1E2, f), loc, PatchAction::kFlip); }, "no-patch-at-location");
}

TEST(Atlas, PrimedVariantsUseLocators) {
  auto chain = patch_chain(20);
  EXPECT_EQ(build(Family::kF2E2Prime, 20), chain[chain_index({1, PatchLocator::kAsIs})]);
  EXPECT_EQ(build(Family::kF2E2DoublePrime, 20), chain[chain_index({0, PatchLocator::kFlipped})]);
  BuildOptions o;
  o.locator = PatchLocator{2, PatchLocator::kAsIs};
  EXPECT_EQ(build(Family::kF2E2Prime, 20, o), chain.back());
  o.locator = PatchLocator{3, PatchLocator::kAsIs};
  expect_code([&] { build(Family::kF2E2Prime, 20, o); }, "inadmissible");
}
