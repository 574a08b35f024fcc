#include <gtest/gtest.h>

#include "pentile/angle.hpp"

using namespace pentile;

TEST(Angle, ReducesToLowestTerms) {
  Angle x(6, -8);
  EXPECT_EQ(x.num(), -3);
  EXPECT_EQ(x.den(), 4);
  EXPECT_EQ(Angle(2, 4), Angle(1, 2));
  EXPECT_THROW(Angle(1, 0), Error);
}

TEST(Angle, ArithmeticIsExact) {
  EXPECT_EQ(Angle(1, 3) + Angle(1, 6), Angle(1, 2));
  EXPECT_EQ(Angle(3, 4) - Angle(3, 4), Angle(0));
  EXPECT_EQ(3 * Angle(2, 9), Angle(2, 3));
  EXPECT_EQ(Angle(5, 4) / 2, Angle(5, 8));
  EXPECT_LT(Angle(2, 3), Angle(3, 4));
  // a tenth added ten times gives one exactly
  Angle s;
  for (int i = 0; i < 10; ++i) s += Angle(1, 10);
  EXPECT_EQ(s, Angle(1));
}

TEST(Angle, PentagonAngleSum) {
  EXPECT_EQ(pentagon_angle_sum(16), Angle(13, 4));
  EXPECT_EQ(pentagon_angle_sum(24), Angle(19, 6));
  EXPECT_EQ(pentagon_angle_sum(12), Angle(10, 3));
  for (int f = 12; f <= 200; f += 2) EXPECT_EQ(pentagon_angle_sum(f) - Angle(3), Angle(4, f));
}

TEST(Angle, PentagonAngleSumRejectsBadF) {
  for (int f : {10, 13, 0, -12}) {
    try {
      pentagon_angle_sum(f);
      FAIL() << f;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), "bad-f");
    }
  }
}

TEST(Angle, AngleClose) {
  EXPECT_TRUE(angle_close(0.8240 * kPi, 0.82401 * kPi, 1e-4 * kPi));
  EXPECT_FALSE(angle_close(0.8240 * kPi, 0.8242 * kPi, 1e-4 * kPi));
  EXPECT_TRUE(angle_close(kPi, kPi, 1e-12));
  EXPECT_THROW(angle_close(1, 1, 0), Error);
}

TEST(Angle, FreeAngleRange) {
  EXPECT_NO_THROW(FreeAngle(0.7889 * kPi));
  EXPECT_THROW(FreeAngle(0.0), Error);
  EXPECT_THROW(FreeAngle(2 * kPi), Error);
}

TEST(Angle, ParseAndJson) {
  EXPECT_NEAR(parse_angle_radians("3pi/4"), 0.75 * kPi, 1e-15);
  EXPECT_NEAR(parse_angle_radians("pi/2"), kPi / 2, 1e-15);
  EXPECT_NEAR(parse_angle_radians("5/8 pi"), 0.625 * kPi, 1e-15);
  EXPECT_NEAR(parse_angle_radians("1.25"), 1.25, 1e-15);
  nlohmann::json j = Angle(19, 6);
  EXPECT_EQ(j["num"], 19);
  EXPECT_EQ(j["den"], 6);
  EXPECT_EQ(j.get<Angle>(), Angle(19, 6));
}
