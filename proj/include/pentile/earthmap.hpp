#pragma once

#include <array>
#include <vector>

#include "pentile/combmap.hpp"

namespace pentile {

enum class EarthMapKind { kE1, kE2 };

// Tile indices inside an earth map tiling with n = f/4 timezones.
struct EarthMapIndex {
  int n = 0;
  int T(int k) const { return 4 * mod(k) + 0; }
  int U(int k) const { return 4 * mod(k) + 1; }
  int L(int k) const { return 4 * mod(k) + 2; }
  int B(int k) const { return 4 * mod(k) + 3; }
  int mod(int k) const { return ((k % n) + n) % n; }
};

// Timezone k has vertices P1..P4, Q1, Q2 between the poles N and S. Faces, counterclockwise:
//   T_k = (P1, Q1, P2', P1', N)    U_k = (P1, P2, P3, Q2, Q1)
//   L_k = (Q1, Q2, P4', P3', P2')  B_k = (P3, P4, S, P4', Q2)
// where primes refer to timezone k+1.
inline CombinatorialTiling build_earth_map(int f, EarthMapKind kind) {
  if (f < 12 || f % 4 != 0) throw Error("inadmissible", "earth map tilings need f >= 12 and f = 0 mod 4");
  int n = f / 4;
  const int N = 6 * n, S = 6 * n + 1;
  auto P = [&](int j, int k) { return 6 * (((k % n) + n) % n) + (j - 1); };
  auto Q = [&](int j, int k) { return 6 * (((k % n) + n) % n) + 3 + j; };
  std::vector<std::array<int, 5>> faces;
  std::vector<std::array<Label, 5>> labels;
  const auto a = kAlpha, b = kBeta, c = kGamma, d = kDelta, e = kEpsilon;
  for (int k = 0; k < n; ++k) {
    faces.push_back({P(1, k), Q(1, k), P(2, k + 1), P(1, k + 1), N});
    faces.push_back({P(1, k), P(2, k), P(3, k), Q(2, k), Q(1, k)});
    faces.push_back({Q(1, k), Q(2, k), P(4, k + 1), P(3, k + 1), P(2, k + 1)});
    faces.push_back({P(3, k), P(4, k), S, P(4, k + 1), Q(2, k)});
    if (kind == EarthMapKind::kE2) {
      labels.push_back({a, b, d, e, c});
      labels.push_back({d, e, c, a, b});
      labels.push_back({c, e, d, b, a});
      labels.push_back({b, a, c, e, d});
    } else {
      labels.push_back({b, d, e, c, a});
      labels.push_back({a, b, d, e, c});
      labels.push_back({e, c, a, b, d});
      labels.push_back({e, c, a, b, d});
    }
  }
  return tiling_from_faces(faces, labels);
}

} // namespace pentile
