#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "pentile/error.hpp"

namespace pentile {

struct RootOptions {
  double tol = 1e-12;
  int max_iter = 100;
};

// Safeguarded Newton on a sign-changing bracket; falls back to bisection whenever
// the Newton step leaves the bracket or fails to shrink it.
inline double find_root(const std::function<double(double)>& f, double lo, double hi, RootOptions opt = {}) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) throw Error("bracket-failure", "no sign change on bracket");
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 4 * opt.max_iter; ++it) {
    double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) { lo = x; flo = fx; }
    else { hi = x; fhi = fx; }
    if (hi - lo <= opt.tol) return 0.5 * (lo + hi);
    double h = std::max(1e-7 * (hi - lo), 1e-14);
    double d = (f(x + h) - f(x - h)) / (2.0 * h);
    double nx = d != 0.0 ? x - fx / d : lo - 1.0;
    if (!(nx > lo && nx < hi) || (it >= opt.max_iter)) nx = 0.5 * (lo + hi);
    if (std::abs(nx - x) <= 0.25 * opt.tol) return nx;
    x = nx;
  }
  return 0.5 * (lo + hi);
}

// Brackets sign changes of f over n equal steps and refines each.
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi, int n = 2000,
                                      RootOptions opt = {}) {
  std::vector<double> roots;
  double step = (hi - lo) / n;
  double x0 = lo, f0 = f(x0);
  for (int i = 1; i <= n; ++i) {
    double x1 = lo + i * step, f1 = f(x1);
    if (std::isfinite(f0) && std::isfinite(f1)) {
      if (f1 == 0.0) roots.push_back(x1);
      else if (f0 != 0.0 && std::signbit(f0) != std::signbit(f1)) roots.push_back(find_root(f, x0, x1, opt));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

} // namespace pentile
