#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <ostream>
#include <string>

#include "json.hpp"

#include "pentile/error.hpp"

namespace pentile {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDefaultTol = 1e-9;

// Exact angle (num/den)*pi, always reduced with den > 0.
class Angle {
public:
  constexpr Angle() = default;
  Angle(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw Error("bad-angle", "zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double radians() const { return static_cast<double>(num_) / static_cast<double>(den_) * kPi; }
  double over_pi() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Angle operator+(Angle x, Angle y) {
    std::int64_t g = std::gcd(x.den_, y.den_);
    return Angle(x.num_ * (y.den_ / g) + y.num_ * (x.den_ / g), x.den_ / g * y.den_);
  }
  friend Angle operator-(Angle x, Angle y) { return x + Angle(-y.num_, y.den_); }
  friend Angle operator-(Angle x) { return Angle(-x.num_, x.den_); }
  friend Angle operator*(std::int64_t k, Angle x) { return Angle(k * x.num_, x.den_); }
  friend Angle operator*(Angle x, std::int64_t k) { return k * x; }
  friend Angle operator/(Angle x, std::int64_t k) {
    if (k == 0) throw Error("bad-angle", "division by zero");
    return Angle(x.num_, x.den_ * k);
  }
  Angle& operator+=(Angle y) { return *this = *this + y; }
  Angle& operator-=(Angle y) { return *this = *this - y; }

  friend bool operator==(const Angle&, const Angle&) = default;
  friend auto operator<=>(Angle x, Angle y) {
    return static_cast<__int128>(x.num_) * y.den_ <=> static_cast<__int128>(y.num_) * x.den_;
  }

  std::string str() const {
    if (num_ == 0) return "0";
    std::string s;
    if (num_ == -1) s = "-";
    else if (num_ != 1) s = std::to_string(num_);
    s += "pi";
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

private:
  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Angle& a) { return os << a.str(); }

// Angle known only numerically, in radians.
struct FreeAngle {
  double value = 0.0;

  explicit FreeAngle(double v) : value(v) {
    if (!(v > 0.0 && v < 2.0 * kPi)) throw Error("bad-angle", "free angle must lie in (0, 2pi)");
  }
};

inline void check_face_count(int f) {
  if (f < 12 || f % 2 != 0) throw Error("bad-f", "f must be an even integer >= 12, got " + std::to_string(f));
}

// (3 + 4/f) pi
inline Angle pentagon_angle_sum(int f) {
  check_face_count(f);
  return Angle(3) + Angle(4, f);
}

inline bool angle_close(double x, double y, double tol) {
  if (!(tol > 0.0)) throw Error("bad-tolerance", "tol must be positive");
  return std::abs(x - y) <= tol;
}

// Parses "p/q pi", "pi/q", "p pi", "2pi/3" or plain radians.
inline double parse_angle_radians(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '*') s += c;
  auto pos = s.find("pi");
  if (pos == std::string::npos) return std::stod(s);
  std::string before = s.substr(0, pos), after = s.substr(pos + 2);
  double num = 1.0, den = 1.0;
  if (!before.empty() && before != "+" && before != "-") {
    auto slash = before.find('/');
    if (slash != std::string::npos) {
      num = std::stod(before.substr(0, slash));
      den = std::stod(before.substr(slash + 1));
    } else {
      num = std::stod(before);
    }
  } else if (before == "-") {
    num = -1.0;
  }
  if (!after.empty()) {
    if (after[0] != '/') throw Error("bad-angle", "cannot parse angle '" + text + "'");
    den *= std::stod(after.substr(1));
  }
  return num / den * kPi;
}

inline void to_json(nlohmann::json& j, const Angle& a) { j = {{"num", a.num()}, {"den", a.den()}}; }
inline void from_json(const nlohmann::json& j, Angle& a) {
  a = Angle(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}
inline void to_json(nlohmann::json& j, const FreeAngle& a) { j = {{"rad", a.value}}; }

} // namespace pentile
