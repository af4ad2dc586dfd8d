#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotcord/error.hpp"

namespace knotcord {

/// The point exp(2 pi i p/q) on the unit circle, for a reduced fraction
/// strictly between 0 and 1.
class RationalAngle {
 public:
  RationalAngle(long p, long q) {
    if (q <= 0 || p <= 0 || p >= q)
      throw Error(ErrorKind::BadParameter,
                  "angle p/q must satisfy 0 < p/q < 1, got " + std::to_string(p) + "/" + std::to_string(q));
    const long g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
  }

  long p() const noexcept { return p_; }
  long q() const noexcept { return q_; }

  /// (q - p)/q, the complex-conjugate point.
  RationalAngle conjugate() const { return RationalAngle(q_ - p_, q_); }

  std::string to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

  /// Parses "p/q" (whitespace allowed around the parts).
  static RationalAngle parse(std::string_view text) {
    const auto slash = text.find('/');
    auto trim = [](std::string_view s) {
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
      while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
      return std::string(s);
    };
    try {
      if (slash == std::string_view::npos) throw std::invalid_argument("missing '/'");
      std::size_t used = 0;
      const std::string ps = trim(text.substr(0, slash)), qs = trim(text.substr(slash + 1));
      const long p = std::stol(ps, &used);
      if (used != ps.size()) throw std::invalid_argument("p");
      const long q = std::stol(qs, &used);
      if (used != qs.size()) throw std::invalid_argument("q");
      return RationalAngle(p, q);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::BadParameter, "cannot parse angle '" + std::string(text) + "', expected p/q");
    }
  }

  friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

  /// Ordered by value.
  friend std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
    return static_cast<long long>(a.p_) * b.q_ <=> static_cast<long long>(b.p_) * a.q_;
  }

 private:
  long p_ = 1;
  long q_ = 2;
};

/// Comma-separated list of p/q angles.
inline std::vector<RationalAngle> parse_angles(std::string_view text) {
  std::vector<RationalAngle> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!piece.empty()) out.push_back(RationalAngle::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// The angles that carry the four-genus obstructions of the (A, B) construction.
inline std::vector<RationalAngle> distinguished_angles() {
  return {RationalAngle(1, 2), RationalAngle(1, 3), RationalAngle(1, 7), RationalAngle(2, 7),
          RationalAngle(3, 7)};
}

/// Every reduced p/q with q <= max_q, ordered by denominator then numerator,
/// together with the distinguished angles. 1/2 comes first.
inline std::vector<RationalAngle> default_angle_grid(long max_q = 24) {
  std::vector<RationalAngle> grid;
  for (long q = 2; q <= max_q; ++q)
    for (long p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) grid.emplace_back(p, q);
  for (const auto& a : distinguished_angles())
    if (std::find(grid.begin(), grid.end(), a) == grid.end()) grid.push_back(a);
  return grid;
}

}  // namespace knotcord
