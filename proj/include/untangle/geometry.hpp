#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <utility>

#include "untangle/rational.hpp"

namespace untangle {

/// A point of the plane with exact rational coordinates.
///
/// A truncated double approximation of each coordinate is cached next to the
/// exact value; predicates use it as a filter and fall back to exact
/// arithmetic whenever the filter cannot decide.
class Point {
 public:
  Point() : Point(Rational(0), Rational(0)) {}
  Point(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
    x_.canonicalize();
    y_.canonicalize();
    ax_ = x_.get_d();
    ay_ = y_.get_d();
  }
  Point(long x, long y) : Point(Rational(x), Rational(y)) {}

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  double approx_x() const { return ax_; }
  double approx_y() const { return ay_; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.ax_ != b.ax_ || a.ay_ != b.ay_) return false;  // truncation is monotone
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  /// Lexicographic (x, then y) order.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.y_ < b.y_;
  }

  friend Point operator+(const Point& a, const Point& b) { return {a.x_ + b.x_, a.y_ + b.y_}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x_ - b.x_, a.y_ - b.y_}; }
  friend Point operator*(const Rational& s, const Point& p) { return {s * p.x_, s * p.y_}; }

  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x_ << ", " << p.y_ << ')';
  }

 private:
  Rational x_, y_;
  double ax_ = 0.0, ay_ = 0.0;
};

namespace detail {

inline int sign_of(const Rational& r) { return sgn(r); }

inline int orientation_exact(const Point& a, const Point& b, const Point& c) {
  const Rational det = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
  return sign_of(det);
}

}  // namespace detail

/// Sign of the signed area of triangle abc: +1 left turn, -1 right turn,
/// 0 collinear. Exact.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  const double m = std::max({std::fabs(a.approx_x()), std::fabs(a.approx_y()), std::fabs(b.approx_x()),
                             std::fabs(b.approx_y()), std::fabs(c.approx_x()), std::fabs(c.approx_y())});
  // Outside this range the error bound below may under- or overflow.
  if (m > 1e-100 && m < 1e100) {
    const double det = (b.approx_x() - a.approx_x()) * (c.approx_y() - a.approx_y()) -
                       (b.approx_y() - a.approx_y()) * (c.approx_x() - a.approx_x());
    // Inputs carry <= 1 ulp truncation error; 64 m^2 eps covers conversion
    // plus the five rounded operations with a wide margin.
    const double bound = 64.0 * m * m * std::numeric_limits<double>::epsilon();
    if (det > bound) return 1;
    if (det < -bound) return -1;
  }
  return detail::orientation_exact(a, b, c);
}

/// p lies on the closed segment ab (a, b, p collinear assumed or checked).
inline bool on_closed_segment(const Point& a, const Point& b, const Point& p) {
  if (orientation(a, b, p) != 0) return false;
  const auto& lo_x = std::min(a.x(), b.x());
  const auto& hi_x = std::max(a.x(), b.x());
  const auto& lo_y = std::min(a.y(), b.y());
  const auto& hi_y = std::max(a.y(), b.y());
  return lo_x <= p.x() && p.x() <= hi_x && lo_y <= p.y() && p.y() <= hi_y;
}

/// p lies on segment ab but is neither endpoint.
inline bool in_segment_interior(const Point& a, const Point& b, const Point& p) {
  return p != a && p != b && on_closed_segment(a, b, p);
}

/// Closed segments ab and cd share at least one point.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_closed_segment(a, b, c)) return true;
  if (o2 == 0 && on_closed_segment(a, b, d)) return true;
  if (o3 == 0 && on_closed_segment(c, d, a)) return true;
  if (o4 == 0 && on_closed_segment(c, d, b)) return true;
  return false;
}

/// Segments ov and ow that share the endpoint o overlap beyond o.
inline bool segments_overlap_from_shared(const Point& o, const Point& v, const Point& w) {
  if (orientation(o, v, w) != 0) return false;
  const Rational dot = (v.x() - o.x()) * (w.x() - o.x()) + (v.y() - o.y()) * (w.y() - o.y());
  return sgn(dot) > 0;
}

/// p lies strictly inside triangle abc (either orientation).
inline bool strictly_inside_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const int o = orientation(a, b, c);
  if (o == 0) return false;
  return orientation(a, b, p) == o && orientation(b, c, p) == o && orientation(c, a, p) == o;
}

/// p lies in the closed triangle abc (non-degenerate triangle assumed).
inline bool inside_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  const int o = orientation(a, b, c);
  if (o == 0) return on_closed_segment(a, b, p) || on_closed_segment(b, c, p) || on_closed_segment(a, c, p);
  return orientation(a, b, p) != -o && orientation(b, c, p) != -o && orientation(c, a, p) != -o;
}

}  // namespace untangle
