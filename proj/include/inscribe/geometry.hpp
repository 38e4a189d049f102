#pragma once

#include "inscribe/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace inscribe {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rat& s, const Point& p) { return {s * p.x, s * p.y}; }

/// A point of the unit circle given by its tangent half-angle parameter
/// t = tan(theta/2). The parameter at infinity is the point (-1, 0).
/// Increasing t runs counterclockwise from (1,0) through (0,1) to (-1,0).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(Rat t) : t_(std::move(t)) { t_.canonicalize(); }
  static CirclePoint infinity() {
    CirclePoint c;
    c.infinite_ = true;
    return c;
  }

  bool is_infinite() const { return infinite_; }
  /// Only meaningful when !is_infinite().
  const Rat& t() const { return t_; }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.t_ == b.t_);
  }

  std::string str() const;  // "num/den" or "inf"

 private:
  bool infinite_ = false;
  Rat t_ = 0;
};

struct LabeledPoint {
  std::string label;
  Point p;
  std::optional<CirclePoint> circle;  // set when the point is constrained to the unit circle
};

/// Ordered list of uniquely labeled points.
class Configuration {
 public:
  Configuration() = default;

  /// Throws DomainError(InvalidArgument) on duplicate labels or a circle
  /// parameter that does not embed to `p`.
  void add(std::string label, Point p, std::optional<CirclePoint> circle = std::nullopt);
  void add_on_circle(std::string label, const CirclePoint& c);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const LabeledPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<LabeledPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws DomainError(UnknownLabel).
  std::size_t index_of(const std::string& label) const;
  const Point& at(const std::string& label) const { return points_[index_of(label)].p; }
  std::vector<std::string> labels() const;

  Configuration without(const std::vector<std::string>& labels) const;
  Configuration translated(const Point& offset) const;
  Configuration scaled(const Rat& factor) const;

 private:
  std::vector<LabeledPoint> points_;
};

/// Determinant of [p q r; 1 1 1], twice the signed area of the triangle.
Rat orient_det(const Point& p, const Point& q, const Point& r);
/// +1 counterclockwise, -1 clockwise, 0 collinear.
int orient(const Point& p, const Point& q, const Point& r);

/// ((1-t^2)/(1+t^2), 2t/(1+t^2)); infinity maps to (-1, 0).
Point circle_embed(const CirclePoint& c);

/// True iff b lies strictly on the counterclockwise arc from a to c.
bool arc_ccw_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

/// Same predicate computed from parameters alone (cyclic order on the
/// projective line); used as an independent check of arc_ccw_between.
bool param_cyclic_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c);

/// A rational point strictly inside the counterclockwise arc from `from` to
/// `to` (from != to). `fraction` in (0,1) moves from `from` towards `to`
/// in a rotated parameter chart where the arc contains no pole.
CirclePoint arc_interior_point(const CirclePoint& from, const CirclePoint& to, const Rat& fraction);

/// Indices of extreme points, counterclockwise, starting at the
/// lexicographically smallest one. Points inside hull edges are not extreme.
/// Throws DomainError(AllCollinear).
std::vector<std::size_t> convex_hull_indices(const Configuration& config);
std::vector<std::string> convex_hull(const Configuration& config);
/// Indices of non-extreme points, in configuration order.
std::vector<std::size_t> interior_indices(const Configuration& config);

bool in_general_position(const Configuration& config);

/// Intersection of line(p1,p2) with line(q1,q2); nullopt when parallel.
std::optional<Point> intersect_lines(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

/// Directed line; the feasible side is the open left half-plane.
struct HalfPlane {
  Point from;
  Point to;
};

/// A rational point in the interior of a bounded intersection of open
/// half-planes (the vertex average), or nullopt if it has empty interior.
std::optional<Point> interior_point(const std::vector<HalfPlane>& planes);

inline Point midpoint(const Point& a, const Point& b) { return Rat(1, 2) * (a + b); }

}  // namespace inscribe
