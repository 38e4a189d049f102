#pragma once

#include "inscribe/geometry.hpp"
#include "inscribe/quadratic.hpp"

#include <array>
#include <optional>
#include <vector>

namespace inscribe {

/// A circle parameter that may be a quadratic irrational: fixed points of
/// hyperbolic maps and their orbits live here.
struct QuadParam {
  bool infinite = false;
  QuadraticNumber t;

  static QuadParam at_infinity() { return {true, {}}; }
  static QuadParam from(const CirclePoint& c) {
    return c.is_infinite() ? at_infinity() : QuadParam{false, QuadraticNumber(c.t())};
  }
  std::optional<CirclePoint> rational() const;
  /// Angle in (-pi, pi].
  double angle() const;
  std::string str() const;

  friend bool operator==(const QuadParam& a, const QuadParam& b) {
    return a.infinite == b.infinite && (a.infinite || a.t == b.t);
  }
};

/// Strict counterclockwise cyclic order of three circle parameters.
bool cyclic_order(const QuadParam& a, const QuadParam& b, const QuadParam& c);

/// Fractional-linear map t -> (m00 t + m01)/(m10 t + m11) of the tangent
/// half-angle parameter, defined up to a nonzero scale.
class CircleMap {
 public:
  CircleMap() : m_{Rat(1), Rat(0), Rat(0), Rat(1)} {}
  CircleMap(Rat m00, Rat m01, Rat m10, Rat m11);

  static CircleMap identity() { return {}; }

  const Rat& m00() const { return m_[0]; }
  const Rat& m01() const { return m_[1]; }
  const Rat& m10() const { return m_[2]; }
  const Rat& m11() const { return m_[3]; }

  Rat det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Rat trace() const { return m_[0] + m_[3]; }
  /// True when the matrix is a scalar multiple of the identity.
  bool is_identity() const;

  CirclePoint apply(const CirclePoint& c) const;
  QuadParam apply(const QuadParam& c) const;

  /// this after `first`: (this ∘ first)(t) = this(first(t)).
  CircleMap after(const CircleMap& first) const;

  /// Equality in PGL(2, Q): matrices proportional.
  friend bool operator==(const CircleMap& a, const CircleMap& b);

 private:
  std::array<Rat, 4> m_;
};

/// Involution sending t to the parameter of the second intersection of the
/// line through p and circle_embed(t) with the unit circle.
/// Throws DomainError(NotInterior) unless x^2 + y^2 < 1.
CircleMap projection_map(const Point& p);

/// Composition in application order: compose({f1, f2, f3}) = f3 ∘ f2 ∘ f1.
CircleMap compose(const std::vector<CircleMap>& maps);

enum class MapKind { Identity, Elliptic, Parabolic, Hyperbolic };
const char* to_string(MapKind kind);

struct MapClass {
  MapKind kind = MapKind::Identity;
  std::vector<QuadParam> fixed_points;
  /// Derivative at the attracting fixed point (hyperbolic only); < 1.
  std::optional<QuadraticNumber> multiplier;
  /// Field of the fixed points; 1 when they are rational.
  BigInt field = 1;
};

/// Throws DomainError(Degenerate) when det == 0.
MapClass classify(const CircleMap& map);

/// Derivative of `map` at one of its fixed points (in the chart at infinity
/// for the fixed point at infinity).
QuadraticNumber multiplier_at(const CircleMap& map, const QuadParam& fixed_point);

struct PolygonSearch {
  /// Input indices in the counterclockwise order used for composing.
  std::vector<std::size_t> order;
  CircleMap f;
  MapClass map_class;
  /// Each polygon lists vertices x_1..x_n where x_k is the common vertex of
  /// the edges through crossings order[k-1] and order[k] (cyclically), so
  /// that edge [x_k, x_{k+1}] passes through crossing order[k].
  std::vector<std::vector<QuadParam>> polygons;
};

/// All inscribed n-gons having the k-th crossing point on the k-th edge.
/// Throws DomainError(NotInterior / NotConvexPosition / InvalidArgument).
PolygonSearch inscribed_polygons(const std::vector<Point>& crossings);

}  // namespace inscribe
