#include "inscribe/mobius.hpp"

#include "inscribe/error.hpp"

#include <cmath>
#include <numbers>

namespace inscribe {

std::optional<CirclePoint> QuadParam::rational() const {
  if (infinite) return CirclePoint::infinity();
  if (!t.is_rational()) return std::nullopt;
  return CirclePoint(t.a());
}

double QuadParam::angle() const {
  return infinite ? std::numbers::pi : 2.0 * std::atan(t.to_double());
}

std::string QuadParam::str() const { return infinite ? std::string("inf") : t.str(); }

namespace {

// Projective line order with infinity largest.
int compare(const QuadParam& a, const QuadParam& b) {
  if (a.infinite || b.infinite) return int(a.infinite) - int(b.infinite);
  return (a.t - b.t).sign();
}

}  // namespace

bool cyclic_order(const QuadParam& a, const QuadParam& b, const QuadParam& c) {
  int ab = compare(a, b), bc = compare(b, c), ca = compare(c, a);
  if (ab == 0 || bc == 0 || ca == 0) return false;
  return (ab < 0 && bc < 0) || (bc < 0 && ca < 0) || (ca < 0 && ab < 0);
}

CircleMap::CircleMap(Rat m00, Rat m01, Rat m10, Rat m11)
    : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {}

bool CircleMap::is_identity() const { return m_[1] == 0 && m_[2] == 0 && m_[0] == m_[3] && m_[0] != 0; }

CirclePoint CircleMap::apply(const CirclePoint& c) const {
  if (c.is_infinite()) {
    if (m_[2] == 0) return CirclePoint::infinity();
    return CirclePoint(m_[0] / m_[2]);
  }
  Rat den = m_[2] * c.t() + m_[3];
  if (den == 0) return CirclePoint::infinity();
  return CirclePoint((m_[0] * c.t() + m_[1]) / den);
}

QuadParam CircleMap::apply(const QuadParam& c) const {
  if (c.infinite) {
    if (m_[2] == 0) return QuadParam::at_infinity();
    return {false, QuadraticNumber(m_[0] / m_[2])};
  }
  QuadraticNumber den = QuadraticNumber(m_[2]) * c.t + QuadraticNumber(m_[3]);
  if (den.sign() == 0) return QuadParam::at_infinity();
  QuadraticNumber num = QuadraticNumber(m_[0]) * c.t + QuadraticNumber(m_[1]);
  return {false, num / den};
}

CircleMap CircleMap::after(const CircleMap& first) const {
  const auto& a = m_;
  const auto& b = first.m_;
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

bool operator==(const CircleMap& a, const CircleMap& b) {
  // Proportional iff every 2x2 minor of the stacked entries vanishes.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (a.m_[i] * b.m_[j] != a.m_[j] * b.m_[i]) return false;
  return true;
}

CircleMap projection_map(const Point& p) {
  if (p.x * p.x + p.y * p.y >= 1)
    throw DomainError(ErrorCode::NotInterior, "projection point must lie strictly inside the unit circle");
  // The chord through z(t) and z(t') is (1 - t t') X + (t + t') Y = 1 + t t';
  // it contains p iff -(1+x) t t' + y (t + t') + (x - 1) = 0.
  return {p.y, p.x - 1, p.x + 1, -p.y};
}

CircleMap compose(const std::vector<CircleMap>& maps) {
  if (maps.empty()) throw DomainError(ErrorCode::InvalidArgument, "compose needs at least one map");
  CircleMap out = maps.front();
  for (std::size_t i = 1; i < maps.size(); ++i) out = maps[i].after(out);
  return out;
}

const char* to_string(MapKind kind) {
  switch (kind) {
    case MapKind::Identity: return "identity";
    case MapKind::Elliptic: return "elliptic";
    case MapKind::Parabolic: return "parabolic";
    case MapKind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

QuadraticNumber multiplier_at(const CircleMap& map, const QuadParam& fixed_point) {
  if (fixed_point.infinite) {
    if (map.m10() != 0) throw DomainError(ErrorCode::InvalidArgument, "infinity is not a fixed point");
    return QuadraticNumber(map.m11() / map.m00());
  }
  QuadraticNumber lambda = QuadraticNumber(map.m10()) * fixed_point.t + QuadraticNumber(map.m11());
  return QuadraticNumber(map.det()) / (lambda * lambda);
}

MapClass classify(const CircleMap& map) {
  Rat det = map.det();
  if (det == 0) throw DomainError(ErrorCode::Degenerate, "singular circle map");
  MapClass out;
  if (map.is_identity()) return out;

  Rat trace = map.trace();
  Rat disc = trace * trace - 4 * det;
  const Rat diff = map.m00() - map.m11();
  if (disc < 0) {
    out.kind = MapKind::Elliptic;
    return out;
  }
  if (disc == 0) {
    out.kind = MapKind::Parabolic;
    out.fixed_points.push_back(map.m10() == 0 ? QuadParam::at_infinity()
                                              : QuadParam{false, QuadraticNumber(diff / (2 * map.m10()))});
    return out;
  }

  out.kind = MapKind::Hyperbolic;
  if (map.m10() == 0) {
    out.fixed_points.push_back(QuadParam::at_infinity());
    out.fixed_points.push_back({false, QuadraticNumber(map.m01() / (map.m11() - map.m00()))});
  } else {
    // m10 t^2 + (m11 - m00) t - m01 = 0
    auto [s, d] = split_sqrt(disc);
    out.field = d;
    Rat centre = diff / (2 * map.m10());
    Rat half = s / (2 * map.m10());
    out.fixed_points.push_back({false, QuadraticNumber(centre, -half, d)});
    out.fixed_points.push_back({false, QuadraticNumber(centre, half, d)});
  }
  for (const auto& x : out.fixed_points) {
    QuadraticNumber r = multiplier_at(map, x);
    QuadraticNumber mag = r.sign() < 0 ? -r : r;
    if (mag < QuadraticNumber(Rat(1))) out.multiplier = r;
  }
  return out;
}

PolygonSearch inscribed_polygons(const std::vector<Point>& crossings) {
  const std::size_t n = crossings.size();
  if (n < 3) throw DomainError(ErrorCode::InvalidArgument, "need at least three crossing points");
  Configuration config;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = crossings[i];
    if (p.x * p.x + p.y * p.y >= 1)
      throw DomainError(ErrorCode::NotInterior, "crossing " + std::to_string(i) + " is not inside the circle");
    config.add(std::to_string(i), p);
  }
  std::vector<std::size_t> hull;
  try {
    hull = convex_hull_indices(config);
  } catch (const DomainError&) {
    throw DomainError(ErrorCode::NotConvexPosition, "crossing points are collinear");
  }
  if (hull.size() != n) throw DomainError(ErrorCode::NotConvexPosition, "crossing points are not in convex position");

  PolygonSearch out;
  out.order = hull;
  std::vector<CircleMap> maps;
  for (std::size_t k : hull) maps.push_back(projection_map(crossings[k]));
  out.f = compose(maps);
  out.map_class = classify(out.f);

  // The identity would close every orbit; it yields no isolated polygon.
  for (const auto& x : out.map_class.fixed_points) {
    std::vector<QuadParam> orbit{x};
    for (std::size_t k = 0; k + 1 < n; ++k) orbit.push_back(maps[k].apply(orbit.back()));
    if (!(maps[n - 1].apply(orbit.back()) == x)) continue;
    bool convex = true;
    for (std::size_t i = 1; i + 1 < n && convex; ++i) convex = cyclic_order(orbit[0], orbit[i], orbit[i + 1]);
    if (convex) out.polygons.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace inscribe
