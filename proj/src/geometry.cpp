#include "inscribe/geometry.hpp"

#include "inscribe/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace inscribe {

std::string CirclePoint::str() const { return infinite_ ? std::string("inf") : to_string(t_); }

void Configuration::add(std::string label, Point p, std::optional<CirclePoint> circle) {
  if (find(label)) throw DomainError(ErrorCode::InvalidArgument, "duplicate label '" + label + "'");
  if (circle && !(circle_embed(*circle) == p))
    throw DomainError(ErrorCode::InvalidArgument, "circle parameter of '" + label + "' does not match its coordinates");
  points_.push_back({std::move(label), std::move(p), std::move(circle)});
}

void Configuration::add_on_circle(std::string label, const CirclePoint& c) {
  add(std::move(label), circle_embed(c), c);
}

std::optional<std::size_t> Configuration::find(const std::string& label) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].label == label) return i;
  return std::nullopt;
}

std::size_t Configuration::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) throw DomainError(ErrorCode::UnknownLabel, "no point labeled '" + label + "'");
  return *i;
}

std::vector<std::string> Configuration::labels() const {
  std::vector<std::string> out;
  out.reserve(points_.size());
  for (const auto& lp : points_) out.push_back(lp.label);
  return out;
}

Configuration Configuration::without(const std::vector<std::string>& labels) const {
  std::unordered_set<std::string> drop(labels.begin(), labels.end());
  Configuration out;
  for (const auto& lp : points_)
    if (!drop.count(lp.label)) out.points_.push_back(lp);
  return out;
}

Configuration Configuration::translated(const Point& offset) const {
  Configuration out;
  for (const auto& lp : points_) out.points_.push_back({lp.label, lp.p + offset, std::nullopt});
  return out;
}

Configuration Configuration::scaled(const Rat& factor) const {
  Configuration out;
  for (const auto& lp : points_) out.points_.push_back({lp.label, factor * lp.p, std::nullopt});
  return out;
}

Rat orient_det(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

int orient(const Point& p, const Point& q, const Point& r) { return sgn(orient_det(p, q, r)); }

Point circle_embed(const CirclePoint& c) {
  if (c.is_infinite()) return {Rat(-1), Rat(0)};
  const Rat& t = c.t();
  Rat t2 = t * t;
  Rat den = 1 + t2;
  return {(1 - t2) / den, 2 * t / den};
}

bool arc_ccw_between(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
  return orient(circle_embed(a), circle_embed(b), circle_embed(c)) > 0;
}

namespace {

// -1, 0, +1 comparison on the projective line with infinity largest.
int compare_param(const CirclePoint& a, const CirclePoint& b) {
  if (a.is_infinite() || b.is_infinite()) return int(a.is_infinite()) - int(b.is_infinite());
  return cmp(a.t(), b.t()) < 0 ? -1 : (a.t() == b.t() ? 0 : 1);
}

Rat rotate_to_infinity(const Rat& m, const CirclePoint& x) {
  // t -> (m t + 1)/(m - t) sends m to infinity; infinity goes to -m.
  if (x.is_infinite()) return -m;
  return (m * x.t() + 1) / (m - x.t());
}

CirclePoint rotate_back(const Rat& m, const Rat& u) {
  Rat den = m + u;
  if (den == 0) return CirclePoint::infinity();
  return CirclePoint((u * m - 1) / den);
}

}  // namespace

bool param_cyclic_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
  int ab = compare_param(a, b), bc = compare_param(b, c), ca = compare_param(c, a);
  if (ab == 0 || bc == 0 || ca == 0) return false;
  return (ab < 0 && bc < 0) || (bc < 0 && ca < 0) || (ca < 0 && ab < 0);
}

CirclePoint arc_interior_point(const CirclePoint& from, const CirclePoint& to, const Rat& fraction) {
  if (from == to) throw DomainError(ErrorCode::InvalidArgument, "arc endpoints coincide");
  if (!from.is_infinite() && !to.is_infinite() && from.t() < to.t())
    return CirclePoint(from.t() + fraction * (to.t() - from.t()));
  // The arc passes through the pole; pick m on the complementary arc and
  // rotate it to infinity so the arc becomes a bounded interval.
  Rat m;
  if (from.is_infinite()) m = to.t() + 1;
  else if (to.is_infinite()) m = from.t() - 1;
  else m = (from.t() + to.t()) / 2;
  Rat u0 = rotate_to_infinity(m, from), u1 = rotate_to_infinity(m, to);
  return rotate_back(m, u0 + fraction * (u1 - u0));
}

std::vector<std::size_t> convex_hull_indices(const Configuration& config) {
  const std::size_t n = config.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto lex_less = [&](std::size_t a, std::size_t b) {
    const Point &p = config[a].p, &q = config[b].p;
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  };
  std::sort(idx.begin(), idx.end(), lex_less);
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return config[a].p == config[b].p; }),
            idx.end());
  if (idx.size() < 3) throw DomainError(ErrorCode::AllCollinear, "fewer than three distinct points");

  // Andrew's monotone chain, dropping collinear points.
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && orient(config[hull[k - 2]].p, config[hull[k - 1]].p, config[i].p) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, lower = k + 1; j-- > 0;) {
    std::size_t i = idx[j];
    while (k >= lower && orient(config[hull[k - 2]].p, config[hull[k - 1]].p, config[i].p) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DomainError(ErrorCode::AllCollinear, "all points are collinear");
  return hull;
}

std::vector<std::string> convex_hull(const Configuration& config) {
  std::vector<std::string> out;
  for (std::size_t i : convex_hull_indices(config)) out.push_back(config[i].label);
  return out;
}

std::vector<std::size_t> interior_indices(const Configuration& config) {
  auto hull = convex_hull_indices(config);
  std::vector<bool> extreme(config.size(), false);
  for (std::size_t i : hull) extreme[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < config.size(); ++i)
    if (!extreme[i]) out.push_back(i);
  return out;
}

bool in_general_position(const Configuration& config) {
  const std::size_t n = config.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient(config[i].p, config[j].p, config[k].p) == 0) return false;
  return true;
}

std::optional<Point> intersect_lines(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  Point d1 = p2 - p1, d2 = q2 - q1;
  Rat den = d1.x * d2.y - d1.y * d2.x;
  if (den == 0) return std::nullopt;
  Point w = q1 - p1;
  Rat s = (w.x * d2.y - w.y * d2.x) / den;
  return p1 + s * d1;
}

std::optional<Point> interior_point(const std::vector<HalfPlane>& planes) {
  // Vertices of the closed region; a bounded region with nonempty interior
  // has its vertex average strictly inside.
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      auto x = intersect_lines(planes[i].from, planes[i].to, planes[j].from, planes[j].to);
      if (!x) continue;
      bool inside = std::all_of(planes.begin(), planes.end(),
                                [&](const HalfPlane& h) { return orient(h.from, h.to, *x) >= 0; });
      if (inside && std::find(vertices.begin(), vertices.end(), *x) == vertices.end()) vertices.push_back(*x);
    }
  }
  if (vertices.size() < 3) return std::nullopt;
  Point sum{0, 0};
  for (const auto& v : vertices) sum = sum + v;
  Point c = Rat(1, static_cast<long>(vertices.size())) * sum;
  for (const auto& h : planes)
    if (orient(h.from, h.to, c) <= 0) return std::nullopt;
  return c;
}

}  // namespace inscribe
