#include "inscribe/families.hpp"

#include "inscribe/error.hpp"
#include "inscribe/mobius.hpp"
#include "inscribe/order_type.hpp"

#include <cmath>
#include <numbers>

namespace inscribe {

namespace {

Rat approx(double x, double tol) {
  auto cs = convergents(x, 60);
  for (const auto& r : cs)
    if (std::abs(r.get_d() - x) < tol) return r;
  return cs.back();
}

double length(const Point& v) { return std::hypot(v.x.get_d(), v.y.get_d()); }

Point unit_approx(const Point& v) {
  Rat inv = approx(1.0 / length(v), 1e-9);
  return inv * v;
}

Point line_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2, ErrorCode code) {
  auto x = intersect_lines(p1, p2, q1, q2);
  if (!x) throw DomainError(code, "parallel lines");
  return *x;
}

Point centroid(const Point& a, const Point& b, const Point& c) { return Rat(1, 3) * (a + b + c); }

bool strictly_inside(const Point& x, const Point& a, const Point& b, const Point& c) {
  int s = orient(a, b, c);
  return s != 0 && orient(a, b, x) == s && orient(b, c, x) == s && orient(c, a, x) == s;
}

// The triangle cut out by three lines given by point pairs.
bool inside_line_triangle(const Point& x, const std::array<std::array<Point, 2>, 3>& lines) {
  std::array<Point, 3> v;
  for (int i = 0; i < 3; ++i) {
    const auto& l1 = lines[i];
    const auto& l2 = lines[(i + 1) % 3];
    auto p = intersect_lines(l1[0], l1[1], l2[0], l2[1]);
    if (!p) return false;
    v[i] = *p;
  }
  return strictly_inside(x, v[0], v[1], v[2]);
}

// Circle points a_k, c_k near the even 2n-gon, plus the lines L_k and the
// points b_k of P_n.
struct Skeleton {
  int n = 0;
  std::vector<CirclePoint> a, c;
  std::vector<Point> ap, cp, bp, cross;
  std::vector<std::array<Point, 2>> lines;  // L_k as (point, point + direction)
};

CirclePoint even_point(double angle) { return CirclePoint(approx(std::tan(angle / 2), 1e-7)); }

Skeleton circle_points(int n) {
  if (n < 3) throw DomainError(ErrorCode::InvalidArgument, "P_n needs n >= 3");
  Skeleton s;
  s.n = n;
  const double pi = std::numbers::pi;
  for (int k = 0; k < n; ++k) {
    s.a.push_back(even_point(-pi / (2 * n) + 2 * pi * k / n));
    s.c.push_back(even_point(pi / (2 * n) + 2 * pi * k / n));
    s.ap.push_back(circle_embed(s.a.back()));
    s.cp.push_back(circle_embed(s.c.back()));
  }
  for (int k = 0; k < n; ++k) {
    int k1 = (k + 1) % n;
    s.cross.push_back(line_cross(s.ap[k], s.ap[k1], s.cp[k], s.cp[k1], ErrorCode::Degenerate));
  }
  return s;
}

Skeleton pn_skeleton(int n, const std::optional<Rat>& epsilon) {
  Skeleton s = circle_points(n);
  for (int k = 0; k < n; ++k) {
    int k1 = (k + 1) % n;
    Point w = unit_approx(s.ap[k1] - s.ap[k]) + unit_approx(s.cp[k1] - s.cp[k]);
    Point right = unit_approx(Point{w.y, -w.x});
    Rat eps;
    if (epsilon) {
      eps = *epsilon;
    } else {
      // Room along `right` before the line reaches c_k or a_{k+1}.
      double room = 1e9;
      for (const Point& q : {s.cp[k], s.ap[k1]}) {
        Point d = q - s.cross[k];
        room = std::min(room, Rat(d.x * right.x + d.y * right.y).get_d());
      }
      eps = approx(room / 4, room / 100);
    }
    Point base = s.cross[k] + eps * right;
    s.lines.push_back({base, base + w});
  }
  for (int k = 0; k < n; ++k) {
    const auto& l = s.lines[k];
    const auto& prev = s.lines[(k + n - 1) % n];
    s.bp.push_back(line_cross(l[0], l[1], prev[0], prev[1], ErrorCode::EpsilonTooLarge));
  }
  return s;
}

std::string label(char kind, int k) { return std::string(1, kind) + std::to_string(k + 1); }

// Hull must be exactly a_1, b_1, c_1, ..., a_n, b_n, c_n counterclockwise.
bool hull_is_abc(const Configuration& config, int n) {
  std::vector<std::string> expected;
  for (int k = 0; k < n; ++k)
    for (char kind : {'a', 'b', 'c'}) expected.push_back(label(kind, k));
  auto hull = convex_hull(config);
  if (hull.size() != expected.size()) return false;
  auto start = std::find(hull.begin(), hull.end(), expected.front());
  if (start == hull.end()) return false;
  std::rotate(hull.begin(), start, hull.end());
  return hull == expected;
}

Configuration assemble(const Skeleton& s, const std::vector<Point>& d) {
  Configuration config;
  for (int k = 0; k < s.n; ++k) {
    config.add(label('a', k), s.ap[k], s.a[k]);
    config.add(label('b', k), s.bp[k]);
    config.add(label('c', k), s.cp[k], s.c[k]);
  }
  for (int k = 0; k < s.n; ++k) config.add(label('d', k), d[k]);
  return config;
}

// Properties (S) and (L) plus the hull shape.
bool pn_properties_hold(const Configuration& config, int n) {
  if (!hull_is_abc(config, n) || !in_general_position(config)) return false;
  for (int k = 0; k < n; ++k) {
    int prev = (k + n - 1) % n, next = (k + 1) % n;
    for (char kind : {'a', 'b', 'c'})
      if (orient(config.at(label(kind, prev)), config.at(label(kind, k)), config.at(label(kind, next))) <= 0)
        return false;
    if (orient(config.at(label('b', k)), config.at(label('b', next)), config.at(label('d', k))) <= 0) return false;
  }
  return true;
}

}  // namespace

Configuration make_pn(const PnParams& params) {
  Skeleton s = pn_skeleton(params.n, params.epsilon);
  const int n = s.n;
  std::vector<Point> d;
  for (int k = 0; k < n; ++k) {
    int k1 = (k + 1) % n;
    const auto& l = s.lines[k];
    // c_k and a_{k+1} stay right of L_k.
    if (orient(l[0], l[1], s.cp[k]) >= 0 || orient(l[0], l[1], s.ap[k1]) >= 0)
      throw DomainError(ErrorCode::EpsilonTooLarge, "L_" + std::to_string(k + 1) + " passes beyond c_k or a_k+1");
    if (orient(l[0], l[1], s.cross[k]) <= 0)
      throw DomainError(ErrorCode::EpsilonTooLarge, "L_" + std::to_string(k + 1) + " is not offset to the right");
    Point x = line_cross(l[0], l[1], s.ap[k], s.ap[k1], ErrorCode::EpsilonTooLarge);
    Point y = line_cross(l[0], l[1], s.cp[k], s.cp[k1], ErrorCode::EpsilonTooLarge);
    d.push_back(centroid(s.cross[k], x, y));
  }
  Configuration config = assemble(s, d);
  if (!pn_properties_hold(config, n))
    throw DomainError(ErrorCode::EpsilonTooLarge, "post-check of the P_n construction failed");
  return config;
}

int sign_triple(const std::vector<int>& sigma, int k) {
  const int n = int(sigma.size());
  if (n < 3) throw DomainError(ErrorCode::InvalidArgument, "sign_triple needs n >= 3");
  int v[3];
  for (int i = 0; i < 3; ++i) v[i] = sigma[((k + i) % n + n) % n];
  int inversions = (v[0] > v[1]) + (v[0] > v[2]) + (v[1] > v[2]);
  return inversions % 2 ? -1 : 1;
}

Configuration make_star(const StarParams& params) {
  const int n = int(params.sigma.size());
  if (n < 3) throw DomainError(ErrorCode::InvalidArgument, "star configuration needs n >= 3");
  std::vector<bool> seen(n + 1, false);
  for (int v : params.sigma) {
    if (v < 1 || v > n || seen[v]) throw DomainError(ErrorCode::InvalidArgument, "sigma is not a permutation");
    seen[v] = true;
  }
  for (int k = 0; k < n; ++k)
    if (sign_triple(params.sigma, k) != 1)
      throw DomainError(ErrorCode::SignConditionViolated, "consecutive triple " + std::to_string(k + 1) + " is odd");

  Skeleton s = pn_skeleton(n, params.epsilon);
  std::vector<Point> d(n);
  for (int k = 0; k < n; ++k) {
    int i = params.sigma[k] - 1, j = params.sigma[(k + 1) % n] - 1;
    auto x = intersect_lines(s.ap[i], s.ap[j], s.cp[i], s.cp[j]);
    auto y = intersect_lines(s.ap[i], s.ap[j], s.bp[i], s.bp[j]);
    auto z = intersect_lines(s.cp[i], s.cp[j], s.bp[i], s.bp[j]);
    if (!x || !y || !z || orient(*x, *y, *z) == 0)
      throw DomainError(ErrorCode::EmptyTriangle, "degenerate triangle for d_" + std::to_string(i + 1));
    Point g = centroid(*x, *y, *z);
    if (orient(s.bp[i], s.bp[j], g) <= 0)
      throw DomainError(ErrorCode::EmptyTriangle, "triangle for d_" + std::to_string(i + 1) + " is right of b-line");
    d[i] = g;
  }
  Configuration config = assemble(s, d);
  if (!hull_is_abc(config, n) || !in_general_position(config))
    throw DomainError(ErrorCode::EmptyTriangle, "star points leave the required convex position");
  return config;
}

std::array<Point, 3> pascal_crossings(const std::array<Point, 6>& p) {
  auto cross = [&](int i, int j, int k, int l) {
    return line_cross(p[i - 1], p[j - 1], p[k - 1], p[l - 1], ErrorCode::ParallelLines);
  };
  return {cross(1, 5, 2, 4), cross(1, 6, 3, 4), cross(2, 6, 3, 5)};
}

bool pascal_collinear(const std::array<CirclePoint, 6>& hexagon) {
  std::array<Point, 6> p;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < i; ++j)
      if (hexagon[i] == hexagon[j]) throw DomainError(ErrorCode::InvalidArgument, "hexagon points must be distinct");
    p[i] = circle_embed(hexagon[i]);
  }
  auto c = pascal_crossings(p);
  return orient(c[0], c[1], c[2]) == 0;
}

Configuration make_non_pascal() {
  // Hexagon in ccw order p1 p2 p3 p6 p5 p4, slightly off a circle. Each q_i
  // sits just beside the crossing c_i, in the quadrant of its two lines that
  // an inscribed hexagon would force to one fixed side of the Pascal line.
  // Moving the hexagon onto the circle keeps every triple except (q1,q2,q3).
  Configuration config;
  const std::array<std::array<long, 2>, 9> xy = {
      {{97, 26}, {30, 111}, {-64, 77}, {57, -82}, {-42, -91}, {-84, -15}, {48, -15}, {-7, 2}, {-56, 16}}};
  for (int i = 0; i < 9; ++i)
    config.add((i < 6 ? "p" : "q") + std::to_string(i < 6 ? i + 1 : i - 5), {Rat(xy[i][0]), Rat(xy[i][1])});

  std::array<Point, 6> p;
  for (int i = 0; i < 6; ++i) p[i] = config[i].p;
  const auto c = pascal_crossings(p);
  bool ok = in_general_position(config) && convex_hull(config).size() == 6 &&
            orient(config.at("q1"), config.at("q2"), config.at("q3")) == 1 && orient(c[0], c[1], c[2]) == 1;
  if (!ok) throw DomainError(ErrorCode::ConstructionFailed, "non-Pascal fixture failed its checks");
  return config;
}

const char* to_string(Removed r) {
  switch (r) {
    case Removed::A1: return "a1";
    case Removed::B1: return "b1";
    case Removed::Dn: return "dn";
  }
  return "?";
}

namespace {

// b_k on arc A_k just clockwise of f_{k-1}(b_{k-1}).
std::vector<CirclePoint> chain_b(const Skeleton& s, const std::vector<CircleMap>& f, const CirclePoint& b1, int count,
                                 const Rat& back) {
  std::vector<CirclePoint> b{b1};
  for (int k = 1; k < count; ++k) {
    CirclePoint image = f[(k - 1) % s.n].apply(b.back());
    const CirclePoint& ak = s.a[k % s.n];
    if (!arc_ccw_between(ak, image, s.c[k % s.n])) return {};
    b.push_back(arc_interior_point(ak, image, 1 - back));
  }
  return b;
}

std::optional<Configuration> try_minus(const Skeleton& s, Removed removed, const Rat& b1_fraction, const Rat& back) {
  const int n = s.n;
  std::vector<CircleMap> f;
  for (const auto& p : s.cross) f.push_back(projection_map(p));
  CirclePoint b1 = arc_interior_point(s.a[0], s.c[0], b1_fraction);
  const bool drop_b1 = removed == Removed::B1;
  auto b = chain_b(s, f, b1, drop_b1 ? n + 1 : n, back);
  if (b.empty()) return std::nullopt;
  std::vector<Point> bp;
  for (const auto& x : b) bp.push_back(circle_embed(x));

  std::vector<Point> d(n);
  const int regular = drop_b1 ? n : n - 1;
  for (int k = 0; k < regular; ++k) {
    int k1 = (k + 1) % n;
    auto x = interior_point({{bp[k], bp[k + 1]}, {s.ap[k1], s.ap[k]}, {s.cp[k1], s.cp[k]}});
    if (!x) return std::nullopt;
    d[k] = *x;
  }
  if (!drop_b1) {
    // Crossing of a_n b_1 with a_1 a_2 must lie right of c_n -> c_1.
    auto x = intersect_lines(s.ap[n - 1], bp[0], s.ap[0], s.ap[1]);
    if (!x || orient(s.cp[n - 1], s.cp[0], *x) >= 0) return std::nullopt;
    auto dn = interior_point({{bp[n - 1], bp[0]}, {s.ap[0], s.ap[1]}, {bp[0], s.ap[n - 1]}, {s.cp[0], s.cp[n - 1]}});
    if (!dn) return std::nullopt;
    d[n - 1] = *dn;
  }

  Configuration config;
  for (int k = 0; k < n; ++k) {
    if (!(removed == Removed::A1 && k == 0)) config.add(label('a', k), s.ap[k], s.a[k]);
    if (!(drop_b1 && k == 0)) config.add(label('b', k), bp[k], b[k]);
    config.add(label('c', k), s.cp[k], s.c[k]);
  }
  for (int k = 0; k < n; ++k)
    if (!(removed == Removed::Dn && k == n - 1)) config.add(label('d', k), d[k]);
  return config;
}

}  // namespace

Configuration make_pn_minus(int n, Removed removed) {
  const Skeleton s = circle_points(n);
  const std::string gone = removed == Removed::A1 ? "a1" : removed == Removed::B1 ? "b1" : label('d', n - 1);
  const Configuration target = make_pn(n).without({gone});
  const CanonicalCode want = canonical_form(chirotope(target));

  std::vector<Rat> b1_fractions;
  if (removed == Removed::B1) b1_fractions = {Rat(1, 2), Rat(1, 4), Rat(3, 4)};
  else
    for (int e = 2; e <= 12; ++e) b1_fractions.push_back(Rat(1, 1 << e));
  for (const Rat& b1f : b1_fractions)
    for (int e = 2; e <= 12; ++e) {
      auto config = try_minus(s, removed, b1f, Rat(1, 1 << e));
      if (!config || !in_general_position(*config)) continue;
      bool flagged = true;
      for (std::size_t i : convex_hull_indices(*config)) flagged = flagged && (*config)[i].circle.has_value();
      if (!flagged) continue;
      if (canonical_form(chirotope(*config)) == want) return *config;
    }
  throw DomainError(ErrorCode::ConstructionFailed, std::string("no inscribed realization of P_n minus ") + to_string(removed));
}

bool gadget_memberships_hold(const Point& A, const Point& B, const Point& C, const Point& a, const Point& b,
                             const Point& c) {
  return inside_line_triangle(C, {{{A, b}, {B, a}, {A, B}}}) && inside_line_triangle(A, {{{B, c}, {C, b}, {B, C}}}) &&
         inside_line_triangle(B, {{{C, a}, {A, c}, {C, A}}});
}

Configuration make_interior_circle_gadget() {
  Configuration q;
  q.add("p1", {Rat(-10), Rat(-6)});
  q.add("p2", {Rat(10), Rat(-6)});
  q.add("p3", {Rat(1), Rat(12)});
  q.add("A", {Rat(-2), Rat(-1)});
  q.add("B", {Rat(2), Rat(-1)});
  q.add("C", {Rat(0), Rat(2)});
  q.add("a", {Rat(13, 10), Rat(7, 10)});
  q.add("b", {Rat(-6, 5), Rat(3, 4)});
  q.add("c", {Rat(1, 10), Rat(-13, 10)});
  if (!gadget_memberships_hold(q.at("A"), q.at("B"), q.at("C"), q.at("a"), q.at("b"), q.at("c")) ||
      !in_general_position(q))
    throw DomainError(ErrorCode::ConstructionFailed, "gadget memberships violated");
  return q;
}

}  // namespace inscribe
