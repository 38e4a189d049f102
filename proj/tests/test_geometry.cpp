#include "doctest.h"

#include "inscribe/error.hpp"
#include "inscribe/families.hpp"
#include "inscribe/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace inscribe;

namespace {

Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

Configuration from(const std::vector<std::pair<long, long>>& xy) {
  Configuration c;
  for (std::size_t i = 0; i < xy.size(); ++i) c.add("v" + std::to_string(i), pt(xy[i].first, xy[i].second));
  return c;
}

}  // namespace

TEST_CASE("rationals") {
  Rat r = parse_rat("-6/4");
  CHECK(r == Rat(-3, 2));
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(Rat(5)) == "5/1");
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rat("1/-2"), DomainError);
  CHECK_THROWS_AS(parse_rat("x"), DomainError);
  CHECK(dyadic(0.3, 4) == Rat(5, 16));
  auto cs = convergents(std::sqrt(2.0), 6);
  CHECK(cs[0] == 1);
  CHECK(cs[1] == Rat(3, 2));
  CHECK(cs[2] == Rat(7, 5));
}

TEST_CASE("orientation") {
  CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
  CHECK(orient(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coord(-50, 50);
  for (int i = 0; i < 500; ++i) {
    Point p = pt(coord(rng), coord(rng)), q = pt(coord(rng), coord(rng)), r = pt(coord(rng), coord(rng));
    int s = orient(p, q, r);
    CHECK(orient(q, r, p) == s);
    CHECK(orient(q, p, r) == -s);
    CHECK(orient(p, r, q) == -s);
  }
}

TEST_CASE("circle parameterization") {
  CHECK(circle_embed(CirclePoint(Rat(0))) == pt(1, 0));
  CHECK(circle_embed(CirclePoint(Rat(1))) == pt(0, 1));
  CHECK(circle_embed(CirclePoint::infinity()) == pt(-1, 0));
  CHECK(circle_embed(CirclePoint(Rat(-1))) == pt(0, -1));

  CirclePoint zero(Rat(0)), one(Rat(1)), inf = CirclePoint::infinity();
  CHECK(arc_ccw_between(zero, one, inf));
  CHECK_FALSE(arc_ccw_between(zero, CirclePoint(Rat(-1)), inf));
  CHECK(arc_ccw_between(zero, CirclePoint(Rat(1, 2)), one));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  auto random_point = [&] { return CirclePoint(Rat(num(rng), den(rng))); };  // canonicalized by the constructor
  for (int i = 0; i < 300; ++i) {
    CirclePoint a = random_point(), b = random_point(), c = random_point();
    Point p = circle_embed(a);
    CHECK(p.x * p.x + p.y * p.y == 1);
    if (a == b || b == c || a == c) continue;
    // ccw arc a -> b -> c holds exactly when the embedded triangle is ccw.
    CHECK(arc_ccw_between(a, b, c) == (orient(circle_embed(a), circle_embed(b), circle_embed(c)) > 0));
    CHECK(arc_ccw_between(a, b, c) == param_cyclic_order(a, b, c));
    for (Rat f : {Rat(1, 2), Rat(1, 7), Rat(6, 7)}) CHECK(arc_ccw_between(a, arc_interior_point(a, c, f), c));
  }
}

TEST_CASE("configuration labels and circle flags") {
  Configuration c;
  c.add("x", pt(0, 0));
  CHECK_THROWS_AS(c.add("x", pt(1, 1)), DomainError);
  CHECK_THROWS_AS(c.add("y", pt(1, 0), CirclePoint(Rat(1))), DomainError);
  c.add_on_circle("y", CirclePoint(Rat(1)));
  CHECK(c.at("y") == pt(0, 1));
  CHECK_THROWS_AS(c.index_of("z"), DomainError);
}

TEST_CASE("convex hull") {
  auto square = from({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
  CHECK(convex_hull(square) == std::vector<std::string>{"v0", "v1", "v2", "v3"});
  CHECK(interior_indices(square) == std::vector<std::size_t>{4});

  auto tri = from({{0, 0}, {4, 0}, {0, 3}});
  CHECK(convex_hull(tri).size() == 3);
  CHECK(in_general_position(tri));

  // A point inside a hull edge is not extreme.
  auto edge = from({{0, 0}, {2, 0}, {4, 0}, {2, 3}});
  CHECK(convex_hull(edge) == std::vector<std::string>{"v0", "v2", "v3"});
  CHECK_FALSE(in_general_position(edge));

  CHECK_THROWS_AS(convex_hull(from({{0, 0}, {1, 1}, {3, 3}})), DomainError);

  auto hull = convex_hull(make_pn(3));
  std::rotate(hull.begin(), std::find(hull.begin(), hull.end(), "a1"), hull.end());
  CHECK(hull ==
        std::vector<std::string>{"a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3"});
}

TEST_CASE("hull agrees with the brute-force extreme test") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coord(-30, 30);
  for (int trial = 0; trial < 60; ++trial) {
    Configuration c;
    for (int i = 0; i < 9; ++i) c.add("v" + std::to_string(i), pt(coord(rng), coord(rng)));
    if (!in_general_position(c)) continue;
    std::vector<bool> extreme(c.size(), true);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
          for (std::size_t d = 0; d < c.size(); ++d) {
            if (i == a || i == b || i == d || a >= b || b >= d) continue;
            int s = orient(c[a].p, c[b].p, c[d].p);
            if (orient(c[a].p, c[b].p, c[i].p) == s && orient(c[b].p, c[d].p, c[i].p) == s &&
                orient(c[d].p, c[a].p, c[i].p) == s)
              extreme[i] = false;
          }
    auto hull = convex_hull_indices(c);
    for (std::size_t i = 0; i < c.size(); ++i)
      CHECK((std::find(hull.begin(), hull.end(), i) != hull.end()) == extreme[i]);
    for (std::size_t k = 0; k < hull.size(); ++k)
      CHECK(orient(c[hull[k]].p, c[hull[(k + 1) % hull.size()]].p, c[hull[(k + 2) % hull.size()]].p) == 1);
  }
}

TEST_CASE("lines and half-planes") {
  auto x = intersect_lines(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0));
  REQUIRE(x);
  CHECK(*x == pt(1, 1));
  CHECK_FALSE(intersect_lines(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));

  // Unit square as four left half-planes.
  std::vector<HalfPlane> square{{pt(0, 0), pt(1, 0)}, {pt(1, 0), pt(1, 1)}, {pt(1, 1), pt(0, 1)}, {pt(0, 1), pt(0, 0)}};
  auto inside = interior_point(square);
  REQUIRE(inside);
  for (const auto& h : square) CHECK(orient(h.from, h.to, *inside) == 1);
  square.push_back({pt(2, 1), pt(2, 0)});  // x > 2
  CHECK_FALSE(interior_point(square));
}
