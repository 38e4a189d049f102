#include "doctest.h"

#include "inscribe/counting.hpp"
#include "inscribe/error.hpp"
#include "inscribe/families.hpp"
#include "inscribe/search.hpp"
#include "inscribe/staircase.hpp"

#include <cmath>
#include <numbers>

using namespace inscribe;

namespace {

Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

Configuration from(const std::vector<std::pair<long, long>>& xy) {
  Configuration c;
  for (std::size_t i = 0; i < xy.size(); ++i) c.add("v" + std::to_string(i), pt(xy[i].first, xy[i].second));
  return c;
}

FloatPoint free_point(double x, double y) { return {false, 0, x, y}; }

SearchBudget small_budget(std::uint64_t seed = 1) {
  SearchBudget b;
  b.restarts = 20;
  b.iterations = 2000;
  b.seed = seed;
  return b;
}

// Exact re-check of a witness.
void check_witness(const Configuration& w, const Chirotope& target, const std::vector<std::string>& on_circle) {
  CHECK(chirotope(w) == target);
  CHECK(in_general_position(w));
  for (const auto& label : on_circle) {
    const auto& p = w[w.index_of(label)];
    REQUIRE(p.circle);
    CHECK(circle_embed(*p.circle) == p.p);
  }
}

}  // namespace

TEST_CASE("violation energy") {
  auto tri = chirotope(from({{0, 0}, {1, 0}, {0, 1}}));
  std::vector<FloatPoint> good{free_point(0, 0), free_point(1, 0), free_point(0, 1)};
  CHECK(violation_energy(good, tri, 1e-7) == 0);
  std::vector<FloatPoint> flipped{free_point(0, 0), free_point(1, 0), free_point(0, -1)};
  CHECK(violation_energy(flipped, tri, 1e-7) > 0);
  std::vector<FloatPoint> on_circle{{true, 0, 0, 0}, {true, std::numbers::pi / 2, 0, 0}, {true, std::numbers::pi, 0, 0}};
  CHECK(violation_energy(on_circle, tri, 1e-7) == 0);
  CHECK_THROWS_AS(violation_energy({free_point(0, 0)}, tri, 1e-7), DomainError);
}

TEST_CASE("convex polygons are inscribed at once") {
  for (int n = 3; n <= 7; ++n) {
    Configuration c;
    for (int k = 0; k < n; ++k) {
      double a = 2 * std::numbers::pi * k / n;
      c.add("v" + std::to_string(k), {dyadic(std::cos(a), 10), dyadic(std::sin(a), 10)});
    }
    auto chi = chirotope(c);
    Verdict v = search_inscription(chi, c.labels(), small_budget());
    REQUIRE(found(v));
    const auto& w = std::get<InscribedExact>(v);
    CHECK(w.restart == 0);
    check_witness(w.witness, chi, c.labels());
  }
}

TEST_CASE("P_3 minus one point is found by search") {
  for (Removed r : {Removed::B1, Removed::A1, Removed::Dn}) {
    auto chi = chirotope(make_pn_minus(3, r));
    auto hull = convex_hull(make_pn_minus(3, r));
    Verdict v = search_inscription(chi, hull, small_budget());
    REQUIRE(found(v));
    check_witness(std::get<InscribedExact>(v).witness, chi, hull);
  }
}

TEST_CASE("search is deterministic for a fixed seed") {
  auto c = make_pn_minus(3, Removed::B1);
  auto chi = chirotope(c);
  auto hull = convex_hull(c);
  Verdict a = search_inscription(chi, hull, small_budget(7));
  Verdict b = search_inscription(chi, hull, small_budget(7));
  REQUIRE(found(a));
  REQUIRE(found(b));
  const auto& wa = std::get<InscribedExact>(a);
  const auto& wb = std::get<InscribedExact>(b);
  CHECK(wa.restart == wb.restart);
  for (std::size_t i = 0; i < wa.witness.size(); ++i) CHECK(wa.witness[i].p == wb.witness[i].p);

  // A miss is reproducible too.
  SearchBudget tiny = small_budget(3);
  tiny.restarts = 3;
  tiny.iterations = 300;
  Verdict m1 = search_inscription(chirotope(make_pn(3)), convex_hull(make_pn(3)), tiny);
  Verdict m2 = search_inscription(chirotope(make_pn(3)), convex_hull(make_pn(3)), tiny);
  REQUIRE_FALSE(found(m1));
  REQUIRE_FALSE(found(m2));
  CHECK(std::get<NotFound>(m1).best_energy == std::get<NotFound>(m2).best_energy);
  CHECK(std::get<NotFound>(m1).restarts_used == 3);
}

TEST_CASE("search input checks") {
  auto sq = from({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 2}});
  auto chi = chirotope(sq);
  auto code_of = [&](auto&& call) {
    try {
      call();
    } catch (const DomainError& e) {
      return e.code();
    }
    return ErrorCode::Parse;  // sentinel: nothing thrown
  };
  CHECK(code_of([&] { search_inscription(chi, {"v4"}, small_budget()); }) == ErrorCode::InvalidB);
  CHECK(code_of([&] { search_inscription(chi, {"zz"}, small_budget()); }) == ErrorCode::UnknownLabel);
  auto line = chirotope(from({{0, 0}, {1, 1}, {2, 2}, {0, 3}}));
  CHECK(code_of([&] { search_inscription(line, {}, small_budget()); }) == ErrorCode::NotSimple);
  SearchBudget bad;
  bad.restarts = 0;
  CHECK(code_of([&] { search_inscription(chi, {}, bad); }) == ErrorCode::InvalidArgument);
  // Three interior points forming a triangle around a fourth are not in convex position.
  auto nested = chirotope(from({{0, 0}, {40, 0}, {20, 40}, {15, 10}, {25, 10}, {19, 20}, {21, 13}}));
  CHECK(code_of([&] { search_interior_on_circle(nested, small_budget()); }) == ErrorCode::NotConvexInterior);
}

TEST_CASE("interior points on the circle") {
  auto one = chirotope(from({{0, 0}, {4, 0}, {0, 4}, {1, 1}}));
  Verdict v = search_interior_on_circle(one, small_budget());
  REQUIRE(found(v));
  check_witness(std::get<InscribedExact>(v).witness, one, {"v3"});

  // Quadrilateral with the two distinguished points inside, from a staircase pair.
  std::optional<Configuration> quad;
  for (int n1 = 0; n1 <= 4 && !quad; ++n1)
    for (const auto& pair : enumerate_staircase_pairs(n1, 4 - n1)) {
      Configuration c = inscribe_staircase(pair);
      if (convex_hull(c).size() == 4) {
        quad = c;
        break;
      }
    }
  REQUIRE(quad);
  auto chi = chirotope(*quad);
  Verdict w = search_interior_on_circle(chi, small_budget());
  REQUIRE(found(w));
  check_witness(std::get<InscribedExact>(w).witness, chi, {"L", "R"});
}
