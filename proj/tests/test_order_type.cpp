#include "doctest.h"

#include "inscribe/error.hpp"
#include "inscribe/families.hpp"
#include "inscribe/order_type.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace inscribe;

namespace {

Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

Configuration from(const std::vector<std::pair<long, long>>& xy) {
  Configuration c;
  for (std::size_t i = 0; i < xy.size(); ++i) c.add("v" + std::to_string(i), pt(xy[i].first, xy[i].second));
  return c;
}

// Same points listed in another order.
Configuration permuted(const Configuration& c, const std::vector<std::size_t>& perm) {
  Configuration out;
  for (std::size_t i : perm) out.add(c[i].label, c[i].p);
  return out;
}

// Exact rotation with cos = (1-s^2)/(1+s^2), sin = 2s/(1+s^2).
Configuration rotated(const Configuration& c, const Rat& s) {
  Rat cs = (1 - s * s) / (1 + s * s), sn = 2 * s / (1 + s * s);
  Configuration out;
  for (const auto& p : c) out.add(p.label, {cs * p.p.x - sn * p.p.y, sn * p.p.x + cs * p.p.y});
  return out;
}

Configuration mirrored(const Configuration& c) {
  Configuration out;
  for (const auto& p : c) out.add(p.label, {-p.p.x, p.p.y});
  return out;
}

}  // namespace

TEST_CASE("chirotope of small sets") {
  auto ccw = chirotope(from({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(ccw.sign_string() == "+");
  auto cw = chirotope(from({{0, 0}, {0, 1}, {1, 0}}));
  CHECK(cw.sign_string() == "-");
  CHECK(cw == ccw.mirrored());
  CHECK(triple_count(9) == 84);

  auto sq = chirotope(from({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 2}}));
  CHECK(sq.is_simple());
  CHECK(sq.extreme_indices() == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(sq.interior_indices() == std::vector<std::size_t>{4});
  CHECK(sq.sign(0, 1, 2) == 1);
  CHECK(sq.sign(1, 0, 2) == -1);
  CHECK(sq.sign(2, 0, 1) == 1);
  CHECK(sq.restricted({2, 1, 0}).sign_string() == "-");

  Chirotope rebuilt(sq.labels(), sq.lex_signs());
  CHECK(rebuilt == sq);

  CHECK_FALSE(chirotope(from({{0, 0}, {1, 1}, {2, 2}, {0, 3}})).is_simple());
}

TEST_CASE("non-Pascal interior triple is positive") {
  Configuration np = make_non_pascal();
  auto chi = chirotope(np);
  CHECK(chi.sign(np.index_of("q1"), np.index_of("q2"), np.index_of("q3")) == 1);
}

TEST_CASE("canonical form") {
  auto quad1 = from({{0, 0}, {3, 0}, {3, 2}, {0, 2}});
  auto quad2 = from({{0, 0}, {5, 1}, {4, 7}, {-1, 3}});
  CHECK(canonical_form(chirotope(quad1)) == canonical_form(chirotope(quad2)));

  auto pent = from({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}});
  auto quad_pt = from({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 2}});
  CHECK_FALSE(canonical_form(chirotope(pent)) == canonical_form(chirotope(quad_pt)));

  CHECK_THROWS_AS(canonical_form(chirotope(from({{0, 0}, {1, 1}, {2, 2}}))), DomainError);

  Configuration p3 = make_pn(3);
  // 97/56 is close to tan(60 degrees): a rational rotation by about 120 degrees.
  CHECK(same_order_type(p3, rotated(p3, Rat(97, 56))));
  CHECK(same_order_type(p3, p3));
  CHECK(same_order_type(p3, p3.translated(pt(7, -3))));
  CHECK(same_order_type(p3, p3.scaled(Rat(5, 3))));
  CHECK(canonical_form(chirotope(p3)).hex() == canonical_form(chirotope(p3)).hex());
}

TEST_CASE("canonical form ignores listing order") {
  std::mt19937_64 rng(17);
  Configuration configs[] = {make_pn(3), make_non_pascal(), make_interior_circle_gadget()};
  for (const auto& c : configs) {
    const auto code = canonical_form(chirotope(c));
    std::vector<std::size_t> perm(c.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(chirotope(permuted(c, perm))) == code);
    }
  }
}

TEST_CASE("mirror images") {
  Configuration np = make_non_pascal();
  auto chi = chirotope(np);
  auto mirror = chirotope(mirrored(np));
  CHECK(mirror == chi.mirrored());
  CHECK(canonical_form_unoriented(chi) == canonical_form_unoriented(mirror));
  // The fixture is chiral: its mirror image is a different oriented order type.
  CHECK(canonical_form(chi) != canonical_form(mirror));
  CHECK_FALSE(oracle::isomorphic(chi, mirror, false));
  CHECK(oracle::isomorphic(chi, mirror, true));
}

TEST_CASE("moving one point between cells agrees with the bijection oracle") {
  Configuration p3 = make_pn(3);
  const std::size_t d1 = p3.index_of("d1");
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> jitter(-0.4, 0.4);
  const double x0 = p3[d1].p.x.get_d(), y0 = p3[d1].p.y.get_d();
  int same = 0, differ = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Configuration moved;
    for (std::size_t i = 0; i < p3.size(); ++i)
      moved.add(p3[i].label, i == d1 ? Point{dyadic(x0 + jitter(rng), 12), dyadic(y0 + jitter(rng), 12)} : p3[i].p);
    if (!in_general_position(moved)) continue;
    bool fast = same_order_type(p3, moved);
    CHECK(fast == oracle::isomorphic(chirotope(p3), chirotope(moved)));
    (fast ? same : differ) += 1;
  }
  CHECK(same > 0);
  CHECK(differ > 0);
}

TEST_CASE("sub-order containment") {
  auto pent = from({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}});
  auto tri = chirotope(from({{0, 0}, {1, 0}, {0, 1}}));
  auto hit = contains_suborder(pent, tri);
  REQUIRE(hit);
  CHECK(chirotope(pent).sign((*hit)[0], (*hit)[1], (*hit)[2]) == 1);

  auto tri_pt = chirotope(from({{0, 0}, {4, 0}, {0, 4}, {1, 1}}));
  CHECK_FALSE(contains_suborder(pent, tri_pt));

  auto p3 = chirotope(make_pn(3));
  CHECK(contains_suborder(make_pn(3), p3));
  CHECK_FALSE(contains_suborder(make_pn(4), p3));

  // Every injection returned respects every triple.
  auto p4 = make_pn(4);
  auto square_pt = chirotope(from({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 2}}));
  auto emb = contains_suborder(p4, square_pt);
  REQUIRE(emb);
  auto host = chirotope(p4);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k)
        CHECK(host.sign((*emb)[i], (*emb)[j], (*emb)[k]) == square_pt.sign(i, j, k));
}
