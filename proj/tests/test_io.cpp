#include "doctest.h"

#include "inscribe/error.hpp"
#include "inscribe/families.hpp"
#include "inscribe/io.hpp"
#include "inscribe/staircase.hpp"

using namespace inscribe;

TEST_CASE("points file round trip is byte exact") {
  std::vector<Configuration> configs{make_pn(3), make_non_pascal(), make_interior_circle_gadget(),
                                     make_pn_minus(3, Removed::B1), inscribe_staircase({2, 2, {1, 2}, {0, 1}})};
  for (const auto& c : configs) {
    std::string text = write_points(c);
    PointsFile back = parse_points(text);
    CHECK(write_points(back) == text);
    REQUIRE(back.config.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(back.config[i].label == c[i].label);
      CHECK(back.config[i].p == c[i].p);
      CHECK(back.config[i].circle.has_value() == c[i].circle.has_value());
      if (c[i].circle) CHECK(*back.config[i].circle == *c[i].circle);
    }
  }
}

TEST_CASE("points file details") {
  PointsFile f = parse_points("# inscribe-points v1\n"
                              "# a comment\n"
                              "\n"
                              "u 6/4 -2 B\n"
                              "v -1 0 t=inf\n"
                              "w 0/1 1/1 B t=1\n");
  REQUIRE(f.config.size() == 3);
  CHECK(f.config[0].p.x == Rat(3, 2));
  CHECK_FALSE(f.config[0].circle);
  CHECK(f.config[1].circle->is_infinite());
  CHECK(f.on_circle == std::vector<std::string>{"u", "v", "w"});
  CHECK(write_points(f) ==
        "# inscribe-points v1\n"
        "u 3/2 -2/1 B\n"
        "v -1/1 0/1 B t=inf\n"
        "w 0/1 1/1 B t=1/1\n");

  CHECK_THROWS_AS(parse_points("u 0 0\n"), DomainError);
  CHECK_THROWS_AS(parse_points("# inscribe-points v1\nu 0\n"), DomainError);
  CHECK_THROWS_AS(parse_points("# inscribe-points v1\nu 0 0 X\n"), DomainError);
  CHECK_THROWS_AS(parse_points("# inscribe-points v1\nu 0 0\nu 1 1\n"), DomainError);
  CHECK_THROWS_AS(parse_points("# inscribe-points v1\nu 1 0 t=1\n"), DomainError);
}

TEST_CASE("chirotope file round trip") {
  Chirotope chi = chirotope(make_pn(3));
  std::string text = write_chirotope(chi);
  CHECK(text.rfind("# inscribe-chi v1\nn=12\n# labels: ", 0) == 0);
  Chirotope back = parse_chirotope(text);
  CHECK(back == chi);
  CHECK(back.labels() == chi.labels());
  CHECK(write_chirotope(back) == text);

  Chirotope plain = parse_chirotope("# inscribe-chi v1\nn=4\n+-+0\n");
  CHECK(plain.labels() == std::vector<std::string>{"p1", "p2", "p3", "p4"});
  CHECK(plain.sign(0, 1, 3) == -1);
  CHECK(plain.sign(1, 2, 3) == 0);
  CHECK(parse_chirotope("# inscribe-chi v1\nn=2\n").size() == 2);

  CHECK_THROWS_AS(parse_chirotope("n=3\n+\n"), DomainError);
  CHECK_THROWS_AS(parse_chirotope("# inscribe-chi v1\nn=4\n++\n"), DomainError);
  CHECK_THROWS_AS(parse_chirotope("# inscribe-chi v1\nn=3\n*\n"), DomainError);
  CHECK_THROWS_AS(parse_chirotope("# inscribe-chi v1\nn=x\n+\n"), DomainError);
  CHECK_THROWS_AS(parse_chirotope("# inscribe-chi v1\nn=3\n# labels: a a b\n+\n"), DomainError);
}
