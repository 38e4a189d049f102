#include "doctest.h"

#include "cli.hpp"
#include "inscribe/families.hpp"
#include "inscribe/io.hpp"

#include <cstdlib>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = inscribe::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen and canon are deterministic") {
  Result a = call({"gen", "pn", "3"});
  REQUIRE(a.code == 0);
  Result c1 = call({"canon", "-"}, a.out);
  Result c2 = call({"canon", "-"}, call({"gen", "pn", "3"}).out);
  CHECK(c1.code == 0);
  CHECK(c1.out == c2.out);
  CHECK(c1.out.size() > 2);
  // The points file re-parses byte for byte.
  CHECK(inscribe::write_points(inscribe::parse_points(a.out)) == a.out);
  // Canon also reads chirotope files.
  CHECK(call({"canon", "-"}, call({"chi", "-"}, a.out).out).out == c1.out);
}

TEST_CASE("count subcommands") {
  CHECK(call({"count", "lozenge", "2", "2", "2"}).out == "20\n");
  CHECK(call({"count", "conowheel", "5"}).out == "4\n");
  CHECK(call({"count", "pairs", "8"}).out == "4862\n");
  Result census = call({"count", "census", "4", "--convention", "unoriented"});
  CHECK(census.code == 0);
  CHECK(census.out.find("N=10\n") != std::string::npos);
  CHECK(call({"count", "census", "4", "--convention", "sideways"}).code == 1);
}

TEST_CASE("staircase commands") {
  Result pts = call({"inscribe-pair", "-"}, "2 2\n1 2\n0 1\n");
  REQUIRE(pts.code == 0);
  Result repr = call({"repr", "-", "--L", "L", "--R", "R"}, pts.out);
  CHECK(repr.code == 0);
  CHECK(repr.out == "2 2\n1 2\n0 1\n");
  CHECK(call({"inscribe-pair", "-"}, "1 1\n0\n1\n").code == 2);
}

TEST_CASE("pascal, polygons and contains") {
  Result np = call({"pascal", "-"}, call({"gen", "nonpascal"}).out);
  CHECK(np.code == 0);
  CHECK(np.out.find("not collinear") != std::string::npos);

  std::string hex = "# inscribe-points v1\n"
                    "p1 1/1 0/1 B t=0/1\n"
                    "p2 3/5 4/5 B t=1/2\n"
                    "p3 -4/5 3/5 B t=3/1\n"
                    "p4 -15/17 -8/17 B t=-4/1\n"
                    "p5 0/1 -1/1 B t=-1/1\n"
                    "p6 4/5 -3/5 B t=-1/3\n";
  Result conc = call({"pascal", "-"}, hex);
  CHECK(conc.code == 0);
  CHECK(conc.out.find("\ncollinear\n") != std::string::npos);

  Result poly = call({"polygons", "-"}, "# inscribe-points v1\nx 0 0\ny 1/2 0\nz 0 1/2\n");
  CHECK(poly.code == 0);
  CHECK(poly.out.find("polygons=") != std::string::npos);

  Result none = call({"contains", "-", "-"}, call({"gen", "pn", "4"}).out);
  CHECK(none.code != 0);  // both inputs cannot come from one stream
}

TEST_CASE("search exit codes") {
  Result chi = call({"chi", "-"}, call({"gen", "pn", "3"}).out);
  Result miss = call({"search", "-", "--B", "hull", "--seed", "7"}, chi.out);
  CHECK(miss.code == 3);
  CHECK(miss.out.find("verdict=NotFound") != std::string::npos);

  Result hit = call({"search", "-", "--B", "hull", "--restarts", "20"}, call({"gen", "pnminus", "3", "b1"}).out);
  CHECK(hit.code == 0);
  CHECK(hit.out.find("verdict=InscribedExact") != std::string::npos);

  CHECK(call({"search", "-", "--B", "d1"}, chi.out).code == 2);
  CHECK(call({"search", "-", "--iters", "many"}, chi.out).code == 1);
}

TEST_CASE("usage and domain errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"gen", "pn"}).code == 1);
  CHECK(call({"gen", "pn", "2"}).code == 2);
  CHECK(call({"gen", "pnminus", "3", "zz"}).code == 1);
  CHECK(call({"canon", "/nonexistent/file"}).code == 1);
  CHECK(call({"canon", "-"}, "garbage\n").code == 2);
  CHECK(call({"--help"}).code == 0);
}
