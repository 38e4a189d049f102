#include "cli.hpp"

#include "CLI11.hpp"
#include "inscribe/counting.hpp"
#include "inscribe/error.hpp"
#include "inscribe/families.hpp"
#include "inscribe/io.hpp"
#include "inscribe/mobius.hpp"
#include "inscribe/order_type.hpp"
#include "inscribe/search.hpp"
#include "inscribe/staircase.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace inscribe::cli {

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kNotFound = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

bool is_chirotope_text(const std::string& text) {
  auto start = text.find_first_not_of(" \t\r\n");
  return start != std::string::npos && text.compare(start, 17, "# inscribe-chi v1") == 0;
}

// Either file format; points are turned into their chirotope.
Chirotope read_chirotope(const std::string& path, std::istream& in) {
  std::string text = read_source(path, in);
  if (is_chirotope_text(text)) return parse_chirotope(text);
  return chirotope(parse_points(text).config);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(s);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("INSCRIBE_SEED");
  if (!env || !*env) return 1;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("INSCRIBE_SEED is not an unsigned integer: '") + env + "'");
  }
}

Removed parse_removed(const std::string& s) {
  if (s == "a1") return Removed::A1;
  if (s == "b1") return Removed::B1;
  if (s == "dn") return Removed::Dn;
  throw UsageError("WHICH must be a1, b1 or dn");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order types, inscribability and circle maps"};
  app.name("inscribe");
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a configuration as a points file");
  gen->require_subcommand(1);
  std::string eps_text;
  gen->add_option("--eps", eps_text, "Offset epsilon as p/q (pn, star)");
  int pn_n = 0;
  auto* gen_pn = gen->add_subcommand("pn", "The 4n-point configuration P_n");
  gen_pn->add_option("N", pn_n)->required();
  std::string sigma_text;
  auto* gen_star = gen->add_subcommand("star", "Star configuration for a permutation");
  gen_star->add_option("SIGMA", sigma_text, "Permutation of 1..n, comma separated")->required();
  auto* gen_np = gen->add_subcommand("nonpascal", "The non-Pascal configuration");
  auto* gen_gadget = gen->add_subcommand("gadget", "Configuration whose interior points avoid every circle");
  int minus_n = 0;
  std::string which;
  auto* gen_minus = gen->add_subcommand("pnminus", "Inscribed P_n with one point removed");
  gen_minus->add_option("N", minus_n)->required();
  gen_minus->add_option("WHICH", which, "a1, b1 or dn")->required();

  // chi
  std::string chi_file;
  auto* chi_cmd = app.add_subcommand("chi", "Chirotope file of a points file");
  chi_cmd->add_option("FILE", chi_file)->required();

  // repr
  std::string repr_file, repr_l, repr_r;
  auto* repr = app.add_subcommand("repr", "Function representation for two distinguished points");
  repr->add_option("FILE", repr_file)->required();
  repr->add_option("--L", repr_l)->required();
  repr->add_option("--R", repr_r)->required();

  // inscribe-pair
  std::string pair_file;
  std::optional<std::uint64_t> pair_seed;
  auto* pair_cmd = app.add_subcommand("inscribe-pair", "Inscribed realization of a staircase pair");
  pair_cmd->add_option("PAIRFILE", pair_file)->required();
  pair_cmd->add_option("--seed", pair_seed, "Random interval fractions");

  // count
  auto* count = app.add_subcommand("count", "Counting formulas and the census");
  count->require_subcommand(1);
  int count_n = 0, lz_a = 0, lz_b = 0, lz_c = 0;
  auto* count_cono = count->add_subcommand("conowheel", "Order types with at most one interior point");
  count_cono->add_option("N", count_n)->required();
  auto* count_lz = count->add_subcommand("lozenge", "Lozenge tilings of an (A,B,C) hexagon");
  count_lz->add_option("A", lz_a)->required();
  count_lz->add_option("B", lz_b)->required();
  count_lz->add_option("C", lz_c)->required();
  auto* count_pairs = count->add_subcommand("pairs", "Staircase pairs of total degree N");
  count_pairs->add_option("N", count_n)->required();
  std::string convention = "oriented";
  auto* count_census = count->add_subcommand("census", "Order types of size N+2 with at most 2 interior points");
  count_census->add_option("N", count_n)->required();
  count_census->add_option("--convention", convention)->check(CLI::IsMember({"oriented", "unoriented"}));

  // polygons
  std::string poly_file;
  auto* polygons = app.add_subcommand("polygons", "Inscribed polygons through crossing points");
  polygons->add_option("FILE", poly_file)->required();

  // contains
  std::string host_file, pattern_file;
  auto* contains = app.add_subcommand("contains", "Find a sub-configuration with a given order type");
  contains->add_option("HOST", host_file)->required();
  contains->add_option("PATTERN", pattern_file)->required();

  // search
  std::string search_file, b_text = "hull";
  SearchBudget budget;
  std::optional<std::uint64_t> seed;
  bool interior_mode = false;
  auto* search = app.add_subcommand("search", "Heuristic search for an inscribed realization");
  search->add_option("CHI", search_file)->required();
  search->add_option("--B", b_text, "'hull', 'none' or comma-separated labels");
  search->add_option("--restarts", budget.restarts);
  search->add_option("--iters", budget.iterations);
  search->add_option("--seed", seed, "Defaults to INSCRIBE_SEED, else 1");
  search->add_flag("--interior-on-circle", interior_mode, "Put the interior points on the circle instead");

  // pascal
  std::string pascal_file;
  auto* pascal = app.add_subcommand("pascal", "Collinearity of the Pascal crossings of the first six points");
  pascal->add_option("FILE", pascal_file)->required();

  // canon
  std::string canon_file;
  bool unoriented = false;
  auto* canon = app.add_subcommand("canon", "Canonical code of an order type");
  canon->add_option("FILE", canon_file)->required();
  canon->add_flag("--unoriented", unoriented, "Identify mirror images");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    auto optional_eps = [&]() -> std::optional<Rat> {
      if (eps_text.empty()) return std::nullopt;
      return parse_rat(eps_text);
    };

    if (gen->parsed()) {
      Configuration c;
      if (gen_pn->parsed()) {
        c = make_pn(PnParams{pn_n, optional_eps()});
      } else if (gen_star->parsed()) {
        std::vector<int> sigma;
        for (const auto& s : split_list(sigma_text)) {
          try {
            sigma.push_back(std::stoi(s));
          } catch (const std::exception&) {
            throw UsageError("SIGMA must be a comma-separated list of integers");
          }
        }
        c = make_star(StarParams{sigma, optional_eps()});
      } else if (gen_np->parsed()) {
        c = make_non_pascal();
      } else if (gen_gadget->parsed()) {
        c = make_interior_circle_gadget();
      } else if (gen_minus->parsed()) {
        c = make_pn_minus(minus_n, parse_removed(which));
      }
      out << write_points(c);
      return kOk;
    }

    if (chi_cmd->parsed()) {
      out << write_chirotope(read_chirotope(chi_file, in));
      return kOk;
    }

    if (repr->parsed()) {
      auto file = parse_points(read_source(repr_file, in));
      out << to_text(function_representation(file.config, repr_l, repr_r));
      return kOk;
    }

    if (pair_cmd->parsed()) {
      StaircaseOptions options;
      options.seed = pair_seed;
      out << write_points(inscribe_staircase(parse_staircase(read_source(pair_file, in)), options));
      return kOk;
    }

    if (count->parsed()) {
      if (count_cono->parsed()) out << to_string(conowheel_count(count_n)) << '\n';
      if (count_lz->parsed()) out << to_string(lozenge_count(lz_a, lz_b, lz_c)) << '\n';
      if (count_pairs->parsed()) out << to_string(two_interior_pair_total(count_n)) << '\n';
      if (count_census->parsed()) {
        Convention conv = convention == "unoriented" ? Convention::Unoriented : Convention::Oriented;
        out << enumerate_order_types_two_interior(count_n, conv).serialize();
      }
      return kOk;
    }

    if (polygons->parsed()) {
      auto file = parse_points(read_source(poly_file, in));
      std::vector<Point> crossings;
      for (const auto& p : file.config) crossings.push_back(p.p);
      PolygonSearch res = inscribed_polygons(crossings);
      out << "map=" << to_string(res.map_class.kind) << '\n';
      out << "field=" << to_string(res.map_class.field) << '\n';
      if (res.map_class.multiplier) {
        QuadraticNumber r_minus_1 = *res.map_class.multiplier - QuadraticNumber(Rat(1));
        out << "multiplier=" << res.map_class.multiplier->str() << '\n';
        out << "multiplierMinusOneSign=" << r_minus_1.sign() << '\n';
      }
      out << "polygons=" << res.polygons.size() << '\n';
      for (std::size_t k = 0; k < res.polygons.size(); ++k) {
        out << "polygon" << k + 1 << '=';
        for (std::size_t i = 0; i < res.polygons[k].size(); ++i) out << (i ? " " : "") << res.polygons[k][i].str();
        out << '\n';
      }
      return kOk;
    }

    if (contains->parsed()) {
      auto host = parse_points(read_source(host_file, in));
      Chirotope pattern = read_chirotope(pattern_file, in);
      auto hit = contains_suborder(host.config, pattern);
      if (!hit) {
        out << "none\n";
        return kOk;
      }
      for (std::size_t i = 0; i < hit->size(); ++i)
        out << pattern.labels()[i] << " -> " << host.config[(*hit)[i]].label << '\n';
      return kOk;
    }

    if (search->parsed()) {
      Chirotope target = read_chirotope(search_file, in);
      budget.seed = seed ? *seed : default_seed();
      Verdict v;
      if (interior_mode) {
        v = search_interior_on_circle(target, budget);
      } else {
        std::vector<std::string> on_circle;
        if (b_text == "hull") {
          for (std::size_t i : target.extreme_indices()) on_circle.push_back(target.labels()[i]);
        } else if (b_text != "none") {
          on_circle = split_list(b_text);
        }
        v = search_inscription(target, on_circle, budget);
      }
      if (found(v)) {
        const auto& w = std::get<InscribedExact>(v);
        out << "# verdict=InscribedExact restart=" << w.restart << " seed=" << budget.seed << '\n';
        out << write_points(w.witness);
        return kOk;
      }
      const auto& miss = std::get<NotFound>(v);
      out << "verdict=NotFound restarts=" << miss.restarts_used << " bestEnergy=" << miss.best_energy
          << " seed=" << budget.seed << '\n';
      out << "note=heuristic miss; not a proof of uninscribability\n";
      return kNotFound;
    }

    if (pascal->parsed()) {
      auto file = parse_points(read_source(pascal_file, in));
      // The first six points form the hexagon; later points are ignored.
      if (file.config.size() < 6) throw UsageError("pascal needs at least six points");
      std::array<Point, 6> hex;
      bool all_circle = true;
      for (int i = 0; i < 6; ++i) {
        hex[i] = file.config[i].p;
        all_circle = all_circle && file.config[i].circle.has_value();
      }
      auto c = pascal_crossings(hex);
      for (int i = 0; i < 3; ++i) out << 'c' << i + 1 << '=' << to_string(c[i].x) << ' ' << to_string(c[i].y) << '\n';
      int s = orient(c[0], c[1], c[2]);
      out << "concyclic=" << (all_circle ? "yes" : "unknown") << '\n';
      out << "orient=" << s << '\n';
      out << (s == 0 ? "collinear" : "not collinear") << '\n';
      return kOk;
    }

    if (canon->parsed()) {
      Chirotope chi = read_chirotope(canon_file, in);
      out << (unoriented ? canonical_form_unoriented(chi) : canonical_form(chi)).hex() << '\n';
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace inscribe::cli
