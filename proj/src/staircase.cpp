#include "inscribe/staircase.hpp"

#include "inscribe/error.hpp"
#include "inscribe/mobius.hpp"
#include "inscribe/order_type.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace inscribe {

bool validate_staircase(const StaircasePair& pair) {
  if (pair.n1 < 0 || pair.n2 < 0) return false;
  if (pair.psiL.size() != std::size_t(pair.n1) || pair.psiR.size() != std::size_t(pair.n1)) return false;
  for (int i = 0; i < pair.n1; ++i) {
    int l = pair.psiL[i], r = pair.psiR[i];
    if (r < 0 || l > pair.n2 || l < r) return false;
    if (i > 0 && (l < pair.psiL[i - 1] || r < pair.psiR[i - 1])) return false;
  }
  return true;
}

std::string to_text(const StaircasePair& pair) {
  std::ostringstream out;
  out << pair.n1 << ' ' << pair.n2 << '\n';
  for (const auto* values : {&pair.psiL, &pair.psiR}) {
    for (std::size_t i = 0; i < values->size(); ++i) out << (i ? " " : "") << (*values)[i];
    out << '\n';
  }
  return out.str();
}

StaircasePair parse_staircase(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  auto fail = [](const std::string& why) { return DomainError(ErrorCode::Parse, "staircase pair: " + why); };
  if (lines.empty()) throw fail("empty input");

  StaircasePair pair;
  std::istringstream head(lines[0]);
  std::string extra;
  if (!(head >> pair.n1 >> pair.n2) || (head >> extra)) throw fail("first line must be \"n1 n2\"");
  if (pair.n1 < 0 || pair.n2 < 0) throw fail("negative degree");
  auto read_values = [&](std::size_t line_no, std::vector<int>& values) {
    if (line_no >= lines.size()) {
      if (pair.n1 == 0) return;
      throw fail("missing line " + std::to_string(line_no + 1));
    }
    std::istringstream row(lines[line_no]);
    for (int v; row >> v;) values.push_back(v);
    if (!row.eof()) throw fail("non-integer value on line " + std::to_string(line_no + 1));
    if (values.size() != std::size_t(pair.n1)) throw fail("expected " + std::to_string(pair.n1) + " values");
  };
  read_values(1, pair.psiL);
  read_values(2, pair.psiR);
  for (std::size_t i = 3; i < lines.size(); ++i)
    if (lines[i].find_first_not_of(" \t\r") != std::string::npos) throw fail("trailing content");
  return pair;
}

StaircasePair function_representation(const Configuration& config, const std::string& L, const std::string& R) {
  const std::size_t il = config.index_of(L), ir = config.index_of(R);
  if (il == ir) throw DomainError(ErrorCode::InvalidArgument, "L and R must differ");
  const Point& pl = config[il].p;
  const Point& pr = config[ir].p;
  std::vector<std::size_t> upper, lower;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (i == il || i == ir) continue;
    int s = orient(pl, pr, config[i].p);
    if (s == 0) throw DomainError(ErrorCode::DegenerateLine, "point " + config[i].label + " lies on line LR");
    (s > 0 ? upper : lower).push_back(i);
  }
  Chirotope chi = chirotope(config);
  if (!chi.is_simple()) throw DomainError(ErrorCode::NotSimple, "configuration is not in general position");
  for (std::size_t i : chi.interior_indices())
    if (i != il && i != ir)
      throw DomainError(ErrorCode::CoverageError, "interior point " + config[i].label + " is neither L nor R");

  const Point c = midpoint(pl, pr);
  std::sort(upper.begin(), upper.end(),
            [&](std::size_t a, std::size_t b) { return orient(c, config[a].p, config[b].p) < 0; });

  StaircasePair pair;
  pair.n1 = int(upper.size());
  pair.n2 = int(lower.size());
  for (std::size_t i : upper) {
    int cl = 0, cr = 0;
    for (std::size_t q : lower) {
      cl += orient(pl, config[i].p, config[q].p) < 0;
      cr += orient(pr, config[i].p, config[q].p) < 0;
    }
    pair.psiL.push_back(cl);
    pair.psiR.push_back(cr);
  }
  return pair;
}

namespace {

enum class Kind { L, R, P };
struct Item {
  Kind kind;
  int index;
};

// Decreasing order of the upper-semicircle parameters: p_i, the reflections
// q_j^L through L and q_j^R through R.
std::vector<Item> staircase_word(const StaircasePair& pair) {
  std::vector<Item> word;
  int nl = 0, nr = 0;
  for (int i = 0; i < pair.n1; ++i) {
    for (; nl < pair.psiL[i]; ++nl) word.push_back({Kind::L, nl});
    for (; nr < pair.psiR[i]; ++nr) word.push_back({Kind::R, nr});
    word.push_back({Kind::P, i});
  }
  for (; nl < pair.n2; ++nl) word.push_back({Kind::L, nl});
  for (; nr < pair.n2; ++nr) word.push_back({Kind::R, nr});
  return word;
}

Configuration realize(const StaircasePair& pair, const std::vector<Item>& word, const StaircaseOptions& options,
                      const std::function<Rat()>& fraction) {
  const Point left{Rat(-1, 2), Rat(0)}, right{Rat(1, 2), Rat(0)};
  const CircleMap through_l = projection_map(left), through_r = projection_map(right);
  const CircleMap g = through_r.after(through_l);

  std::vector<std::optional<Rat>> ul(pair.n2), pt(pair.n1);
  auto r_value = [&](int j) { return g.apply(CirclePoint(*ul[j])).t(); };
  std::optional<Rat> cursor;  // nullopt is +infinity
  for (std::size_t k = 0; k < word.size(); ++k) {
    const Item& item = word[k];
    if (item.kind == Kind::R) {
      cursor = r_value(item.index);
      continue;
    }
    Rat lower = 0;
    for (std::size_t m = k + 1; m < word.size(); ++m)
      if (word[m].kind == Kind::R && ul[word[m].index]) {
        lower = r_value(word[m].index);
        break;
      }
    Rat f = fraction();
    Rat value = cursor ? Rat(lower + f * (*cursor - lower)) : Rat(lower + 2 * f);
    (item.kind == Kind::L ? ul[item.index] : pt[item.index]) = value;
    cursor = value;
  }

  const bool extreme_l = std::all_of(pair.psiL.begin(), pair.psiL.end(), [&](int v) { return v == pair.n2; });
  const bool extreme_r = std::all_of(pair.psiR.begin(), pair.psiR.end(), [](int v) { return v == 0; });
  Configuration config;
  if (options.push_out && extreme_l) config.add_on_circle("L", CirclePoint::infinity());
  else config.add("L", left);
  if (options.push_out && extreme_r) config.add_on_circle("R", CirclePoint(Rat(0)));
  else config.add("R", right);
  for (int i = 0; i < pair.n1; ++i) config.add_on_circle("p" + std::to_string(i + 1), CirclePoint(*pt[i]));
  for (int j = 0; j < pair.n2; ++j)
    config.add_on_circle("q" + std::to_string(j + 1), through_l.apply(CirclePoint(*ul[j])));
  return config;
}

bool extremes_on_circle(const Configuration& config) {
  for (std::size_t i : chirotope(config).extreme_indices())
    if (!config[i].circle) return false;
  return true;
}

}  // namespace

Configuration inscribe_staircase(const StaircasePair& pair, const StaircaseOptions& options) {
  if (!validate_staircase(pair)) throw DomainError(ErrorCode::InvalidPair, "not a valid staircase pair");
  const auto word = staircase_word(pair);
  std::mt19937_64 rng(options.seed.value_or(0));
  std::uniform_int_distribution<int> tick(1, 1023);

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::function<Rat()> fraction;
    if (options.seed) fraction = [&] {
        Rat f(tick(rng), 1024);
        f.canonicalize();
        return f;
      };
    else fraction = [attempt] { return Rat(1, attempt + 2); };
    Configuration config = realize(pair, word, options, fraction);
    if (!in_general_position(config)) continue;
    if (function_representation(config, "L", "R") != pair) continue;
    if (options.push_out && !extremes_on_circle(config)) continue;
    return config;
  }
  throw DomainError(ErrorCode::ConstructionFailed, "no realization in general position found");
}

std::vector<std::pair<std::string, std::string>> distinguished_pairs(const Configuration& config) {
  const auto interior = chirotope(config).interior_indices();
  if (interior.size() > 2) throw DomainError(ErrorCode::TooManyInterior, "more than two interior points");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t a = 0; a < config.size(); ++a)
    for (std::size_t b = 0; b < config.size(); ++b) {
      if (a == b) continue;
      bool covers = std::all_of(interior.begin(), interior.end(), [&](std::size_t i) { return i == a || i == b; });
      if (covers) out.emplace_back(config[a].label, config[b].label);
    }
  return out;
}

}  // namespace inscribe
