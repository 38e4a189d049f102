#include "inscribe/search.hpp"

#include "inscribe/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace inscribe {

namespace {

struct Xy {
  double x, y;
};

Xy coords(const FloatPoint& p) { return p.on_circle ? Xy{std::cos(p.angle), std::sin(p.angle)} : Xy{p.x, p.y}; }

double det(const Xy& a, const Xy& b, const Xy& c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

double hinge(double margin, int sign, double d) { return std::max(0.0, margin - sign * d); }

struct Triple {
  std::uint32_t j, k;
  std::int8_t sign;  // target sign of (i, j, k)
};

class Searcher {
 public:
  Searcher(const Chirotope& target, std::vector<bool> on_circle, bool disk_penalty, const SearchBudget& budget)
      : target_(target), on_circle_(std::move(on_circle)), disk_(disk_penalty), budget_(budget), n_(target.size()) {
    incident_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k)
          if (i != j && i != k)
            incident_[i].push_back({std::uint32_t(j), std::uint32_t(k), std::int8_t(target.sign(i, j, k))});
  }

  Verdict run() {
    NotFound miss;
    miss.best_energy = std::numeric_limits<double>::infinity();
    for (int r = 0; r < budget_.restarts; ++r) {
      std::seed_seq seq{std::uint32_t(budget_.seed), std::uint32_t(budget_.seed >> 32), std::uint32_t(r)};
      std::mt19937_64 rng(seq);
      double e = restart(rng);
      miss.best_energy = std::min(miss.best_energy, e);
      miss.restarts_used = r + 1;
      if (e == 0)
        if (auto witness = snap()) return InscribedExact{std::move(*witness), r};
    }
    return miss;
  }

 private:
  double point_energy(std::size_t i) const {
    double e = 0;
    const Xy& a = xy_[i];
    for (const auto& t : incident_[i]) e += hinge(budget_.margin, t.sign, det(a, xy_[t.j], xy_[t.k]));
    if (disk_ && !on_circle_[i]) e += std::max(0.0, a.x * a.x + a.y * a.y - 1.0);
    return e;
  }

  double total_energy() const {
    double e = 0;
    for (std::size_t i = 0; i < n_; ++i) e += point_energy(i);
    // Every triple was counted three times; the disk term once.
    double disk = 0;
    if (disk_)
      for (std::size_t i = 0; i < n_; ++i)
        if (!on_circle_[i]) disk += std::max(0.0, xy_[i].x * xy_[i].x + xy_[i].y * xy_[i].y - 1.0);
    return (e - disk) / 3 + disk;
  }

  // Try replacing point i; keep the move if the energy does not increase.
  bool propose(std::size_t i, const FloatPoint& candidate, double& energy) {
    double before = point_energy(i);
    FloatPoint saved = pos_[i];
    pos_[i] = candidate;
    xy_[i] = coords(candidate);
    double after = point_energy(i);
    if (after <= before) {
      energy += after - before;
      // Near zero the running total is not trustworthy; recount.
      if (energy < budget_.margin * 1e-3) energy = total_energy();
      return true;
    }
    pos_[i] = saved;
    xy_[i] = coords(saved);
    return false;
  }

  double restart(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double two_pi = 2 * std::numbers::pi;
    pos_.assign(n_, {});
    xy_.assign(n_, {});
    for (std::size_t i = 0; i < n_; ++i) {
      FloatPoint& p = pos_[i];
      p.on_circle = on_circle_[i];
      if (p.on_circle) {
        p.angle = two_pi * unit(rng);
      } else {
        double r = disk_ ? std::sqrt(unit(rng)) : 1.5 + 2.5 * unit(rng);
        double a = two_pi * unit(rng);
        p.x = r * std::cos(a);
        p.y = r * std::sin(a);
      }
      xy_[i] = coords(p);
    }
    std::vector<double> step(n_, 0.5);
    std::vector<std::size_t> circle_points;
    for (std::size_t i = 0; i < n_; ++i)
      if (on_circle_[i]) circle_points.push_back(i);

    double energy = total_energy();
    double best = energy;
    int since_best = 0;
    for (int sweep = 0; sweep < budget_.iterations && energy > 0; ++sweep) {
      for (std::size_t i = 0; i < n_ && energy > 0; ++i) {
        FloatPoint cand = pos_[i];
        if (cand.on_circle) {
          cand.angle += step[i] * gauss(rng);
        } else {
          cand.x += step[i] * gauss(rng);
          cand.y += step[i] * gauss(rng);
        }
        if (propose(i, cand, energy)) step[i] = std::min(2.0, step[i] * 1.3);
        else step[i] = std::max(1e-9, step[i] * 0.8);
      }
      if (circle_points.size() >= 2 && unit(rng) < 0.1) {
        std::size_t u = circle_points[std::size_t(unit(rng) * circle_points.size()) % circle_points.size()];
        std::size_t v = circle_points[std::size_t(unit(rng) * circle_points.size()) % circle_points.size()];
        if (u != v) {
          double before = energy;
          std::swap(pos_[u].angle, pos_[v].angle);
          xy_[u] = coords(pos_[u]);
          xy_[v] = coords(pos_[v]);
          double after = total_energy();
          if (after <= before) {
            energy = after;
          } else {
            std::swap(pos_[u].angle, pos_[v].angle);
            xy_[u] = coords(pos_[u]);
            xy_[v] = coords(pos_[v]);
          }
        }
      }
      // Refresh to keep rounding drift out of the running total.
      if (sweep % 64 == 63) energy = total_energy();
      if (energy < best * (1 - 1e-9)) {
        best = energy;
        since_best = 0;
      } else if (++since_best >= budget_.patience) {
        break;
      }
    }
    return total_energy();
  }

  std::optional<Configuration> snap() const {
    for (int level = 1; level <= budget_.snap_depth; ++level) {
      const double tol = std::ldexp(1.0, -(2 * level + 4));
      Configuration config;
      for (std::size_t i = 0; i < n_; ++i) {
        const std::string& label = target_.labels()[i];
        if (pos_[i].on_circle) {
          double t = std::tan(pos_[i].angle / 2);
          if (!std::isfinite(t) || std::abs(t) > 1e12) {
            config.add_on_circle(label, CirclePoint::infinity());
            continue;
          }
          auto cs = convergents(t, 64);
          Rat pick = cs.back();
          for (const auto& c : cs)
            if (std::abs(c.get_d() - t) < tol * (1 + t * t)) {
              pick = c;
              break;
            }
          config.add_on_circle(label, CirclePoint(pick));
        } else {
          config.add(label, {dyadic(pos_[i].x, 2 * level + 6), dyadic(pos_[i].y, 2 * level + 6)});
        }
      }
      if (verify(config)) return config;
    }
    return std::nullopt;
  }

  bool verify(const Configuration& config) const {
    if (!(chirotope(config) == target_)) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      if (on_circle_[i] && !config[i].circle) return false;
      const Point& p = config[i].p;
      if (disk_ && p.x * p.x + p.y * p.y > 1) return false;
    }
    return true;
  }

  const Chirotope& target_;
  std::vector<bool> on_circle_;
  bool disk_;
  SearchBudget budget_;
  std::size_t n_;
  std::vector<std::vector<Triple>> incident_;
  std::vector<FloatPoint> pos_;
  std::vector<Xy> xy_;
};

void check_budget(const SearchBudget& b) {
  if (b.restarts <= 0 || b.iterations <= 0 || b.margin <= 0 || b.snap_depth <= 0 || b.patience <= 0)
    throw DomainError(ErrorCode::InvalidArgument, "search budget values must be positive");
}

}  // namespace

double violation_energy(const std::vector<FloatPoint>& positions, const Chirotope& target, double margin) {
  if (positions.size() != target.size())
    throw DomainError(ErrorCode::InvalidArgument, "position count does not match the chirotope");
  std::vector<Xy> xy;
  for (const auto& p : positions) xy.push_back(coords(p));
  double e = 0;
  const std::size_t n = positions.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) e += hinge(margin, target.sign(i, j, k), det(xy[i], xy[j], xy[k]));
  return e;
}

Verdict search_inscription(const Chirotope& target, const std::vector<std::string>& on_circle,
                           const SearchBudget& budget) {
  check_budget(budget);
  if (!target.is_simple()) throw DomainError(ErrorCode::NotSimple, "search needs a simple chirotope");
  const auto extreme = target.extreme_indices();
  std::vector<bool> flags(target.size(), false);
  for (const auto& label : on_circle) {
    auto it = std::find(target.labels().begin(), target.labels().end(), label);
    if (it == target.labels().end()) throw DomainError(ErrorCode::UnknownLabel, "unknown label " + label);
    std::size_t i = std::size_t(it - target.labels().begin());
    if (!std::binary_search(extreme.begin(), extreme.end(), i))
      throw DomainError(ErrorCode::InvalidB, label + " is not an extreme point");
    flags[i] = true;
  }
  return Searcher(target, std::move(flags), true, budget).run();
}

Verdict search_interior_on_circle(const Chirotope& target, const SearchBudget& budget) {
  check_budget(budget);
  if (!target.is_simple()) throw DomainError(ErrorCode::NotSimple, "search needs a simple chirotope");
  const auto interior = target.interior_indices();
  if (target.restricted(interior).extreme_indices().size() != interior.size())
    throw DomainError(ErrorCode::NotConvexInterior, "interior points are not in convex position");
  std::vector<bool> flags(target.size(), false);
  for (std::size_t i : interior) flags[i] = true;
  return Searcher(target, std::move(flags), false, budget).run();
}

}  // namespace inscribe
