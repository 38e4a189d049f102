#pragma once

#include "inscribe/geometry.hpp"
#include "inscribe/order_type.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace inscribe {

struct SearchBudget {
  int restarts = 200;
  /// One iteration is one sweep of single-variable moves over all points.
  int iterations = 5000;
  std::uint64_t seed = 1;
  double margin = 1e-7;
  int snap_depth = 20;
  /// Sweeps without improvement of the best energy before a restart ends.
  int patience = 400;
};

struct InscribedExact {
  Configuration witness;
  int restart = 0;
};

/// Heuristic miss; never a proof of uninscribability.
struct NotFound {
  double best_energy = 0;
  int restarts_used = 0;
};

using Verdict = std::variant<InscribedExact, NotFound>;

inline bool found(const Verdict& v) { return std::holds_alternative<InscribedExact>(v); }

/// Floating-point position of one point: an angle when the point is
/// constrained to the unit circle, else free coordinates.
struct FloatPoint {
  bool on_circle = false;
  double angle = 0;
  double x = 0;
  double y = 0;
};

/// Sum over triples i<j<k of max(0, margin - sign(i,j,k) * det(i,j,k)).
double violation_energy(const std::vector<FloatPoint>& positions, const Chirotope& target, double margin);

/// Realization of `target` inside the closed unit disk with every label in
/// `on_circle` exactly on the unit circle.
/// Throws DomainError(NotSimple / InvalidB / UnknownLabel).
Verdict search_inscription(const Chirotope& target, const std::vector<std::string>& on_circle,
                           const SearchBudget& budget = {});

/// Realization with the interior points of `target` on the unit circle and
/// the extreme points anywhere. Throws DomainError(NotSimple / NotConvexInterior).
Verdict search_interior_on_circle(const Chirotope& target, const SearchBudget& budget = {});

}  // namespace inscribe
