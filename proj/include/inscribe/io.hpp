#pragma once

#include "inscribe/geometry.hpp"
#include "inscribe/order_type.hpp"

#include <string>
#include <vector>

namespace inscribe {

/// Text form of a labeled configuration:
///
///   # inscribe-points v1
///   label x y [B] [t=num/den]
///
/// Coordinates are "num/den". "B" marks a point required on the unit circle;
/// "t=" gives its exact circle parameter ("inf" allowed) and implies B.
struct PointsFile {
  Configuration config;
  /// Labels flagged B, in file order.
  std::vector<std::string> on_circle;
};

/// Points with a circle parameter are always written with B and t=.
std::string write_points(const PointsFile& file);
std::string write_points(const Configuration& config);
/// Throws DomainError(Parse) on malformed input, InvalidArgument on
/// duplicate labels or a t= that does not embed to the coordinates.
PointsFile parse_points(const std::string& text);

/// Text form of a chirotope:
///
///   # inscribe-chi v1
///   n=<count>
///   # labels: l1 l2 ...        (optional; default p1..pn)
///   <one of + - 0 per triple i<j<k, lexicographic>
std::string write_chirotope(const Chirotope& chi);
/// Throws DomainError(Parse).
Chirotope parse_chirotope(const std::string& text);

}  // namespace inscribe
