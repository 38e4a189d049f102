#pragma once

#include "inscribe/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace inscribe {

/// Pair of monotone maps [n1] -> {0..n2}; psiL[i-1] is the value at i.
struct StaircasePair {
  int n1 = 0;
  int n2 = 0;
  std::vector<int> psiL;
  std::vector<int> psiR;

  friend bool operator==(const StaircasePair&, const StaircasePair&) = default;
  friend auto operator<=>(const StaircasePair&, const StaircasePair&) = default;
};

/// Sizes match, values in range, both maps nondecreasing, psiL >= psiR.
bool validate_staircase(const StaircasePair& pair);

/// Three-line text form: "n1 n2", psiL values, psiR values.
std::string to_text(const StaircasePair& pair);
/// Throws DomainError(Parse).
StaircasePair parse_staircase(const std::string& text);

/// Points above line LR (left of L->R) are p_1..p_n1 in clockwise order
/// around the midpoint of LR; psi_A(i) counts points below the line that lie
/// strictly right of the directed line A -> p_i.
/// Throws DomainError(NotSimple / CoverageError / DegenerateLine / UnknownLabel).
StaircasePair function_representation(const Configuration& config, const std::string& L, const std::string& R);

struct StaircaseOptions {
  /// Random interval fractions instead of midpoints.
  std::optional<std::uint64_t> seed;
  /// Move an extreme L to (-1,0) and an extreme R to (1,0).
  bool push_out = true;
  int max_attempts = 64;
};

/// Realization with labels L, R, p1.., q1..; every extreme point carries an
/// exact circle parameter.
/// Throws DomainError(InvalidPair), or ConstructionFailed if no attempt
/// produced a point set in general position.
Configuration inscribe_staircase(const StaircasePair& pair, const StaircaseOptions& options = {});

/// Ordered pairs (L, R) of distinct labels covering all interior points.
/// Throws DomainError(TooManyInterior) for more than two interior points.
std::vector<std::pair<std::string, std::string>> distinguished_pairs(const Configuration& config);

}  // namespace inscribe
