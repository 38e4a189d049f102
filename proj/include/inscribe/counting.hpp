#pragma once

#include "inscribe/rational.hpp"
#include "inscribe/staircase.hpp"

#include <array>
#include <string>
#include <vector>

namespace inscribe {

/// H(n) = 1! 2! ... (n-1)!, with H(0) = H(1) = 1.
BigInt hyperfactorial(int n);
BigInt binomial(int n, int k);

/// Lozenge tilings of the hexagon with sides a, b, c.
BigInt lozenge_count(int a, int b, int c);

/// Every valid pair of degree (n1, n2), in lexicographic order of
/// (psiL, psiR).
std::vector<StaircasePair> enumerate_staircase_pairs(int n1, int n2);

/// Sum over m of lozenge_count(2, m, n - m). Throws DomainError(InvalidArgument)
/// if the sum disagrees with binom(2n+2, n)/(n+1).
BigInt two_interior_pair_total(int n);

/// Closed-form conowheel count; n >= 3.
BigInt conowheel_count(int n);

enum class Convention { Oriented, Unoriented };
const char* to_string(Convention c);

struct CountReport {
  int n = 0;
  BigInt staircase_pair_total;
  /// N_0, N_1, N_2 under each convention (index by Convention).
  std::array<std::array<BigInt, 3>, 2> by_interior{};
  /// Staircase pairs whose realization has 0, 1, 2 interior points.
  std::array<BigInt, 3> pairs_by_interior{};
  /// Largest number of pairs landing on one oriented order type, per class.
  std::array<BigInt, 3> max_pairs_per_type{};
  Convention convention = Convention::Oriented;

  BigInt total(Convention c) const;
  /// L_0 <= N_0 (n+2)(n+1), L_1 <= N_1 2(n+2), L_2 <= 2 N_2, with bounds
  /// counting ordered distinguished pairs on n+2 points.
  bool inequalities_hold() const;
  /// Same inequalities with the bounds n(n-1) and 2n in the size parameter.
  bool parameter_inequalities_hold() const;
  /// key=value lines.
  std::string serialize() const;
};

/// Census of simple order types of size n+2 with at most two interior points,
/// obtained by realizing every staircase pair of total degree n.
/// `convention` only selects which count is reported as primary.
CountReport enumerate_order_types_two_interior(int n, Convention convention = Convention::Oriented);

}  // namespace inscribe
