#pragma once

#include "inscribe/geometry.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace inscribe {

struct PnParams {
  int n = 3;
  /// Offset of the lines L_i to the right of the chord crossings; when unset,
  /// a quarter of the room left before c_i or a_{i+1} would cross L_i.
  std::optional<Rat> epsilon;
};

/// The 4n-point configuration with hull a_1,b_1,c_1,...,a_n,b_n,c_n
/// (counterclockwise) and interior points d_1..d_n. The a_i and c_i are
/// rational circle points near the even 2n-gon and carry circle flags.
/// Throws DomainError(InvalidArgument) for n < 3, EpsilonTooLarge if the
/// exact post-checks fail.
Configuration make_pn(const PnParams& params);
inline Configuration make_pn(int n) { return make_pn(PnParams{n, std::nullopt}); }

/// (-1)^(inversions of sigma(k), sigma(k+1), sigma(k+2)), indices mod n,
/// k zero-based, sigma given as a 1-based permutation.
int sign_triple(const std::vector<int>& sigma, int k);

struct StarParams {
  std::vector<int> sigma;  // permutation of 1..n
  std::optional<Rat> epsilon;
};

/// P_n's a, b, c with d_{sigma(k)} at the centroid of the triangle cut by
/// lines a_{s(k)}a_{s(k+1)}, b_{s(k)}b_{s(k+1)}, c_{s(k)}c_{s(k+1)}.
/// Throws DomainError(SignConditionViolated / EmptyTriangle / InvalidArgument).
Configuration make_star(const StarParams& params);

/// Crossings c_1 = p1p5 x p2p4, c_2 = p1p6 x p3p4, c_3 = p2p6 x p3p5.
/// Throws DomainError(ParallelLines).
std::array<Point, 3> pascal_crossings(const std::array<Point, 6>& hexagon);
/// orient(c_1, c_2, c_3) == 0 for six points on the unit circle.
/// Throws DomainError(ParallelLines / InvalidArgument).
bool pascal_collinear(const std::array<CirclePoint, 6>& hexagon);

/// Hexagon p1..p6 with interior q1, q2, q3.
Configuration make_non_pascal();

enum class Removed { A1, B1, Dn };
const char* to_string(Removed r);

/// Inscribed realization of P_n without a_1, b_1 or d_n: every extreme point
/// carries an exact circle parameter and the order type equals that of
/// make_pn(n) minus the same point. Throws DomainError(ConstructionFailed).
Configuration make_pn_minus(int n, Removed removed);

/// Extreme p1, p2, p3; interior A, B, C, a, b, c in convex position, in
/// counterclockwise order A, c, B, a, C, b.
Configuration make_interior_circle_gadget();

/// C strictly inside the triangle cut by lines Ab, Ba, AB, and the two
/// cyclic shifts (A with Bc, Cb, BC; B with Ca, Ac, CA).
bool gadget_memberships_hold(const Point& A, const Point& B, const Point& C, const Point& a, const Point& b,
                             const Point& c);

}  // namespace inscribe
