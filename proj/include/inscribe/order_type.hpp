#pragma once

#include "inscribe/geometry.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace inscribe {

/// Orientation signs of every triple of a labeled point set. Stored densely
/// so that sign(i, j, k) is O(1) for any ordering of the three indices.
class Chirotope {
 public:
  Chirotope() = default;

  /// `signs` lists the triples i<j<k in lexicographic order; values in {-1,0,1}.
  Chirotope(std::vector<std::string> labels, const std::vector<std::int8_t>& signs);

  std::size_t size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  int sign(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * n_ + j) * n_ + k]; }

  std::vector<std::int8_t> lex_signs() const;
  /// One character per triple i<j<k: '+', '-' or '0'.
  std::string sign_string() const;

  bool is_simple() const;
  /// Reverses every sign (the order type of the mirror image).
  Chirotope mirrored() const;
  /// Chirotope of the points `subset` (in that order).
  Chirotope restricted(const std::vector<std::size_t>& subset) const;

  /// Indices of points not inside any triangle of other points. For a simple
  /// chirotope of a planar set these are the convex hull vertices.
  std::vector<std::size_t> extreme_indices() const;
  std::vector<std::size_t> interior_indices() const;

  friend bool operator==(const Chirotope& a, const Chirotope& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::int8_t> table_;
};

/// Number of triples i<j<k among n points.
std::size_t triple_count(std::size_t n);

Chirotope chirotope(const Configuration& config);

/// Identifies an order type up to orientation-preserving relabeling.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  auto operator<=>(const CanonicalCode&) const = default;
};

/// Lexicographically least sign string over the 2n(n-1) labelings obtained by
/// sorting the points angularly (both sweep directions) around each point,
/// starting from each other point. Throws DomainError(NotSimple).
CanonicalCode canonical_form(const Chirotope& chi);

/// Code of the order type up to reflection as well: min(code, code of mirror).
CanonicalCode canonical_form_unoriented(const Chirotope& chi);

/// Both configurations must be simple; throws DomainError(NotSimple) otherwise.
bool same_order_type(const Configuration& a, const Configuration& b);

/// Injection of pattern indices into host indices under which every pattern
/// triple keeps its sign, or nullopt. Exhaustive backtracking.
std::optional<std::vector<std::size_t>> contains_suborder(const Chirotope& host, const Chirotope& pattern);
std::optional<std::vector<std::size_t>> contains_suborder(const Configuration& host, const Chirotope& pattern);

}  // namespace inscribe
