#include "inscribe/order_type.hpp"

#include "inscribe/error.hpp"

#include <algorithm>
#include <numeric>

namespace inscribe {

std::size_t triple_count(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

Chirotope::Chirotope(std::vector<std::string> labels, const std::vector<std::int8_t>& signs)
    : n_(labels.size()), labels_(std::move(labels)), table_(n_ * n_ * n_, 0) {
  if (signs.size() != triple_count(n_))
    throw DomainError(ErrorCode::InvalidArgument, "sign count does not match C(n,3)");
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k) {
        std::int8_t s = signs[pos++];
        if (s < -1 || s > 1) throw DomainError(ErrorCode::InvalidArgument, "sign out of range");
        auto put = [&](std::size_t a, std::size_t b, std::size_t c, std::int8_t v) { table_[(a * n_ + b) * n_ + c] = v; };
        put(i, j, k, s);
        put(j, k, i, s);
        put(k, i, j, s);
        put(j, i, k, -s);
        put(i, k, j, -s);
        put(k, j, i, -s);
      }
}

std::vector<std::int8_t> Chirotope::lex_signs() const {
  std::vector<std::int8_t> out;
  out.reserve(triple_count(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k) out.push_back(sign(i, j, k));
  return out;
}

std::string Chirotope::sign_string() const {
  std::string out;
  for (auto s : lex_signs()) out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
  return out;
}

bool Chirotope::is_simple() const {
  auto s = lex_signs();
  return std::none_of(s.begin(), s.end(), [](std::int8_t v) { return v == 0; });
}

Chirotope Chirotope::mirrored() const {
  auto s = lex_signs();
  for (auto& v : s) v = static_cast<std::int8_t>(-v);
  return Chirotope(labels_, s);
}

Chirotope Chirotope::restricted(const std::vector<std::size_t>& subset) const {
  std::vector<std::string> labels;
  for (auto i : subset) labels.push_back(labels_[i]);
  std::vector<std::int8_t> s;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      for (std::size_t c = b + 1; c < subset.size(); ++c)
        s.push_back(static_cast<std::int8_t>(sign(subset[a], subset[b], subset[c])));
  return Chirotope(std::move(labels), s);
}

std::vector<std::size_t> Chirotope::interior_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n_; ++x) {
    bool inside = false;
    for (std::size_t i = 0; i < n_ && !inside; ++i) {
      if (i == x) continue;
      for (std::size_t j = i + 1; j < n_ && !inside; ++j) {
        if (j == x) continue;
        for (std::size_t k = j + 1; k < n_ && !inside; ++k) {
          if (k == x) continue;
          int s = sign(i, j, k);
          inside = s != 0 && sign(i, j, x) == s && sign(j, k, x) == s && sign(k, i, x) == s;
        }
      }
    }
    if (inside) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Chirotope::extreme_indices() const {
  auto interior = interior_indices();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n_; ++x)
    if (!std::binary_search(interior.begin(), interior.end(), x)) out.push_back(x);
  return out;
}

Chirotope chirotope(const Configuration& config) {
  const std::size_t n = config.size();
  std::vector<std::int8_t> signs;
  signs.reserve(triple_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        signs.push_back(static_cast<std::int8_t>(orient(config[i].p, config[j].p, config[k].p)));
  return Chirotope(config.labels(), signs);
}

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

namespace {

// Labeling that starts at `pivot`, then `first`, then the remaining points
// sorted by angle around `pivot` measured from the ray towards `first`.
std::vector<std::size_t> angular_labeling(const Chirotope& chi, std::size_t pivot, std::size_t first, int dir) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < chi.size(); ++i)
    if (i != pivot && i != first) rest.push_back(i);
  auto half = [&](std::size_t a) { return dir * chi.sign(pivot, first, a) > 0 ? 0 : 1; };
  std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return dir * chi.sign(pivot, a, b) > 0;
  });
  std::vector<std::size_t> order{pivot, first};
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

}  // namespace

CanonicalCode canonical_form(const Chirotope& chi) {
  const std::size_t n = chi.size();
  if (!chi.is_simple()) throw DomainError(ErrorCode::NotSimple, "canonical form needs a simple chirotope");
  if (n > 255) throw DomainError(ErrorCode::InvalidArgument, "too many points for a canonical code");
  const std::size_t bits = triple_count(n);
  const std::size_t nbytes = (bits + 7) / 8;
  if (nbytes == 0) return CanonicalCode{{static_cast<std::uint8_t>(n)}};

  std::vector<std::uint8_t> best, cand(nbytes);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      for (int dir : {1, -1}) {
        auto order = angular_labeling(chi, p, q, dir);
        std::fill(cand.begin(), cand.end(), 0);
        // Build bit by bit; abandon as soon as a completed byte exceeds best.
        bool worse = false, better = best.empty();
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n && !worse; ++i)
          for (std::size_t j = i + 1; j < n && !worse; ++j)
            for (std::size_t k = j + 1; k < n && !worse; ++k, ++pos) {
              if (chi.sign(order[i], order[j], order[k]) > 0) cand[pos >> 3] |= std::uint8_t(0x80u >> (pos & 7));
              if ((pos & 7) == 7 && !better) {
                std::size_t b = pos >> 3;
                if (cand[b] > best[b]) worse = true;
                else if (cand[b] < best[b]) better = true;
              }
            }
        if (worse) continue;
        if (!better && cand.back() > best.back()) continue;
        if (better || cand < best) best = cand;
      }
    }
  }
  CanonicalCode code;
  code.bytes.push_back(static_cast<std::uint8_t>(n));
  code.bytes.insert(code.bytes.end(), best.begin(), best.end());
  return code;
}

CanonicalCode canonical_form_unoriented(const Chirotope& chi) {
  return std::min(canonical_form(chi), canonical_form(chi.mirrored()));
}

bool same_order_type(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(chirotope(a)) == canonical_form(chirotope(b));
}

namespace {

class Embedder {
 public:
  Embedder(const Chirotope& host, const Chirotope& pattern) : host_(host), pattern_(pattern) {
    auto hi = host.interior_indices();
    host_interior_.assign(host.size(), false);
    for (auto i : hi) host_interior_[i] = true;
    auto pi = pattern.interior_indices();
    pattern_interior_.assign(pattern.size(), false);
    for (auto i : pi) pattern_interior_[i] = true;
    // Interior pattern points first: they have the fewest candidates.
    for (auto i : pi) order_.push_back(i);
    for (std::size_t i = 0; i < pattern.size(); ++i)
      if (!pattern_interior_[i]) order_.push_back(i);
    image_.assign(pattern.size(), 0);
    used_.assign(host.size(), false);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (pattern_.size() > host_.size()) return std::nullopt;
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    std::size_t x = order_[depth];
    for (std::size_t h = 0; h < host_.size(); ++h) {
      if (used_[h]) continue;
      // A point inside a pattern triangle lands inside the image triangle.
      if (pattern_interior_[x] && !host_interior_[h]) continue;
      if (!consistent(depth, x, h)) continue;
      used_[h] = true;
      image_[x] = h;
      if (extend(depth + 1)) return true;
      used_[h] = false;
    }
    return false;
  }

  bool consistent(std::size_t depth, std::size_t x, std::size_t h) const {
    for (std::size_t a = 0; a < depth; ++a)
      for (std::size_t b = a + 1; b < depth; ++b) {
        std::size_t pa = order_[a], pb = order_[b];
        if (pattern_.sign(pa, pb, x) != host_.sign(image_[pa], image_[pb], h)) return false;
      }
    return true;
  }

  const Chirotope& host_;
  const Chirotope& pattern_;
  std::vector<bool> host_interior_, pattern_interior_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> contains_suborder(const Chirotope& host, const Chirotope& pattern) {
  return Embedder(host, pattern).run();
}

std::optional<std::vector<std::size_t>> contains_suborder(const Configuration& host, const Chirotope& pattern) {
  return contains_suborder(chirotope(host), pattern);
}

}  // namespace inscribe
