#include "inscribe/counting.hpp"

#include "inscribe/error.hpp"
#include "inscribe/order_type.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace inscribe {

BigInt hyperfactorial(int n) {
  if (n < 0) throw DomainError(ErrorCode::InvalidArgument, "hyperfactorial of a negative number");
  BigInt out = 1, fact = 1;
  for (int k = 1; k < n; ++k) {
    fact *= k;
    out *= fact;
  }
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt lozenge_count(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw DomainError(ErrorCode::InvalidArgument, "negative hexagon side");
  BigInt num = hyperfactorial(a + b + c) * hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c);
  BigInt den = hyperfactorial(a + b) * hyperfactorial(a + c) * hyperfactorial(b + c);
  return num / den;
}

namespace {

void extend_monotone(int i, int n1, int n2, const std::vector<int>& bound, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out, bool bound_is_upper) {
  if (i == n1) {
    out.push_back(cur);
    return;
  }
  int lo = i ? cur[i - 1] : 0, hi = n2;
  if (bound_is_upper) hi = std::min(hi, bound[i]);
  else lo = std::max(lo, bound[i]);
  for (int v = lo; v <= hi; ++v) {
    cur[i] = v;
    extend_monotone(i + 1, n1, n2, bound, cur, out, bound_is_upper);
  }
}

}  // namespace

std::vector<StaircasePair> enumerate_staircase_pairs(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw DomainError(ErrorCode::InvalidArgument, "negative degree");
  std::vector<std::vector<int>> lefts;
  std::vector<int> cur(n1), none(n1, 0);
  extend_monotone(0, n1, n2, none, cur, lefts, false);
  std::vector<StaircasePair> out;
  for (const auto& l : lefts) {
    std::vector<std::vector<int>> rights;
    extend_monotone(0, n1, n2, l, cur, rights, true);
    for (auto& r : rights) out.push_back({n1, n2, l, std::move(r)});
  }
  return out;
}

BigInt two_interior_pair_total(int n) {
  if (n < 0) throw DomainError(ErrorCode::InvalidArgument, "negative size");
  BigInt sum = 0;
  for (int m = 0; m <= n; ++m) sum += lozenge_count(2, m, n - m);
  if (sum * (n + 1) != binomial(2 * n + 2, n))
    throw DomainError(ErrorCode::InvalidArgument, "pair total disagrees with the closed form");
  return sum;
}

BigInt conowheel_count(int n) {
  if (n < 3) throw DomainError(ErrorCode::InvalidArgument, "conowheel count needs n >= 3");
  BigInt sum = 0;
  for (int k = 1; k <= n; k += 2) {
    if (n % k) continue;
    int phi = 0;
    for (int j = 1; j <= k; ++j) phi += std::gcd(j, k) == 1;
    BigInt pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 2, static_cast<unsigned long>(n / k));
    sum += phi * pow;
  }
  if (sum % (4 * n) != 0) throw DomainError(ErrorCode::InvalidArgument, "non-integral conowheel sum");
  BigInt tail;
  mpz_ui_pow_ui(tail.get_mpz_t(), 2, static_cast<unsigned long>((n - 3) / 2));
  return sum / (4 * n) + tail;
}

const char* to_string(Convention c) { return c == Convention::Oriented ? "oriented" : "unoriented"; }

BigInt CountReport::total(Convention c) const {
  const auto& v = by_interior[std::size_t(c)];
  return v[0] + v[1] + v[2];
}

bool CountReport::inequalities_hold() const {
  const auto& nn = by_interior[0];
  const int size = n + 2;
  return pairs_by_interior[0] <= nn[0] * size * (size - 1) && pairs_by_interior[1] <= nn[1] * 2 * size &&
         pairs_by_interior[2] <= 2 * nn[2];
}

bool CountReport::parameter_inequalities_hold() const {
  const auto& nn = by_interior[0];
  return pairs_by_interior[0] <= nn[0] * n * (n - 1) && pairs_by_interior[1] <= nn[1] * 2 * n &&
         pairs_by_interior[2] <= 2 * nn[2];
}

std::string CountReport::serialize() const {
  std::ostringstream out;
  const auto& primary = by_interior[std::size_t(convention)];
  out << "n=" << n << '\n'
      << "size=" << n + 2 << '\n'
      << "convention=" << to_string(convention) << '\n'
      << "N=" << total(convention) << '\n'
      << "N0=" << primary[0] << '\n'
      << "N1=" << primary[1] << '\n'
      << "N2=" << primary[2] << '\n';
  for (Convention c : {Convention::Oriented, Convention::Unoriented}) {
    const auto& v = by_interior[std::size_t(c)];
    out << "N_" << to_string(c) << '=' << total(c) << '\n';
    for (int i = 0; i < 3; ++i) out << "N" << i << '_' << to_string(c) << '=' << v[i] << '\n';
  }
  out << "staircasePairTotal=" << staircase_pair_total << '\n';
  for (int i = 0; i < 3; ++i) out << "L" << i << '=' << pairs_by_interior[i] << '\n';
  for (int i = 0; i < 3; ++i) out << "maxPairsPerType" << i << '=' << max_pairs_per_type[i] << '\n';
  out << "inequalities=" << (inequalities_hold() ? "hold" : "fail") << '\n'
      << "parameterInequalities=" << (parameter_inequalities_hold() ? "hold" : "fail") << '\n';
  return out.str();
}

CountReport enumerate_order_types_two_interior(int n, Convention convention) {
  if (n < 0) throw DomainError(ErrorCode::InvalidArgument, "negative size");
  CountReport report;
  report.n = n;
  report.convention = convention;
  report.staircase_pair_total = two_interior_pair_total(n);

  std::array<std::map<CanonicalCode, long>, 3> oriented;
  std::array<std::set<CanonicalCode>, 3> unoriented;
  for (int m = 0; m <= n; ++m) {
    for (const auto& pair : enumerate_staircase_pairs(m, n - m)) {
      Chirotope chi = chirotope(inscribe_staircase(pair));
      std::size_t interior = chi.interior_indices().size();
      if (interior > 2) throw DomainError(ErrorCode::TooManyInterior, "realization has too many interior points");
      report.pairs_by_interior[interior] += 1;
      CanonicalCode code = canonical_form(chi);
      ++oriented[interior][code];
      unoriented[interior].insert(std::min(code, canonical_form(chi.mirrored())));
    }
  }
  for (int i = 0; i < 3; ++i) {
    report.by_interior[0][i] = static_cast<unsigned long>(oriented[i].size());
    report.by_interior[1][i] = static_cast<unsigned long>(unoriented[i].size());
    long most = 0;
    for (const auto& [code, count] : oriented[i]) most = std::max(most, count);
    report.max_pairs_per_type[i] = most;
  }
  return report;
}

}  // namespace inscribe
