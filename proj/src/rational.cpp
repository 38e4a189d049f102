#include "inscribe/rational.hpp"

#include "inscribe/error.hpp"

#include <cmath>
#include <limits>

namespace inscribe {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::CoverageError: return "CoverageError";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::TooManyInterior: return "TooManyInterior";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NotConvexPosition: return "NotConvexPosition";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::SignConditionViolated: return "SignConditionViolated";
    case ErrorCode::EmptyTriangle: return "EmptyTriangle";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::InvalidB: return "InvalidB";
    case ErrorCode::NotConvexInterior: return "NotConvexInterior";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
    throw DomainError(ErrorCode::Parse, "bad rational '" + std::string(text) + "'");
  BigInt n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw DomainError(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

int sign(const Rat& r) { return sgn(r); }
int sign(const BigInt& z) { return sgn(z); }

std::vector<Rat> convergents(double x, int depth) {
  std::vector<Rat> out;
  if (!std::isfinite(x)) return out;
  // p_{k} = a_k p_{k-1} + p_{k-2}
  BigInt p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  double rest = x;
  for (int k = 0; k < depth; ++k) {
    double a = std::floor(rest);
    if (std::abs(a) > 1e15) break;
    BigInt ai(static_cast<long>(a));
    BigInt p = ai * p_prev + p_prev2;
    BigInt q = ai * q_prev + q_prev2;
    Rat c(p, q);
    c.canonicalize();
    out.push_back(c);
    p_prev2 = p_prev; p_prev = p;
    q_prev2 = q_prev; q_prev = q;
    double frac = rest - a;
    if (frac < 1e-15) break;
    rest = 1.0 / frac;
  }
  return out;
}

Rat dyadic(double x, int bits) {
  double scaled = std::ldexp(x, bits);
  BigInt num;
  mpz_set_d(num.get_mpz_t(), std::nearbyint(scaled));
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(bits));
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace inscribe
