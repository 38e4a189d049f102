#pragma once

#include "inscribe/rational.hpp"

#include <string>

namespace inscribe {

/// a + b*sqrt(D) with D a positive integer; D == 1 means the value is
/// rational (and b == 0). Arithmetic is only defined within one field.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rat a) : a_(std::move(a)) {}  // NOLINT: rationals embed implicitly
  QuadraticNumber(Rat a, Rat b, BigInt d);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const BigInt& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadraticNumber conjugate() const { return {a_, -b_, d_}; }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  /// Throws DomainError(Degenerate) on division by zero.
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
  QuadraticNumber operator-() const { return {-a_, -b_, d_}; }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() == 0; }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }

  int sign() const;
  double to_double() const;
  std::string str() const;

 private:
  static BigInt common_field(const QuadraticNumber& x, const QuadraticNumber& y);

  Rat a_ = 0;
  Rat b_ = 0;
  BigInt d_ = 1;
};

/// Writes r >= 0 as s*sqrt(D): returns {s, D} with D free of squares of
/// primes below 10^5 and D == 1 whenever r is a perfect square.
std::pair<Rat, BigInt> split_sqrt(const Rat& r);

}  // namespace inscribe
