#include "inscribe/quadratic.hpp"

#include "inscribe/error.hpp"

#include <cmath>
#include <vector>

namespace inscribe {

QuadraticNumber::QuadraticNumber(Rat a, Rat b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ <= 0) throw DomainError(ErrorCode::InvalidArgument, "quadratic field needs D > 0");
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) d_ = 1;
}

BigInt QuadraticNumber::common_field(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.d_ == 1) return y.d_;
  if (y.d_ == 1 || x.d_ == y.d_) return x.d_;
  throw DomainError(ErrorCode::InvalidArgument,
                    "mixing sqrt(" + x.d_.get_str() + ") and sqrt(" + y.d_.get_str() + ")");
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, QuadraticNumber::common_field(x, y)};
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, QuadraticNumber::common_field(x, y)};
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  BigInt d = QuadraticNumber::common_field(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  BigInt d = QuadraticNumber::common_field(x, y);
  Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
  if (norm == 0) throw DomainError(ErrorCode::Degenerate, "division by zero in quadratic field");
  QuadraticNumber num = x * y.conjugate();
  return {num.a_ / norm, num.b_ / norm, d};
}

int QuadraticNumber::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rat lhs = a_ * a_, rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double QuadraticNumber::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

std::string QuadraticNumber::str() const {
  if (b_ == 0) return to_string(a_);
  return to_string(a_) + " + " + to_string(b_) + "*sqrt(" + d_.get_str() + ")";
}

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 100000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p <= limit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

std::pair<Rat, BigInt> split_sqrt(const Rat& r) {
  if (r < 0) throw DomainError(ErrorCode::InvalidArgument, "square root of a negative number");
  if (r == 0) return {Rat(0), BigInt(1)};
  // sqrt(p/q) = sqrt(p*q)/q
  BigInt n = r.get_num() * r.get_den();
  BigInt outside = 1, squarefree = 1;
  for (unsigned long p : small_primes()) {
    if (n == 1) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++exponent;
    }
    BigInt pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), p, exponent / 2);
    outside *= pp;
    if (exponent % 2) squarefree *= p;
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    outside *= root;
  } else {
    squarefree *= n;
  }
  Rat s(outside, r.get_den());
  s.canonicalize();
  return {s, squarefree};
}

}  // namespace inscribe
