#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace inscribe {

/// Exact rational number. gmp keeps it canonical (lowest terms, den > 0)
/// after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Formats as "num/den", always with an explicit denominator.
std::string to_string(const Rat& r);
std::string to_string(const BigInt& z);

/// Accepts "num/den" or "num" (optionally signed). Throws DomainError(Parse).
Rat parse_rat(std::string_view text);

int sign(const Rat& r);
int sign(const BigInt& z);

/// Continued-fraction convergents of x, at most `depth` of them.
std::vector<Rat> convergents(double x, int depth);

/// Nearest rational with the given power-of-two denominator.
Rat dyadic(double x, int bits);

}  // namespace inscribe
