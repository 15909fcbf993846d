#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace anforge {

using BigInt = mpz_class;
/// Always canonical: gcd(|num|, den) = 1 and den >= 1.
using BigRat = mpq_class;

/// Builds num/den in canonical form. Throws DomainError on den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);

/// Parses "p", "p/q", or a finite decimal such as "2.5" or "-0.01" exactly.
BigRat parse_rat(std::string_view text);

/// "p/q" always, including "0/1" and "5/1".
std::string to_pq(const BigRat& q);
/// "p" for integers, "p/q" otherwise.
std::string to_compact(const BigRat& q);
/// Fixed-point decimal rendering rounded half away from zero.
std::string to_decimal(const BigRat& q, int places);

BigInt pow_int(const BigInt& base, unsigned long exp);
BigRat pow_rat(const BigRat& base, unsigned long exp);
BigInt factorial(unsigned long n);
/// floor(q^e) for q >= 0.
BigInt floor_pow(const BigRat& q, unsigned long exp);

/// True iff q = s^2 for a rational s. Zero counts as a square.
bool is_perfect_square(const BigRat& q);
bool is_perfect_square(const BigInt& z);

/// Conversion that survives values beyond double's exponent range.
long double log_abs(const BigInt& z);
long double log_abs(const BigRat& q);

}  // namespace anforge
