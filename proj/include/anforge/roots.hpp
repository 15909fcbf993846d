#pragma once

#include "anforge/polynomial.hpp"

#include <complex>
#include <vector>

namespace anforge {

using Complex = std::complex<long double>;

long double to_long_double(const BigInt& z);
long double to_long_double(const BigRat& q);

/// All complex roots with multiplicity (Aberth-Ehrlich iteration followed by
/// Newton polishing). Numerical only; callers verify anything they certify.
std::vector<Complex> complex_roots(const RatPoly& p);

}  // namespace anforge
