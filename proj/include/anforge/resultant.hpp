#pragma once

#include "anforge/polynomial.hpp"

namespace anforge {

/// Res(f, g) by the subresultant remainder sequence over Z with content
/// management. Throws DomainError when either input is the zero polynomial.
BigInt resultant(const IntPoly& f, const IntPoly& g);
BigRat resultant(const RatPoly& f, const RatPoly& g);

/// Disc(f) = (-1)^(n(n-1)/2) / c0 * Res(f, f'), c0 the leading coefficient.
/// Throws DomainError for constant f.
BigInt discriminant(const IntPoly& f);
BigRat discriminant(const RatPoly& f);

}  // namespace anforge
