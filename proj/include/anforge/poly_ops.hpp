#pragma once

#include "anforge/polynomial.hpp"

namespace anforge {

/// F with F' = g and F(root) = 0. When (x - root) | g, also (x - root)^2 | F.
RatPoly antiderivative_vanishing_at(const RatPoly& g, const BigRat& root);

/// Unique f with x*f' - f = rhs and f'(0) = 0: c_k = b_k/(k-1) for k != 1,
/// c_1 = 0. Throws NoSolution when rhs has a nonzero x^1 coefficient.
RatPoly ode_solve_xdx(const RatPoly& rhs);

/// m^n * f(x/m) for monic f of degree n, verified integral.
/// Throws IntegralityError naming every non-integral coefficient.
IntPoly scale_clear(const RatPoly& f, const BigInt& m);

/// max over i >= 1 of |c_i|^(1/i), c_i the coefficient of x^(n-i); 0 for x^n.
/// Throws DomainError for non-monic input.
double height(const IntPoly& f);
double height(const RatPoly& f);

/// Exact coefficientwise bound |c_i| <= weights[i] for i = 1..n, with c_i
/// indexed as in height(); weights[0] is unused.
bool coefficients_within(const RatPoly& f, std::span<const BigRat> weights);

}  // namespace anforge
