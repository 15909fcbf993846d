#pragma once

#include "anforge/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace anforge {

enum class Parity { Even, Odd };

Parity parity_of(int n);
std::string to_string(Parity p);

/// r = n/2 - 1 for even n, (n-1)/2 for odd n.
int family_rank(int n);
/// Number of free alpha_i: r for even n, r - 1 for odd n.
std::size_t alpha_count(int n);

/// One integer parameter tuple (alpha_1..alpha_k, alpha, tau) of the family.
struct Specialization {
    int n = 0;
    Parity parity = Parity::Even;
    std::vector<std::int64_t> alphas;
    std::int64_t alpha = 0;
    std::int64_t tau = 0;

    /// tau = 0 puts a double root at x = alpha (gamma = 0 in the even case).
    [[nodiscard]] bool degenerate() const noexcept { return tau == 0; }

    friend bool operator==(const Specialization&, const Specialization&) = default;
};

/// Throws DomainError naming the violated requirement.
void validate(const Specialization& spec);
std::string describe(const Specialization& spec);

struct ConstructionRecord {
    Specialization spec;
    RatPoly h;              ///< h, or h-bar (a_r -> 2 a_{r-1} a) for odd n
    RatPoly g;              ///< g, or g-bar for odd n
    RatPoly f_tilde;
    BigRat gamma;
    RatPoly f_tilde_gamma;  ///< f~ + gamma (even) or f~ + gamma*x (odd)
    IntPoly f_gamma;        ///< (n!)^n f~_gamma(x / n!), monic integral
};

/// Even n >= 6: g = n(x - a)h^2, f~ the antiderivative with (x - a)^2 | f~,
/// gamma = (-1)^(n/2) tau^2.
ConstructionRecord build_even(const Specialization& spec);

/// Odd n >= 7: f~ solves x f~' - f~ = g-bar with f~'(0) = 0,
/// gamma = (-1)^r tau^2 - f~'(alpha), f~_gamma = f~ + gamma x.
ConstructionRecord build_odd(const Specialization& spec);

/// Dispatches on spec.parity.
ConstructionRecord build(const Specialization& spec);

/// The even reference h = (x-1)(x-2)...(x-r), a = 0.
struct ReferenceEven {
    int n = 0;
    RatPoly h;
    RatPoly g;
    RatPoly f_tilde;
    std::vector<BigRat> values;  ///< f~(1), ..., f~(r)

    /// The integer specialization realizing this reference with the given tau.
    [[nodiscard]] Specialization specialize(std::int64_t tau) const;
};

/// Throws InvariantViolation if the values f~(i) are not nonzero and distinct.
ReferenceEven reference_even(int n);

/// The odd reference with beta_i = 1 + i*eps and 2 a sum(1/beta_i) = -1.
struct ReferenceOdd {
    int n = 0;
    BigRat perturbation;
    std::vector<BigRat> betas;
    BigRat alpha;
    RatPoly g_bar;
    RatPoly p_tilde;
    std::vector<BigRat> slopes_at_betas;  ///< P~'(beta_i)
    BigRat slope_at_alpha;                ///< P~'(alpha)

    [[nodiscard]] bool slopes_pairwise_distinct() const;
    /// P~ + ((-1)^r tau^2 - P~'(alpha)) x
    [[nodiscard]] RatPoly instantiate(const BigRat& tau) const;
};

ReferenceOdd reference_odd(int n, const BigRat& perturbation);

/// Box-wide coefficient bound: for every specialization with |alpha_i| <= Y^i,
/// |alpha| <= Y and tau in its box, coefficient c_i of f~_gamma satisfies
/// |c_i| <= weights[i] * Y^i. Derived from majorant series of the construction.
struct HeightBound {
    int n = 0;
    Parity parity = Parity::Even;
    std::vector<BigRat> weights;  ///< index 1..n

    /// c(n) = max weights[i]^(1/i); height(f~_gamma) <= c(n) * Y.
    [[nodiscard]] double constant() const;
    /// weights[i] * Y^i, exact.
    [[nodiscard]] std::vector<BigRat> scaled(const BigRat& y) const;
    /// log of (4 n! c(n) Y)^(n(n-1)), an upper bound on log |Disc(f_gamma)|.
    [[nodiscard]] long double log_disc_bound(const BigRat& y) const;
};

HeightBound height_bound(int n);

}  // namespace anforge
