#pragma once

// Dense polynomials over Z/p for p < 2^32, used for distinct-degree
// factorization. Ascending coefficients, trimmed.

#include "anforge/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace anforge::modp {

using Coeffs = std::vector<std::uint64_t>;

class Field {
public:
    explicit Field(std::uint64_t p) : p_(p) {}

    [[nodiscard]] std::uint64_t p() const { return p_; }
    [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
    [[nodiscard]] std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    [[nodiscard]] std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }

    [[nodiscard]] Coeffs reduce(const IntPoly& f) const;
    void trim(Coeffs& a) const;
    /// a mod m, m monic.
    void rem(Coeffs& a, const Coeffs& m) const;
    [[nodiscard]] Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m) const;
    [[nodiscard]] Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& m) const;
    [[nodiscard]] Coeffs gcd(Coeffs a, Coeffs b) const;  ///< monic
    [[nodiscard]] Coeffs div(const Coeffs& a, const Coeffs& b) const;  ///< exact, b monic
    void make_monic(Coeffs& a) const;

private:
    std::uint64_t p_;
};

}  // namespace anforge::modp
