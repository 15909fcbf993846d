#pragma once

#include "anforge/errors.hpp"
#include "anforge/numbers.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace anforge {

/// Dense univariate polynomial. coeffs()[k] is the coefficient of x^k and the
/// highest stored coefficient is never zero; the zero polynomial stores nothing.
template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Coeff> ascending) : c_(std::move(ascending)) { trim(); }

    Polynomial(std::initializer_list<Coeff> ascending) : c_(ascending) { trim(); }

    static Polynomial constant(const Coeff& value) { return Polynomial(std::vector<Coeff>{value}); }

    static Polynomial monomial(const Coeff& value, std::size_t power)
    {
        std::vector<Coeff> c(power + 1);
        c[power] = value;
        return Polynomial(std::move(c));
    }

    /// x - root
    static Polynomial linear_root(const Coeff& root) { return Polynomial({Coeff(-root), Coeff(1)}); }

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
    [[nodiscard]] std::span<const Coeff> coeffs() const noexcept { return c_; }

    [[nodiscard]] Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }

    [[nodiscard]] const Coeff& leading() const
    {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    /// Horner evaluation.
    template <typename Point>
    [[nodiscard]] Point operator()(const Point& x) const
    {
        Point acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Point(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Coeff& s)
    {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
    friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

    friend Polynomial operator-(Polynomial a)
    {
        for (auto& v : a.c_) v = -v;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<BigRat>;

template <typename Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& p)
{
    if (p.degree() < 1) return {};
    std::vector<Coeff> out(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
    return Polynomial<Coeff>(std::move(out));
}

template <typename Coeff>
Polynomial<Coeff> power(Polynomial<Coeff> base, unsigned exp)
{
    Polynomial<Coeff> acc = Polynomial<Coeff>::constant(Coeff(1));
    while (exp != 0) {
        if (exp & 1U) acc *= base;
        exp >>= 1U;
        if (exp != 0) base *= base;
    }
    return acc;
}

RatPoly to_rat(const IntPoly& p);
/// Throws IntegralityError when some coefficient is not an integer.
IntPoly to_int(const RatPoly& p);

/// Returns (P, d) with P integral primitive-or-not and p = P / d, d > 0 minimal.
std::pair<IntPoly, BigInt> clear_denominators(const RatPoly& p);

/// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
BigInt content(const IntPoly& p);
/// Positive rational c with p / c integral and primitive; 0 for the zero polynomial.
BigRat content(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);
/// p / content(p): integral, primitive, same sign of leading coefficient as p.
IntPoly primitive_part(const RatPoly& p);

/// Euclidean division over Q. Throws DomainError on division by zero.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
/// lc(b)^(deg a - deg b + 1) * a = q*b + r over Z.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Exact quotient a / b over Z; throws DomainError when b does not divide a.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

RatPoly monic(const RatPoly& p);
/// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Descending rendering, e.g. "x^6 - 36/5*x^5 + 39/2*x^4 - 24*x^3 + 12*x^2".
std::string render(const RatPoly& p);
std::string render(const IntPoly& p);

}  // namespace anforge
