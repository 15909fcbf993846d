#include "anforge/poly_ops.hpp"

#include <cmath>
#include <string>

namespace anforge {

RatPoly antiderivative_vanishing_at(const RatPoly& g, const BigRat& root)
{
    std::vector<BigRat> c(g.size() + 1);
    for (std::size_t k = 0; k < g.size(); ++k) c[k + 1] = g.coeffs()[k] / BigRat(static_cast<unsigned long>(k + 1));
    RatPoly f(std::move(c));
    BigRat shift = f(root);
    return f - RatPoly::constant(shift);
}

RatPoly ode_solve_xdx(const RatPoly& rhs)
{
    if (rhs.coeff(1) != 0)
        throw NoSolution("x*f' - f = g has no polynomial solution: coefficient of x in g is " +
                         to_compact(rhs.coeff(1)) + ", must be 0");
    // x*f' - f contributes (k-1) c_k x^k
    std::vector<BigRat> c(rhs.size());
    for (std::size_t k = 0; k < rhs.size(); ++k) {
        if (k == 1) continue;
        c[k] = rhs.coeffs()[k] / BigRat(static_cast<long>(k) - 1);
    }
    return RatPoly(std::move(c));
}

IntPoly scale_clear(const RatPoly& f, const BigInt& m)
{
    if (m <= 0) throw DomainError("scale_clear needs a positive multiplier");
    if (!f.is_monic()) throw DomainError("scale_clear needs a monic polynomial");
    const auto n = static_cast<std::size_t>(f.degree());
    std::vector<BigInt> out(n + 1);
    std::string bad;
    BigInt mpow = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        const std::size_t k = n - j;
        BigRat v = f.coeffs()[k] * mpow;
        if (v.get_den() != 1) {
            if (!bad.empty()) bad += ", ";
            bad += "x^" + std::to_string(k) + " -> " + to_pq(v);
        } else {
            out[k] = v.get_num();
        }
        mpow *= m;
    }
    if (!bad.empty()) throw IntegralityError("scale_clear by " + m.get_str() + " not integral: " + bad);
    return IntPoly(std::move(out));
}

namespace {

template <typename Coeff>
double height_impl(const Polynomial<Coeff>& f)
{
    if (!f.is_monic()) throw DomainError("height is defined for monic polynomials");
    const int n = f.degree();
    long double best = 0;
    for (int i = 1; i <= n; ++i) {
        const Coeff& c = f.coeffs()[static_cast<std::size_t>(n - i)];
        if (c == 0) continue;
        long double h = std::exp(log_abs(c) / i);
        if (h > best) best = h;
    }
    return static_cast<double>(best);
}

}  // namespace

double height(const IntPoly& f) { return height_impl(f); }
double height(const RatPoly& f) { return height_impl(f); }

bool coefficients_within(const RatPoly& f, std::span<const BigRat> weights)
{
    const int n = f.degree();
    for (int i = 1; i <= n; ++i) {
        const BigRat& c = f.coeffs()[static_cast<std::size_t>(n - i)];
        if (static_cast<std::size_t>(i) >= weights.size()) return c == 0;
        if (abs(c) > weights[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

}  // namespace anforge
