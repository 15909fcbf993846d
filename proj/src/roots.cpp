#include "anforge/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace anforge {

long double to_long_double(const BigInt& z)
{
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

long double to_long_double(const BigRat& q)
{
    long en = 0;
    long ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::ldexp(static_cast<long double>(mn) / md, static_cast<int>(en - ed));
}

namespace {

struct Eval {
    Complex value;
    Complex slope;
};

Eval horner(const std::vector<long double>& c, Complex z)
{
    Complex v = 0;
    Complex d = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + v;
        v = v * z + *it;
    }
    return {v, d};
}

}  // namespace

std::vector<Complex> complex_roots(const RatPoly& p)
{
    if (p.degree() < 1) return {};
    const auto n = static_cast<std::size_t>(p.degree());
    std::vector<long double> c(n + 1);
    const long double lead = to_long_double(p.leading());
    for (std::size_t k = 0; k <= n; ++k) c[k] = to_long_double(p.coeffs()[k]) / lead;

    // Fujiwara bound on root moduli
    long double radius = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        long double a = std::fabs(c[n - i]);
        if (i == n) a /= 2;
        radius = std::max(radius, std::pow(a, 1.0L / static_cast<long double>(i)));
    }
    radius = 2 * std::max(radius, 1e-3L);

    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        long double angle = 2 * std::numbers::pi_v<long double> * (static_cast<long double>(k) + 0.25L) /
                            static_cast<long double>(n);
        z[k] = std::polar(radius * 0.5L, angle);
    }

    for (int iter = 0; iter < 500; ++iter) {
        long double worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            auto [v, d] = horner(c, z[k]);
            if (v == Complex(0)) continue;
            Complex ratio = v / d;
            Complex repulsion = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0L / (z[k] - z[j]);
            Complex step = ratio / (1.0L - ratio * repulsion);
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
        }
        if (worst < 1e-17L) break;
    }
    for (auto& root : z) {
        for (int iter = 0; iter < 3; ++iter) {
            auto [v, d] = horner(c, root);
            if (d == Complex(0)) break;
            root -= v / d;
        }
    }
    return z;
}

}  // namespace anforge
