#pragma once

// Test-only reference computations. Nothing here calls the subresultant
// code: determinants are plain Gaussian elimination over Q.

#include "anforge/polynomial.hpp"
#include "anforge/roots.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using anforge::BigInt;
using anforge::BigRat;
using anforge::IntPoly;
using anforge::RatPoly;

using Matrix = std::vector<std::vector<BigRat>>;

inline BigRat determinant(Matrix m)
{
    const std::size_t n = m.size();
    BigRat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            BigRat factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

/// det of the Sylvester matrix; for deg f = deg g = 0 returns 1.
inline BigRat sylvester_resultant(const RatPoly& f, const RatPoly& g)
{
    const auto n = static_cast<std::size_t>(f.degree());
    const auto m = static_cast<std::size_t>(g.degree());
    const std::size_t size = n + m;
    if (size == 0) return 1;
    Matrix s(size, std::vector<BigRat>(size, BigRat(0)));
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) s[row][row + k] = f.coeffs()[n - k];
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) s[m + row][row + k] = g.coeffs()[m - k];
    return determinant(std::move(s));
}

inline Matrix identity(std::size_t n)
{
    Matrix id(n, std::vector<BigRat>(n, BigRat(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

inline Matrix multiply(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.size();
    Matrix out(n, std::vector<BigRat>(n, BigRat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

/// prod over roots beta of q (with multiplicity) of p(beta) = det p(C_q),
/// C_q the companion matrix of q / lc(q).
inline BigRat product_over_roots(const RatPoly& p, const RatPoly& q)
{
    const auto d = static_cast<std::size_t>(q.degree());
    if (d == 0) return 1;
    Matrix comp(d, std::vector<BigRat>(d, BigRat(0)));
    for (std::size_t i = 1; i < d; ++i) comp[i][i - 1] = 1;
    for (std::size_t i = 0; i < d; ++i) comp[i][d - 1] = -q.coeffs()[i] / q.leading();
    // Horner in the matrix ring
    Matrix acc(d, std::vector<BigRat>(d, BigRat(0)));
    for (int k = p.degree(); k >= 0; --k) {
        acc = multiply(acc, comp);
        for (std::size_t i = 0; i < d; ++i) acc[i][i] += p.coeffs()[static_cast<std::size_t>(k)];
    }
    return determinant(std::move(acc));
}

/// (-1)^(n(n-1)/2) n^n c0^(n-1) prod_{f'(beta)=0} f(beta), evaluated by
/// elimination in the companion algebra of f'.
inline BigRat discriminant_by_critical_values(const RatPoly& f)
{
    const long n = f.degree();
    BigRat out = anforge::pow_rat(BigRat(n), static_cast<unsigned long>(n)) *
                 anforge::pow_rat(f.leading(), static_cast<unsigned long>(n - 1)) *
                 product_over_roots(f, anforge::derivative(f));
    if (((n * (n - 1)) / 2) % 2 != 0) out = -out;
    return out;
}

/// c0^(2n-2) prod_{i<j} (a_i - a_j)^2 in floating point.
inline anforge::Complex discriminant_by_roots(const RatPoly& f)
{
    auto roots = anforge::complex_roots(f);
    anforge::Complex acc = 1;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) acc *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    const long double lc = anforge::to_long_double(f.leading());
    return acc * std::pow(lc, 2.0L * static_cast<long double>(f.degree()) - 2.0L);
}

inline IntPoly random_int_poly(std::mt19937_64& rng, int degree, long bound, bool monic = false)
{
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = coef(rng);
    if (monic) {
        c.back() = 1;
    } else {
        while (c.back() == 0) c.back() = coef(rng);
    }
    return IntPoly(std::move(c));
}

/// Degrees of the irreducible factors of f mod p by trial division with every
/// monic polynomial of increasing degree. Squarefree f only; small p.
inline std::vector<int> factor_degrees_brute(const IntPoly& f, long p)
{
    using Vec = std::vector<long>;
    auto mod = [p](const BigInt& v) {
        BigInt r = v % p;
        if (r < 0) r += p;
        return r.get_si();
    };
    auto inv = [p](long a) {
        long r = 1;
        for (long e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    Vec rest;
    for (const auto& c : f.coeffs()) rest.push_back(mod(c));
    const long lc_inv = inv(rest.back());
    for (auto& c : rest) c = c * lc_inv % p;
    // divides rest by monic d; returns true and updates rest when exact
    auto try_divide = [p](Vec& num, const Vec& d) {
        Vec r = num;
        const std::size_t dd = d.size() - 1;
        Vec quot(r.size() - dd, 0);
        for (std::size_t k = r.size(); k-- > dd;) {
            const long c = r[k];
            quot[k - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] = ((r[k - dd + j] - c * d[j]) % p + p) % p;
        }
        for (std::size_t k = 0; k < dd; ++k)
            if (r[k] != 0) return false;
        num = quot;
        return true;
    };
    std::vector<int> out;
    for (int deg = 1; 2 * deg <= static_cast<int>(rest.size()) - 1; ++deg) {
        long total = 1;
        for (int i = 0; i < deg; ++i) total *= p;
        for (long code = 0; code < total && 2 * deg <= static_cast<int>(rest.size()) - 1; ++code) {
            Vec d(static_cast<std::size_t>(deg) + 1, 0);
            d.back() = 1;
            long c = code;
            for (int i = 0; i < deg; ++i, c /= p) d[static_cast<std::size_t>(i)] = c % p;
            if (try_divide(rest, d)) out.push_back(deg);
        }
    }
    if (rest.size() > 1) out.push_back(static_cast<int>(rest.size()) - 1);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace oracle
