#include "anforge/polynomial.hpp"

#include <sstream>

namespace anforge {

RatPoly to_rat(const IntPoly& p)
{
    std::vector<BigRat> c;
    c.reserve(p.size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

IntPoly to_int(const RatPoly& p)
{
    std::vector<BigInt> c;
    c.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        const BigRat& v = p.coeffs()[k];
        if (v.get_den() != 1)
            throw IntegralityError("coefficient of x^" + std::to_string(k) + " is " + to_pq(v));
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

std::pair<IntPoly, BigInt> clear_denominators(const RatPoly& p)
{
    BigInt den = 1;
    for (const auto& v : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> c;
    c.reserve(p.size());
    for (const auto& v : p.coeffs()) c.push_back(v.get_num() * (den / v.get_den()));
    return {IntPoly(std::move(c)), den};
}

BigInt content(const IntPoly& p)
{
    BigInt g = 0;
    for (const auto& v : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

BigRat content(const RatPoly& p)
{
    if (p.is_zero()) return 0;
    auto [ip, den] = clear_denominators(p);
    return make_rat(content(ip), den);
}

IntPoly primitive_part(const IntPoly& p)
{
    if (p.is_zero()) return {};
    BigInt g = content(p);
    if (g == 1) return p;
    std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& p)
{
    return primitive_part(clear_denominators(p).first);
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<BigRat> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigRat> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto db = static_cast<std::size_t>(b.degree());
    const BigRat inv_lc = 1 / b.leading();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        BigRat q = rem[i] * inv_lc;
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
    const auto db = static_cast<std::size_t>(b.degree());
    const BigInt& lc = b.leading();
    for (std::size_t i = rem.size(); i-- > db;) {
        BigInt lead = rem[i];
        for (std::size_t j = 0; j < i; ++j) rem[j] *= lc;
        rem[i] = 0;
        if (lead != 0)
            for (std::size_t j = 0; j < db; ++j) rem[i - db + j] -= lead * b.coeffs()[j];
    }
    rem.resize(db);
    return IntPoly(std::move(rem));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) throw DomainError("exact division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw DomainError("exact division: divisor degree too large");
    std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), b.leading().get_mpz_t()))
            throw DomainError("exact division: not divisible");
        BigInt q = rem[i] / b.leading();
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
    }
    for (std::size_t j = 0; j < db; ++j)
        if (rem[j] != 0) throw DomainError("exact division: nonzero remainder");
    return IntPoly(std::move(quo));
}

RatPoly monic(const RatPoly& p)
{
    if (p.is_zero()) return {};
    return p * BigRat(1 / p.leading());
}

RatPoly gcd(const RatPoly& a, const RatPoly& b)
{
    RatPoly x = a;
    RatPoly y = b;
    while (!y.is_zero()) {
        RatPoly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

namespace {

template <typename Coeff, typename Fmt>
std::string render_impl(const Polynomial<Coeff>& p, Fmt fmt)
{
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Coeff& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        Coeff mag = abs(c);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (k == 0) {
            out << fmt(mag);
            continue;
        }
        if (mag != 1) out << fmt(mag) << '*';
        out << 'x';
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

}  // namespace

std::string render(const RatPoly& p)
{
    return render_impl(p, [](const BigRat& v) { return to_compact(v); });
}

std::string render(const IntPoly& p)
{
    return render_impl(p, [](const BigInt& v) { return v.get_str(); });
}

}  // namespace anforge
