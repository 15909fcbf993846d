#include "anforge/resultant.hpp"

#include <utility>

namespace anforge {

namespace {

BigInt lc_power(const BigInt& v, long exp)
{
    return pow_int(v, static_cast<unsigned long>(exp));
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");

    IntPoly a = f;
    IntPoly b = g;
    const BigInt ca = content(a);
    const BigInt cb = content(b);
    BigInt t = lc_power(ca, b.degree()) * lc_power(cb, a.degree());
    a = primitive_part(a);
    b = primitive_part(b);

    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    }
    if (b.degree() == 0) return sign * t * lc_power(b.leading(), a.degree());

    BigInt g_acc = 1;
    BigInt h_acc = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) return 0;
        a = std::move(b);
        // r is divisible by g * h^delta (subresultant theorem)
        BigInt divisor = g_acc * lc_power(h_acc, delta);
        std::vector<BigInt> rc(r.coeffs().begin(), r.coeffs().end());
        for (auto& v : rc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
        b = IntPoly(std::move(rc));
        g_acc = a.leading();
        // h <- h^(1-delta) * g^delta, an exact division when delta > 1
        if (delta > 0) {
            BigInt num = lc_power(g_acc, delta);
            BigInt den = lc_power(h_acc, delta - 1);
            mpz_divexact(h_acc.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() == 0) {
            const long da = a.degree();
            BigInt num = lc_power(b.leading(), da);
            BigInt den = lc_power(h_acc, da - 1);
            BigInt h_final;
            mpz_divexact(h_final.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return sign * t * h_final;
        }
    }
}

BigRat resultant(const RatPoly& f, const RatPoly& g)
{
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
    auto [fi, df] = clear_denominators(f);
    auto [gi, dg] = clear_denominators(g);
    // Res(F/df, G/dg) = Res(F, G) / (df^deg g * dg^deg f)
    BigInt den = lc_power(df, g.degree()) * lc_power(dg, f.degree());
    return make_rat(resultant(fi, gi), den);
}

BigInt discriminant(const IntPoly& f)
{
    if (f.degree() < 1) throw DomainError("discriminant of a constant polynomial");
    const long n = f.degree();
    BigInt res = resultant(f, derivative(f));
    BigInt out;
    mpz_divexact(out.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    if (((n * (n - 1)) / 2) % 2 != 0) out = -out;
    return out;
}

BigRat discriminant(const RatPoly& f)
{
    if (f.degree() < 1) throw DomainError("discriminant of a constant polynomial");
    const long n = f.degree();
    BigRat out = resultant(f, derivative(f)) / f.leading();
    if (((n * (n - 1)) / 2) % 2 != 0) out = -out;
    return out;
}

}  // namespace anforge
