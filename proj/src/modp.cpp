#include "modp.hpp"

#include <utility>

namespace anforge::modp {

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const
{
    std::uint64_t acc = 1 % p_;
    a %= p_;
    while (e != 0) {
        if (e & 1U) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return acc;
}

Coeffs Field::reduce(const IntPoly& f) const
{
    Coeffs out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out[k] = mpz_fdiv_ui(f.coeffs()[k].get_mpz_t(), p_);
    trim(out);
    return out;
}

void Field::trim(Coeffs& a) const
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void Field::make_monic(Coeffs& a) const
{
    if (a.empty()) return;
    const std::uint64_t li = inv(a.back());
    for (auto& v : a) v = mul(v, li);
}

void Field::rem(Coeffs& a, const Coeffs& m) const
{
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t j = 0; j < dm; ++j) a[shift + j] = sub(a[shift + j], mul(lead, m[j]));
        a.pop_back();
    }
    trim(a);
}

Coeffs Field::mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m) const
{
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
    }
    rem(out, m);
    return out;
}

Coeffs Field::powmod(Coeffs base, std::uint64_t e, const Coeffs& m) const
{
    Coeffs acc{1};
    rem(acc, m);
    rem(base, m);
    while (e != 0) {
        if (e & 1U) acc = mulmod(acc, base, m);
        e >>= 1U;
        if (e != 0) base = mulmod(base, base, m);
    }
    return acc;
}

Coeffs Field::gcd(Coeffs a, Coeffs b) const
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic(b);
        rem(a, b);
        std::swap(a, b);
    }
    make_monic(a);
    return a;
}

Coeffs Field::div(const Coeffs& a, const Coeffs& b) const
{
    Coeffs r = a;
    const std::size_t db = b.size() - 1;
    Coeffs q(a.size() - db, 0);
    for (std::size_t i = r.size(); i-- > db;) {
        const std::uint64_t lead = r[i];
        q[i - db] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(lead, b[j]));
    }
    trim(q);
    return q;
}

}  // namespace anforge::modp
