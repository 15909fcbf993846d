#include "anforge/numbers.hpp"

#include "anforge/errors.hpp"

#include <cmath>

namespace anforge {

BigRat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw DomainError("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigRat parse_rat(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw DomainError("empty rational literal");
    try {
        if (auto slash = s.find('/'); slash != std::string::npos) {
            return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        }
        if (auto dot = s.find('.'); dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            if (digits == "-" || digits == "+" || digits.empty())
                throw DomainError("malformed decimal '" + s + "'");
            if (digits.front() == '+') digits.erase(0, 1);
            const auto frac = s.size() - dot - 1;
            return make_rat(BigInt(digits), pow_int(10, frac));
        }
        if (s.front() == '+') s.erase(0, 1);
        return BigRat(BigInt(s));
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
}

std::string to_pq(const BigRat& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_compact(const BigRat& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return to_pq(q);
}

std::string to_decimal(const BigRat& q, int places)
{
    BigInt scale = pow_int(10, static_cast<unsigned long>(places));
    BigInt num = abs(q.get_num()) * scale;
    BigInt twice = 2 * num + q.get_den();
    BigInt rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * q.get_den()).get_mpz_t());
    std::string digits = rounded.get_str();
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string out;
    if (q < 0 && rounded != 0) out.push_back('-');
    out += digits.substr(0, digits.size() - places);
    if (places > 0) out += "." + digits.substr(digits.size() - places);
    return out;
}

BigInt pow_int(const BigInt& base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigRat pow_rat(const BigRat& base, unsigned long exp)
{
    BigRat r(pow_int(base.get_num(), exp), pow_int(base.get_den(), exp));
    r.canonicalize();
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt floor_pow(const BigRat& q, unsigned long exp)
{
    if (q < 0) throw DomainError("floor_pow of a negative base");
    BigRat p = pow_rat(q, exp);
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& z)
{
    return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

bool is_perfect_square(const BigRat& q)
{
    // canonical form: q is a square iff num and den are both squares
    return q >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

long double log_abs(const BigInt& z)
{
    if (z == 0) return -INFINITY;
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(mant))) + static_cast<long double>(exp) * std::log(2.0L);
}

long double log_abs(const BigRat& q)
{
    return log_abs(q.get_num()) - log_abs(q.get_den());
}

}  // namespace anforge
