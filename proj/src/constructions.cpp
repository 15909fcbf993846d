#include "anforge/constructions.hpp"

#include "anforge/poly_ops.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace anforge {

Parity parity_of(int n) { return n % 2 == 0 ? Parity::Even : Parity::Odd; }

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

int family_rank(int n) { return n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2; }

std::size_t alpha_count(int n)
{
    return static_cast<std::size_t>(n % 2 == 0 ? family_rank(n) : family_rank(n) - 1);
}

void validate(const Specialization& spec)
{
    if (spec.parity == Parity::Even && spec.n < 6)
        throw DomainError("even construction needs n >= 6, got n = " + std::to_string(spec.n));
    if (spec.parity == Parity::Odd && spec.n < 7)
        throw DomainError("odd construction needs n >= 7, got n = " + std::to_string(spec.n));
    if (spec.parity != parity_of(spec.n))
        throw DomainError("parity " + to_string(spec.parity) + " does not match n = " + std::to_string(spec.n));
    if (spec.alphas.size() != alpha_count(spec.n))
        throw DomainError("n = " + std::to_string(spec.n) + " needs " + std::to_string(alpha_count(spec.n)) +
                          " alphas, got " + std::to_string(spec.alphas.size()));
}

std::string describe(const Specialization& spec)
{
    std::ostringstream out;
    out << "n=" << spec.n << " " << to_string(spec.parity) << " alphas=(";
    for (std::size_t i = 0; i < spec.alphas.size(); ++i) out << (i ? "," : "") << spec.alphas[i];
    out << ") alpha=" << spec.alpha << " tau=" << spec.tau;
    return out.str();
}

namespace {

BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

/// x^r + c_1 x^(r-1) + ... + c_r
RatPoly monic_from_tail(const std::vector<BigRat>& tail)
{
    const std::size_t r = tail.size();
    std::vector<BigRat> c(r + 1);
    c[r] = 1;
    for (std::size_t i = 0; i < r; ++i) c[r - 1 - i] = tail[i];
    return RatPoly(std::move(c));
}

RatPoly x_poly() { return RatPoly::monomial(BigRat(1), 1); }

}  // namespace

ConstructionRecord build_even(const Specialization& spec)
{
    validate(spec);
    if (spec.parity != Parity::Even) throw DomainError("build_even needs even n");
    const int n = spec.n;

    std::vector<BigRat> tail;
    for (auto a : spec.alphas) tail.emplace_back(to_big(a));
    ConstructionRecord rec;
    rec.spec = spec;
    rec.h = monic_from_tail(tail);
    const BigRat a(to_big(spec.alpha));
    rec.g = RatPoly::linear_root(a) * (rec.h * rec.h) * BigRat(n);
    rec.f_tilde = antiderivative_vanishing_at(rec.g, a);
    BigRat t2 = BigRat(to_big(spec.tau) * to_big(spec.tau));
    rec.gamma = (n / 2) % 2 == 0 ? t2 : BigRat(-t2);
    rec.f_tilde_gamma = rec.f_tilde + RatPoly::constant(rec.gamma);
    rec.f_gamma = scale_clear(rec.f_tilde_gamma, factorial(static_cast<unsigned long>(n)));
    return rec;
}

ConstructionRecord build_odd(const Specialization& spec)
{
    validate(spec);
    if (spec.parity != Parity::Odd) throw DomainError("build_odd needs odd n");
    const int n = spec.n;
    const int r = family_rank(n);

    std::vector<BigRat> tail;
    for (auto a : spec.alphas) tail.emplace_back(to_big(a));
    // a_r -> 2 a_{r-1} a
    tail.emplace_back(2 * to_big(spec.alphas.back()) * to_big(spec.alpha));

    ConstructionRecord rec;
    rec.spec = spec;
    rec.h = monic_from_tail(tail);
    const BigRat a(to_big(spec.alpha));
    rec.g = RatPoly::linear_root(a) * (rec.h * rec.h) * BigRat(n - 1);
    rec.f_tilde = ode_solve_xdx(rec.g);
    BigRat t2 = BigRat(to_big(spec.tau) * to_big(spec.tau));
    BigRat slope = derivative(rec.f_tilde)(a);
    rec.gamma = (r % 2 == 0 ? t2 : BigRat(-t2)) - slope;
    rec.f_tilde_gamma = rec.f_tilde + x_poly() * rec.gamma;
    rec.f_gamma = scale_clear(rec.f_tilde_gamma, factorial(static_cast<unsigned long>(n)));
    return rec;
}

ConstructionRecord build(const Specialization& spec)
{
    return spec.parity == Parity::Even ? build_even(spec) : build_odd(spec);
}

Specialization ReferenceEven::specialize(std::int64_t tau) const
{
    Specialization spec{n, Parity::Even, {}, 0, tau};
    const int r = h.degree();
    for (int i = 1; i <= r; ++i) spec.alphas.push_back(h.coeffs()[static_cast<std::size_t>(r - i)].get_num().get_si());
    return spec;
}

ReferenceEven reference_even(int n)
{
    if (n < 6 || n % 2 != 0) throw DomainError("reference_even needs even n >= 6");
    ReferenceEven ref;
    ref.n = n;
    const int r = family_rank(n);
    ref.h = RatPoly::constant(BigRat(1));
    for (int i = 1; i <= r; ++i) ref.h *= RatPoly::linear_root(BigRat(i));
    ref.g = x_poly() * (ref.h * ref.h) * BigRat(n);
    ref.f_tilde = antiderivative_vanishing_at(ref.g, BigRat(0));
    for (int i = 1; i <= r; ++i) ref.values.push_back(ref.f_tilde(BigRat(i)));
    std::set<BigRat> seen;
    for (const auto& v : ref.values) {
        if (v == 0 || !seen.insert(v).second)
            throw InvariantViolation("reference_even(" + std::to_string(n) + "): f~(i) not nonzero and distinct");
    }
    return ref;
}

bool ReferenceOdd::slopes_pairwise_distinct() const
{
    std::set<BigRat> seen(slopes_at_betas.begin(), slopes_at_betas.end());
    seen.insert(slope_at_alpha);
    return seen.size() == slopes_at_betas.size() + 1;
}

RatPoly ReferenceOdd::instantiate(const BigRat& tau) const
{
    const int r = family_rank(n);
    BigRat t2 = tau * tau;
    BigRat gamma = (r % 2 == 0 ? t2 : BigRat(-t2)) - slope_at_alpha;
    return p_tilde + x_poly() * gamma;
}

ReferenceOdd reference_odd(int n, const BigRat& perturbation)
{
    if (n < 7 || n % 2 == 0) throw DomainError("reference_odd needs odd n >= 7");
    if (perturbation < 0) throw DomainError("reference_odd needs a nonnegative perturbation");
    ReferenceOdd ref;
    ref.n = n;
    ref.perturbation = perturbation;
    const int r = family_rank(n);
    BigRat inverse_sum = 0;
    for (int i = 1; i <= r; ++i) {
        ref.betas.push_back(1 + perturbation * i);
        inverse_sum += 1 / ref.betas.back();
    }
    ref.alpha = -1 / (2 * inverse_sum);
    RatPoly h = RatPoly::constant(BigRat(1));
    for (const auto& b : ref.betas) h *= RatPoly::linear_root(b);
    ref.g_bar = RatPoly::linear_root(ref.alpha) * (h * h) * BigRat(n - 1);
    ref.p_tilde = ode_solve_xdx(ref.g_bar);
    RatPoly slope = derivative(ref.p_tilde);
    for (const auto& b : ref.betas) ref.slopes_at_betas.push_back(slope(b));
    ref.slope_at_alpha = slope(ref.alpha);
    return ref;
}

double HeightBound::constant() const
{
    long double best = 0;
    for (std::size_t i = 1; i < weights.size(); ++i) {
        if (weights[i] == 0) continue;
        best = std::max(best, std::exp(log_abs(weights[i]) / static_cast<long double>(i)));
    }
    return static_cast<double>(best);
}

std::vector<BigRat> HeightBound::scaled(const BigRat& y) const
{
    std::vector<BigRat> out(weights.size());
    BigRat ypow = 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        out[i] = weights[i] * ypow;
        ypow *= y;
    }
    return out;
}

long double HeightBound::log_disc_bound(const BigRat& y) const
{
    const long double nn = static_cast<long double>(n);
    return nn * (nn - 1) *
           (std::log(4.0L) + log_abs(factorial(static_cast<unsigned long>(n))) +
            std::log(static_cast<long double>(constant())) + log_abs(y));
}

HeightBound height_bound(int n)
{
    if (n < 6) throw DomainError("height_bound needs n >= 6");
    // Majorants at Y = 1: every coefficient is weighted-homogeneous in the
    // parameters, so a bound M_k at Y = 1 becomes M_k * Y^(weight) in general.
    const Parity parity = parity_of(n);
    const int r = family_rank(n);
    std::vector<BigRat> hmaj(static_cast<std::size_t>(r) + 1, BigRat(1));
    if (parity == Parity::Odd) hmaj[0] = 2;  // |2 a_{r-1} a|
    RatPoly h(hmaj);
    RatPoly x_plus_one({BigRat(1), BigRat(1)});
    RatPoly g = x_plus_one * (h * h) * BigRat(parity == Parity::Even ? n : n - 1);

    RatPoly f;
    if (parity == Parity::Even) {
        std::vector<BigRat> c(g.size() + 1);
        BigRat at_alpha = 0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            c[k + 1] = g.coeffs()[k] / BigRat(static_cast<long>(k + 1));
            at_alpha += c[k + 1];
        }
        c[0] = at_alpha + 1;  // |f~(alpha)| + |gamma|
        f = RatPoly(std::move(c));
    } else {
        std::vector<BigRat> c(g.size());
        BigRat slope = 0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k == 1) continue;
            c[k] = k == 0 ? g.coeffs()[0] : g.coeffs()[k] / BigRat(static_cast<long>(k) - 1);
            slope += c[k] * static_cast<unsigned long>(k);
        }
        c[1] = slope + 1;  // |f~'(alpha)| + tau^2
        f = RatPoly(std::move(c));
    }
    HeightBound out;
    out.n = n;
    out.parity = parity;
    out.weights.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) out.weights[static_cast<std::size_t>(i)] = f.coeff(static_cast<std::size_t>(n - i));
    return out;
}

}  // namespace anforge
