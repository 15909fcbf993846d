#include "anforge/constructions.hpp"
#include "anforge/poly_ops.hpp"
#include "anforge/resultant.hpp"

#include <doctest.h>

#include <random>

using namespace anforge;

namespace {

BigRat q(long num, long den = 1) { return make_rat(num, den); }

RatPoly rp(std::initializer_list<long> ascending)
{
    std::vector<BigRat> c;
    for (long v : ascending) c.emplace_back(v);
    return RatPoly(std::move(c));
}

Specialization random_spec(std::mt19937_64& rng, int n, long y)
{
    Specialization s;
    s.n = n;
    s.parity = parity_of(n);
    long bound = 1;
    for (std::size_t i = 0; i < alpha_count(n); ++i) {
        bound *= y;
        s.alphas.push_back(static_cast<std::int64_t>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound);
    }
    s.alpha = static_cast<std::int64_t>(rng() % static_cast<unsigned long>(2 * y + 1)) - y;
    long tau_bound = 1;
    for (int i = 0; i < family_rank(n) + (s.parity == Parity::Even ? 1 : 0); ++i) tau_bound *= y;
    do {
        s.tau = static_cast<std::int64_t>(rng() % static_cast<unsigned long>(2 * tau_bound + 1)) - tau_bound;
    } while (s.tau == 0);
    return s;
}

}  // namespace

TEST_CASE("specialization validation")
{
    CHECK_THROWS_AS(validate({5, Parity::Odd, {0}, 0, 1}), DomainError);
    CHECK_THROWS_AS(validate({6, Parity::Odd, {0, 0}, 0, 1}), DomainError);
    CHECK_THROWS_AS(validate({6, Parity::Even, {0}, 0, 1}), DomainError);
    CHECK_NOTHROW(validate({6, Parity::Even, {0, 0}, 0, 1}));
    CHECK_NOTHROW(validate({7, Parity::Odd, {0, 0}, 0, 1}));
    CHECK(alpha_count(6) == 2);
    CHECK(alpha_count(9) == 3);
    CHECK(alpha_count(11) == 4);
}

TEST_CASE("even reference n = 6")
{
    ReferenceEven ref = reference_even(6);
    CHECK(ref.f_tilde == RatPoly({q(0), q(0), q(12), q(-24), q(39, 2), q(-36, 5), q(1)}));
    REQUIRE(ref.values.size() == 2);
    CHECK(ref.values[0] == q(13, 10));
    CHECK(ref.values[1] == q(8, 5));
    // g >= 0 on x > 0, so f~ increases there
    CHECK(ref.values[0] < ref.values[1]);
    Specialization s = ref.specialize(1);
    CHECK(s.alphas == std::vector<std::int64_t>{-3, 2});
    CHECK(build_even(s).f_tilde == ref.f_tilde);
}

TEST_CASE("even reference n = 8 values are distinct and nonzero")
{
    ReferenceEven ref = reference_even(8);
    REQUIRE(ref.values.size() == 3);
    // oracle: evaluate g's antiderivative independently at 1, 2, 3
    RatPoly g = rp({0, 8}) * rp({-1, 1}) * rp({-1, 1}) * rp({-2, 1}) * rp({-2, 1}) * rp({-3, 1}) * rp({-3, 1});
    std::vector<BigRat> c(g.size() + 1);
    for (std::size_t k = 0; k < g.size(); ++k) c[k + 1] = g.coeffs()[k] / BigRat(static_cast<long>(k + 1));
    RatPoly f(c);
    for (int i = 1; i <= 3; ++i) CHECK(ref.values[static_cast<std::size_t>(i - 1)] == f(BigRat(i)));
    CHECK(ref.values[0] != 0);
    CHECK(ref.values[0] < ref.values[1]);
    CHECK(ref.values[1] < ref.values[2]);
}

TEST_CASE("even construction shape")
{
    ConstructionRecord rec = build_even({6, Parity::Even, {0, 0}, 0, 1});
    CHECK(rec.f_gamma.degree() == 6);
    CHECK(rec.f_gamma.is_monic());
    CHECK(rec.gamma == -1);
    // tau = 0: double root at alpha * n!
    ConstructionRecord degenerate = build_even({6, Parity::Even, {2, -3}, 1, 0});
    CHECK(degenerate.spec.degenerate());
    CHECK(discriminant(degenerate.f_gamma) == 0);
}

TEST_CASE("even disc law at n = 8, alphas (1,2,3), tau = 1")
{
    ConstructionRecord rec = build_even({8, Parity::Even, {1, 2, 3}, 0, 1});
    BigRat d = discriminant(rec.f_tilde_gamma);
    REQUIRE(d != 0);
    CHECK(is_perfect_square(BigRat(d / rec.gamma)));
}

TEST_CASE("even invariants on random specializations")
{
    std::mt19937_64 rng(8);
    for (int n : {6, 8, 10}) {
        for (int trial = 0; trial < 40; ++trial) {
            Specialization s = random_spec(rng, n, 3);
            ConstructionRecord rec = build_even(s);
            const BigRat a(static_cast<long>(s.alpha));
            CHECK(derivative(rec.f_tilde) == rec.g);
            CHECK(rec.f_tilde(a) == 0);
            CHECK(divrem(rec.f_tilde, power(RatPoly::linear_root(a), 2)).second.is_zero());
            CHECK(rec.f_gamma.is_monic());
            CHECK(rec.f_gamma.degree() == n);
            BigRat dt = discriminant(rec.f_tilde_gamma);
            BigInt df = discriminant(rec.f_gamma);
            BigInt scale = pow_int(factorial(static_cast<unsigned long>(n)), static_cast<unsigned long>(n * (n - 1)));
            CHECK(BigRat(df) == dt * scale);
            if (dt != 0) {
                BigRat sign_gamma = (n / 2) % 2 == 0 ? rec.gamma : BigRat(-rec.gamma);
                CHECK(is_perfect_square(BigRat(dt / sign_gamma)));
                CHECK(is_perfect_square(df));
            }
        }
    }
}

TEST_CASE("odd construction with vanishing alphas")
{
    for (std::int64_t a : {-3, 0, 2, 5}) {
        ConstructionRecord rec = build_odd({9, Parity::Odd, {0, 0, 0}, a, 1});
        CHECK(rec.h == RatPoly::monomial(BigRat(1), 4));
        CHECK(rec.g == RatPoly::monomial(BigRat(8), 9) - RatPoly::monomial(BigRat(8 * a), 8));
        // c_k = b_k / (k - 1) applied by hand
        CHECK(rec.f_tilde.coeff(9) == 1);
        CHECK(rec.f_tilde.coeff(8) == q(-8 * a, 7));
        CHECK(rec.f_tilde.coeff(0) == 0);
        CHECK(rec.f_tilde.degree() == 9);
    }
}

TEST_CASE("odd substitution kills the x coefficient")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        Specialization s = random_spec(rng, 9, 4);
        ConstructionRecord rec = build_odd(s);
        CHECK(rec.g.coeff(1) == 0);
    }
}

TEST_CASE("odd invariants and disc law")
{
    std::mt19937_64 rng(10);
    for (int n : {7, 9, 11}) {
        const int r = family_rank(n);
        for (int trial = 0; trial < 30; ++trial) {
            Specialization s = random_spec(rng, n, 3);
            if (n == 9) s.tau = 3;
            ConstructionRecord rec = build_odd(s);
            const BigRat a(static_cast<long>(s.alpha));
            RatPoly x = RatPoly::monomial(BigRat(1), 1);
            CHECK(x * derivative(rec.f_tilde_gamma) - rec.f_tilde_gamma == rec.g);
            CHECK(derivative(rec.f_tilde)(BigRat(0)) == 0);
            BigRat t2(static_cast<long>(s.tau * s.tau));
            CHECK(derivative(rec.f_tilde_gamma)(a) == (r % 2 == 0 ? t2 : BigRat(-t2)));
            CHECK(rec.f_gamma.is_monic());
            BigInt df = discriminant(rec.f_gamma);
            if (df != 0) CHECK(is_perfect_square(df));
        }
    }
}

TEST_CASE("odd reference, unperturbed")
{
    for (int n : {7, 9, 11, 13}) {
        ReferenceOdd ref = reference_odd(n, 0);
        CHECK(ref.alpha == q(-1, n - 1));
        CHECK(ref.p_tilde == power(rp({-1, 1}), static_cast<unsigned>(n)) - RatPoly::monomial(BigRat(n), 1));
        for (const auto& s : ref.slopes_at_betas) CHECK(s == -n);
        BigRat expected = BigRat(n) * (pow_rat(make_rat(-n, n - 1), static_cast<unsigned long>(n - 1)) - 1);
        CHECK(ref.slope_at_alpha == expected);
        CHECK(ref.slope_at_alpha > 0);
    }
}

TEST_CASE("odd reference, perturbed")
{
    ReferenceOdd ref = reference_odd(9, q(1, 100));
    REQUIRE(ref.slopes_at_betas.size() == 4);
    CHECK(ref.slopes_pairwise_distinct());
    // 2 a sum(1/beta_i) = -1 keeps the x coefficient of G-bar at zero
    BigRat s = 0;
    for (const auto& b : ref.betas) s += 1 / b;
    CHECK(2 * ref.alpha * s == -1);
    CHECK(ref.g_bar.coeff(1) == 0);
    // beta_j < beta_i implies P~'(beta_j) < P~'(beta_i)
    for (std::size_t i = 1; i < ref.slopes_at_betas.size(); ++i)
        CHECK(ref.slopes_at_betas[i - 1] < ref.slopes_at_betas[i]);
    CHECK(ref.slopes_at_betas.back() < 0);
    CHECK(ref.slope_at_alpha > 0);

    RatPoly inst = ref.instantiate(2);
    RatPoly x = RatPoly::monomial(BigRat(1), 1);
    CHECK(x * derivative(inst) - inst == ref.g_bar);
    CHECK(derivative(inst)(ref.alpha) == 4);  // r = 4 even
}

TEST_CASE("height bound holds over whole boxes")
{
    for (int n : {6, 7}) {
        HeightBound hb = height_bound(n);
        const double c = hb.constant();
        CHECK(c > 0);
        for (long y : {2L, 3L}) {
            std::vector<BigRat> w = hb.scaled(BigRat(y));
            const std::size_t k = alpha_count(n);
            std::vector<long> bounds;
            long b = 1;
            for (std::size_t i = 0; i < k; ++i) bounds.push_back(b *= y);
            long tau_bound = 1;
            for (int i = 0; i < (n % 2 == 0 ? n / 2 : (n - 1) / 2); ++i) tau_bound *= y;
            bounds.push_back(y);
            bounds.push_back(tau_bound);
            std::vector<long> cur;
            for (long v : bounds) cur.push_back(-v);
            long count = 0;
            bool ok = true;
            while (true) {
                Specialization s{n, parity_of(n), {}, cur[k], cur[k + 1]};
                for (std::size_t i = 0; i < k; ++i) s.alphas.push_back(cur[i]);
                ConstructionRecord rec = build(s);
                ++count;
                if (!coefficients_within(rec.f_tilde_gamma, w) || height(rec.f_tilde_gamma) > c * y * (1 + 1e-12)) {
                    ok = false;
                    FAIL_CHECK(describe(s));
                    break;
                }
                std::size_t pos = cur.size();
                while (pos > 0 && cur[pos - 1] == bounds[pos - 1]) {
                    cur[pos - 1] = -bounds[pos - 1];
                    --pos;
                }
                if (pos == 0) break;
                ++cur[pos - 1];
            }
            CHECK(ok);
            CHECK(count > 0);
        }
    }
}

TEST_CASE("builders reject bad input")
{
    CHECK_THROWS_AS(build_even({7, Parity::Odd, {0, 0}, 0, 1}), DomainError);
    CHECK_THROWS_AS(build_odd({6, Parity::Even, {0, 0}, 0, 1}), DomainError);
    CHECK_THROWS_AS(reference_even(7), DomainError);
    CHECK_THROWS_AS(reference_odd(8, 0), DomainError);
}
