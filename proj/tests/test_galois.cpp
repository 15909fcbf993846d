#include "anforge/constructions.hpp"
#include "anforge/errors.hpp"
#include "anforge/galois.hpp"
#include "anforge/numbers.hpp"
#include "anforge/primes.hpp"
#include "anforge/resultant.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace anforge;

namespace {

IntPoly ip(std::initializer_list<long> ascending)
{
    std::vector<BigInt> c;
    for (long v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c));
}

CycleType ct(std::vector<int> parts) { return CycleType{std::move(parts)}; }

bool is_bad(const IntPoly& f, std::uint64_t p)
{
    const BigInt d = discriminant(f);
    return d % static_cast<unsigned long>(p) == 0 || f.leading() % static_cast<unsigned long>(p) == 0;
}

}  // namespace

TEST_CASE("cycle types of small examples")
{
    CHECK(factor_degrees_mod_p(ip({1, 0, 1}), 5) == ct({1, 1}));
    CHECK(factor_degrees_mod_p(ip({1, 0, 1}), 3) == ct({2}));
    CHECK(factor_degrees_mod_p(ip({0, -1, 0, 1}), 5) == ct({1, 1, 1}));
    CHECK(ct({3, 1, 1, 1}).str() == "{3,1,1,1}");
    CHECK_FALSE(ct({3, 1, 1, 1}).odd_sign());
    CHECK(ct({2, 1, 1, 1}).odd_sign());
}

TEST_CASE("bad primes and bad moduli are rejected")
{
    CHECK_THROWS_AS(factor_degrees_mod_p(ip({1, 0, 1}), 2), BadPrime);
    CHECK_THROWS_AS(factor_degrees_mod_p(ip({-2, 0, 1}), 2), BadPrime);
    CHECK_THROWS_AS(factor_degrees_mod_p(ip({1, 0, 3}), 3), BadPrime);
    CHECK_THROWS_AS(factor_degrees_mod_p(ip({1, 0, 1}), 9), DomainError);
}

TEST_CASE("distinct-degree factorization matches brute-force trial division")
{
    std::mt19937_64 rng(11);
    int compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int degree = 2 + static_cast<int>(rng() % 7);
        const IntPoly f = oracle::random_int_poly(rng, degree, 20);
        if (discriminant(f) == 0) continue;
        for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
            if (is_bad(f, p)) continue;
            const CycleType got = factor_degrees_mod_p(f, p);
            CHECK(got.parts == oracle::factor_degrees_brute(f, static_cast<long>(p)));
            CHECK(got.total() == degree);
            for (int part : got.parts) CHECK(part >= 1);
            ++compared;
        }
    }
    CHECK(compared > 500);
}

TEST_CASE("large primes near 2^32 stay exact")
{
    const IntPoly f = ip({-1, -1, 0, 0, 0, 1});
    const std::uint64_t p = 4294967291ULL;  // largest prime below 2^32
    const CycleType t = factor_degrees_mod_p(f, p);
    CHECK(t.total() == 5);
    const IntPoly split = ip({-1, 1}) * ip({-2, 1}) * ip({-3, 1}) * ip({-4, 1}) * ip({-5, 1});
    CHECK(factor_degrees_mod_p(split, p) == ct({1, 1, 1, 1, 1}));
    CHECK(factor_degrees_mod_p(ip({1, 0, 1}), p) == ct({2}));  // p = 3 mod 4
    const CycleType small = factor_degrees_mod_p(f, 4194301ULL);
    CHECK(small.total() == 5);
}

TEST_CASE("sample_cycle_types")
{
    const auto w = sample_cycle_types(ip({1, 0, 1}), 2);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Witness{3, ct({2})});
    CHECK(w[1] == Witness{5, ct({1, 1})});
    CHECK(sample_cycle_types(ip({1, 0, 1}), 0).empty());

    // S_3 Frobenius classes
    const auto cubic = sample_cycle_types(ip({-2, 0, 0, 1}), 40);
    CHECK(cubic.size() == 40);
    for (const auto& x : cubic) {
        const bool allowed = x.type == ct({3}) || x.type == ct({2, 1}) || x.type == ct({1, 1, 1});
        CHECK(allowed);
        CHECK(x.prime != 3);  // 3 divides Disc = -108
    }
    CHECK(cubic.front().prime == 5);

    CHECK_THROWS_AS(sample_cycle_types(ip({1, 2, 1}), 3), Degenerate);
    CHECK(sample_cycle_types(ip({-2, 0, 0, 1}), 25) == sample_cycle_types(ip({-2, 0, 0, 1}), 25));
}

TEST_CASE("certify_irreducible examples")
{
    const auto a = certify_irreducible(ip({-2, 0, 1}), 5);
    CHECK(a.status == Irreducibility::CertifiedIrreducible);
    CHECK(a.proof == "prime 3");

    const auto b = certify_irreducible(ip({-1, 0, 1}), 5);
    CHECK(b.status == Irreducibility::CertifiedReducible);
    CHECK(b.factor_degree == 1);
    CHECK(divrem(to_rat(ip({-1, 0, 1})), to_rat(b.factor)).second.is_zero());

    for (int budget : {1, 10, 200}) {
        const auto c = certify_irreducible(ip({1, 0, 0, 0, 1}), budget);
        CHECK(c.status == Irreducibility::Unknown);
    }

    CHECK_THROWS_AS(certify_irreducible(ip({1, 2, 1}), 5), DomainError);
}

TEST_CASE("subset-sum rule fires on S_4 quartic without a single-part type")
{
    // x^4 + x + 1 has group S_4; enough primes give {3,1} and {2,2} or {4}
    const auto v = certify_irreducible(ip({1, 1, 0, 0, 1}), 50);
    CHECK(v.status == Irreducibility::CertifiedIrreducible);
}

TEST_CASE("irreducible mod p implies certified irreducible")
{
    std::mt19937_64 rng(5);
    int hits = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly f = oracle::random_int_poly(rng, 3 + static_cast<int>(rng() % 5), 30);
        if (discriminant(f) == 0) continue;
        const auto w = sample_cycle_types(f, 10);
        const bool single = std::any_of(w.begin(), w.end(), [](const Witness& x) { return x.type.parts.size() == 1; });
        if (!single) continue;
        ++hits;
        CHECK(certify_irreducible(f, 10).status == Irreducibility::CertifiedIrreducible);
    }
    CHECK(hits > 50);
}

TEST_CASE("subset-sum rule never certifies a product")
{
    std::mt19937_64 rng(17);
    int made = 0;
    while (made < 200) {
        const int d1 = 1 + static_cast<int>(rng() % 4);
        const int d2 = 1 + static_cast<int>(rng() % 4);
        const IntPoly a = oracle::random_int_poly(rng, d1, 9);
        const IntPoly b = oracle::random_int_poly(rng, d2, 9);
        const IntPoly f = a * b;
        if (discriminant(f) == 0) continue;
        ++made;
        const auto v = certify_irreducible(f, 60);
        CHECK(v.status != Irreducibility::CertifiedIrreducible);
        if (v.status == Irreducibility::CertifiedReducible) {
            CHECK(v.factor_degree >= 1);
            CHECK(v.factor_degree < f.degree());
            CHECK(divrem(to_rat(f), to_rat(v.factor)).second.is_zero());
        }
    }
}

TEST_CASE("witness predicates")
{
    CHECK(is_jordan_witness(ct({3, 1, 1, 1}), 6));
    CHECK(is_jordan_witness(ct({3, 2, 1}), 6));
    CHECK_FALSE(is_jordan_witness(ct({3, 3}), 6));
    CHECK_FALSE(is_jordan_witness(ct({5, 1}), 6));
    CHECK_FALSE(is_jordan_witness(ct({2, 2, 1, 1}), 6));
    CHECK(is_primitivity_witness(ct({5, 1}), 6));
    CHECK_FALSE(is_primitivity_witness(ct({3, 1, 1, 1}), 6));
    CHECK(is_primitivity_witness(ct({5, 2}), 7));
    CHECK(is_primitivity_witness(ct({7}), 7));
}

TEST_CASE("certify_an classical vectors")
{
    const IntPoly a5 = ip({16, 20, 0, 0, 0, 1});
    const BigInt d = discriminant(a5);
    CHECK(is_perfect_square(d));
    const auto w = sample_cycle_types(a5, 100);
    CHECK(w.size() == 100);
    for (const auto& x : w) CHECK_FALSE(x.type.odd_sign());
    const auto cert = certify_an(a5, 100);
    CHECK(cert.disc_is_square);
    CHECK(cert.verdict != Verdict::CertifiedContainsOddPermutation);

    const auto s5 = certify_an(ip({-1, -1, 0, 0, 0, 1}), 100);
    CHECK(s5.verdict == Verdict::CertifiedContainsOddPermutation);
    CHECK_FALSE(s5.disc_is_square);
    const auto all = sample_cycle_types(ip({-1, -1, 0, 0, 0, 1}), 100);
    CHECK(std::any_of(all.begin(), all.end(), [](const Witness& x) { return x.type == ct({2, 1, 1, 1}); }));

    const IntPoly product = ip({1, 0, 1}) * ip({-2, 0, 0, 1});
    const auto red = certify_an(product, 50);
    CHECK(red.verdict == Verdict::CertifiedReducible);
    CHECK(red.irreducibility.status == Irreducibility::CertifiedReducible);

    CHECK_THROWS_AS(certify_an(ip({1, 2, 1}) * ip({1, 0, 0, 1}), 10), Degenerate);
    CHECK_THROWS_AS(certify_an(ip({1, 0, 0, 1}), 10), DomainError);
}

TEST_CASE("witness list is in increasing prime order and deterministic")
{
    const IntPoly f = ip({-1, -1, 0, 0, 0, 0, 1});
    const auto a = certify_an(f, 200);
    const auto b = certify_an(f, 200);
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.verdict == b.verdict);
    CHECK(a.primes_used == static_cast<int>(a.witnesses.size()));
    for (std::size_t i = 1; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i - 1].prime < a.witnesses[i].prime);
}

TEST_CASE("certified A_6 frequency on even constructions")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> small(-4, 4);
    int total = 0;
    int an = 0;
    while (total < 150) {
        Specialization s{6, Parity::Even, {small(rng), small(rng)}, small(rng), small(rng)};
        if (s.degenerate()) continue;
        const auto rec = build(s);
        const BigInt d = discriminant(rec.f_gamma);
        if (d == 0) continue;
        ++total;
        const auto cert = certify_an(rec.f_gamma, d, 200);
        CHECK(cert.disc_is_square);
        for (const auto& x : cert.witnesses) CHECK_FALSE(x.type.odd_sign());
        if (cert.verdict == Verdict::CertifiedAn) {
            ++an;
            REQUIRE(cert.primitivity);
            REQUIRE(cert.jordan);
            CHECK(cert.irreducibility.status == Irreducibility::CertifiedIrreducible);
        }
    }
    MESSAGE("certified A_6: " << an << " / " << total);
    CHECK(static_cast<double>(an) / total >= 0.9);
}

TEST_CASE("odd constructions certify A_7 unless x divides f")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-3, 3);
    int total = 0;
    int an = 0;
    int through_zero = 0;
    while (total < 40) {
        Specialization s{7, Parity::Odd, {small(rng), small(rng)}, small(rng), small(rng)};
        if (s.degenerate()) continue;
        const auto rec = build(s);
        const BigInt d = discriminant(rec.f_gamma);
        if (d == 0) continue;
        const auto cert = certify_an(rec.f_gamma, d, 200);
        CHECK(cert.disc_is_square);
        // h-bar(0) = 2 a_{r-1} a = 0 puts x^2 in g-bar, hence x | f~_gamma
        if (s.alphas.back() * s.alpha == 0) {
            ++through_zero;
            CHECK(rec.f_gamma.coeff(0) == 0);
            CHECK(cert.verdict == Verdict::CertifiedReducible);
            continue;
        }
        ++total;
        if (cert.verdict == Verdict::CertifiedAn) ++an;
    }
    MESSAGE("certified A_7: " << an << " / " << total << ", skipped through zero: " << through_zero);
    CHECK(through_zero > 0);
    CHECK(an * 10 >= total * 9);
}
