#include "anforge/galois.hpp"

#include "anforge/primes.hpp"
#include "anforge/resultant.hpp"
#include "anforge/roots.hpp"
#include "modp.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <numeric>
#include <sstream>

namespace anforge {

int CycleType::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool CycleType::odd_sign() const
{
    int transpositions = 0;
    for (int p : parts) transpositions += p - 1;
    return transpositions % 2 != 0;
}

std::string CycleType::str() const
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
    out << '}';
    return out.str();
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::CertifiedAn: return "CertifiedAn";
    case Verdict::CertifiedContainsOddPermutation: return "CertifiedContainsOddPermutation";
    case Verdict::CertifiedReducible: return "CertifiedReducible";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Irreducibility v)
{
    switch (v) {
    case Irreducibility::CertifiedIrreducible: return "CertifiedIrreducible";
    case Irreducibility::CertifiedReducible: return "CertifiedReducible";
    case Irreducibility::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

bool bad_prime(const IntPoly& f, const BigInt& disc, std::uint64_t p)
{
    const unsigned long pl = static_cast<unsigned long>(p);
    return mpz_divisible_ui_p(f.leading().get_mpz_t(), pl) != 0 || mpz_divisible_ui_p(disc.get_mpz_t(), pl) != 0;
}

CycleType distinct_degree(const IntPoly& f, std::uint64_t p)
{
    const modp::Field field(p);
    modp::Coeffs rest = field.reduce(f);
    field.make_monic(rest);
    const modp::Coeffs x{0, 1};
    modp::Coeffs frob = x;  // x^(p^k) mod rest
    CycleType out;
    for (int k = 1; 2 * k <= static_cast<int>(rest.size()) - 1; ++k) {
        frob = field.powmod(frob, p, rest);
        modp::Coeffs diff = frob;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = field.sub(diff[1], 1);
        field.trim(diff);
        modp::Coeffs common = field.gcd(rest, diff);
        const int dg = static_cast<int>(common.size()) - 1;
        if (dg > 0) {
            for (int i = 0; i < dg / k; ++i) out.parts.push_back(k);
            rest = field.div(rest, common);
            field.rem(frob, rest);
        }
    }
    if (rest.size() > 1) out.parts.push_back(static_cast<int>(rest.size()) - 1);
    std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
    return out;
}

using DegreeSet = std::bitset<256>;

DegreeSet subset_sums(const CycleType& t)
{
    DegreeSet s;
    s.set(0);
    for (int part : t.parts) s |= s << static_cast<std::size_t>(part);
    return s;
}

DegreeSet proper_degrees(int n)
{
    DegreeSet s;
    for (int d = 1; d < n; ++d) s.set(static_cast<std::size_t>(d));
    return s;
}

/// Incremental irreducibility evidence from cycle types.
struct IrreducibilityTracker {
    int n;
    DegreeSet candidates;
    IrreducibilityVerdict verdict;

    explicit IrreducibilityTracker(int degree) : n(degree), candidates(proper_degrees(degree)) {}

    [[nodiscard]] bool proved() const { return verdict.status == Irreducibility::CertifiedIrreducible; }

    void observe(const Witness& w)
    {
        if (proved()) return;
        if (w.type.parts.size() == 1) {
            verdict.status = Irreducibility::CertifiedIrreducible;
            verdict.proof = "prime " + std::to_string(w.prime);
            return;
        }
        candidates &= subset_sums(w.type);
        if (candidates.none()) {
            verdict.status = Irreducibility::CertifiedIrreducible;
            verdict.proof = "subset-sum";
        }
    }

    [[nodiscard]] std::vector<int> open_degrees() const
    {
        std::vector<int> out;
        for (int d = 1; d <= n / 2; ++d)
            if (candidates.test(static_cast<std::size_t>(d)) || candidates.test(static_cast<std::size_t>(n - d)))
                out.push_back(d);
        return out;
    }

    void try_factor(const IntPoly& f)
    {
        if (proved()) return;
        if (auto factor = find_integer_factor(f, open_degrees())) {
            verdict.status = Irreducibility::CertifiedReducible;
            verdict.proof = "factor";
            verdict.factor_degree = factor->degree();
            verdict.factor = std::move(*factor);
        }
    }
};

template <typename Fn>
void for_each_good_prime(const IntPoly& f, const BigInt& disc, int budget, Fn&& fn)
{
    auto primes = small_primes();
    int used = 0;
    for (std::size_t i = first_prime_index_above(static_cast<std::uint64_t>(f.degree())); i < primes.size() && used < budget;
         ++i) {
        const std::uint64_t p = primes[i];
        if (bad_prime(f, disc, p)) continue;
        ++used;
        if (!fn(Witness{p, distinct_degree(f, p)})) return;
    }
}

bool prime_part_alone(const CycleType& t, int q)
{
    int multiples = 0;
    bool exact = false;
    for (int part : t.parts) {
        if (part % q == 0) ++multiples;
        if (part == q) exact = true;
    }
    return exact && multiples == 1;
}

}  // namespace

CycleType factor_degrees_mod_p(const IntPoly& f, const BigInt& disc, std::uint64_t p)
{
    if (p < 2 || !is_prime(p)) throw DomainError("factor_degrees_mod_p needs a prime modulus");
    if (p >= (1ULL << 32)) throw DomainError("factor_degrees_mod_p supports primes below 2^32");
    if (f.degree() < 1) throw DomainError("factor_degrees_mod_p needs a nonconstant polynomial");
    if (bad_prime(f, disc, p))
        throw BadPrime("prime " + std::to_string(p) + " divides the leading coefficient or the discriminant");
    return distinct_degree(f, p);
}

CycleType factor_degrees_mod_p(const IntPoly& f, std::uint64_t p)
{
    if (f.degree() < 1) throw DomainError("factor_degrees_mod_p needs a nonconstant polynomial");
    return factor_degrees_mod_p(f, discriminant(f), p);
}

std::vector<Witness> sample_cycle_types(const IntPoly& f, int budget)
{
    if (f.degree() < 1) throw DomainError("sample_cycle_types needs a nonconstant polynomial");
    const BigInt disc = discriminant(f);
    if (disc == 0) throw Degenerate("sample_cycle_types: discriminant is zero");
    std::vector<Witness> out;
    for_each_good_prime(f, disc, budget, [&](Witness w) {
        out.push_back(std::move(w));
        return true;
    });
    return out;
}

std::optional<IntPoly> find_integer_factor(const IntPoly& f, const std::vector<int>& degrees)
{
    const int n = f.degree();
    if (n < 2) return std::nullopt;
    const std::vector<Complex> roots = complex_roots(to_rat(f));
    const long double lc = to_long_double(f.leading());
    constexpr std::size_t kMaxCandidates = 200000;
    std::size_t tried = 0;

    for (int d : degrees) {
        if (d < 1 || d > n / 2) continue;
        std::vector<int> pick(static_cast<std::size_t>(d));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (++tried > kMaxCandidates) return std::nullopt;
            // expand lc * prod (x - root)
            std::vector<Complex> c{Complex(lc)};
            for (int idx : pick) {
                std::vector<Complex> next(c.size() + 1, Complex(0));
                for (std::size_t k = 0; k < c.size(); ++k) {
                    next[k + 1] += c[k];
                    next[k] -= c[k] * roots[static_cast<std::size_t>(idx)];
                }
                c = std::move(next);
            }
            bool plausible = true;
            std::vector<BigInt> rounded(c.size());
            for (std::size_t k = 0; k < c.size() && plausible; ++k) {
                const long double re = c[k].real();
                const long double tol = 1e-6L * std::max(1.0L, std::fabs(re));
                if (std::fabs(c[k].imag()) > tol || !std::isfinite(re) || std::fabs(re) > 1e18L) {
                    plausible = false;
                    break;
                }
                const long double nearest = std::nearbyint(re);
                if (std::fabs(re - nearest) > tol) plausible = false;
                rounded[k] = BigInt(static_cast<long>(nearest));
            }
            if (plausible) {
                IntPoly candidate = primitive_part(IntPoly(rounded));
                if (candidate.degree() == d && divrem(to_rat(f), to_rat(candidate)).second.is_zero())
                    return candidate;
            }
            // next combination
            int i = d - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - d + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

IrreducibilityVerdict certify_irreducible(const IntPoly& f, int budget)
{
    if (f.degree() < 1) throw DomainError("certify_irreducible needs a nonconstant polynomial");
    const BigInt disc = discriminant(f);
    if (disc == 0) throw DomainError("certify_irreducible needs a squarefree polynomial (Disc = 0)");
    IrreducibilityTracker tracker(f.degree());
    if (f.degree() == 1) {
        tracker.verdict.status = Irreducibility::CertifiedIrreducible;
        tracker.verdict.proof = "linear";
        return tracker.verdict;
    }
    for_each_good_prime(f, disc, budget, [&](const Witness& w) {
        tracker.observe(w);
        return !tracker.proved();
    });
    tracker.try_factor(f);
    return tracker.verdict;
}

bool is_primitivity_witness(const CycleType& t, int n)
{
    return std::any_of(t.parts.begin(), t.parts.end(),
                       [n](int part) { return 2 * part > n && is_prime(static_cast<std::uint64_t>(part)); });
}

bool is_jordan_witness(const CycleType& t, int n)
{
    for (int p = 3; p <= n - 3; ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p))) continue;
        if (prime_part_alone(t, p)) return true;
    }
    return false;
}

GaloisCertificate certify_an(const IntPoly& f, const BigInt& disc, int budget)
{
    const int n = f.degree();
    if (n < 5) throw DomainError("certify_an needs degree >= 5");
    if (disc == 0) throw Degenerate("certify_an: discriminant is zero");

    GaloisCertificate cert;
    cert.disc_is_square = is_perfect_square(disc);
    IrreducibilityTracker tracker(n);
    bool odd_seen = false;

    for_each_good_prime(f, disc, budget, [&](Witness w) {
        ++cert.primes_used;
        if (w.type.odd_sign()) {
            if (cert.disc_is_square)
                throw InvariantViolation("odd cycle type " + w.type.str() + " at p = " + std::to_string(w.prime) +
                                         " for a square discriminant");
            odd_seen = true;
        }
        tracker.observe(w);
        if (!cert.primitivity && is_primitivity_witness(w.type, n)) cert.primitivity = w;
        if (!cert.jordan && is_jordan_witness(w.type, n)) cert.jordan = w;
        cert.witnesses.push_back(std::move(w));
        const bool an_settled = cert.disc_is_square && tracker.proved() && cert.primitivity && cert.jordan;
        const bool odd_settled = odd_seen && tracker.proved();
        return !(an_settled || odd_settled);
    });

    tracker.try_factor(f);
    cert.irreducibility = tracker.verdict;
    if (cert.irreducibility.status == Irreducibility::CertifiedReducible)
        cert.verdict = Verdict::CertifiedReducible;
    else if (odd_seen)
        cert.verdict = Verdict::CertifiedContainsOddPermutation;
    else if (cert.disc_is_square && tracker.proved() && cert.primitivity && cert.jordan)
        cert.verdict = Verdict::CertifiedAn;
    else
        cert.verdict = Verdict::Inconclusive;
    return cert;
}

GaloisCertificate certify_an(const IntPoly& f, int budget)
{
    if (f.degree() < 5) throw DomainError("certify_an needs degree >= 5");
    return certify_an(f, discriminant(f), budget);
}

}  // namespace anforge
