#pragma once

#include "anforge/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anforge {

/// Degrees of the irreducible factors of f mod p, sorted descending.
struct CycleType {
    std::vector<int> parts;

    [[nodiscard]] int total() const;
    /// Parity of sum(part - 1): true for odd permutations.
    [[nodiscard]] bool odd_sign() const;
    [[nodiscard]] std::string str() const;  ///< e.g. "{3,1,1,1}"

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

struct Witness {
    std::uint64_t prime = 0;
    CycleType type;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Distinct-degree factorization of f mod p. Throws BadPrime when p divides
/// lc(f) * Disc(f).
CycleType factor_degrees_mod_p(const IntPoly& f, std::uint64_t p);
/// Same, with Disc(f) supplied by the caller.
CycleType factor_degrees_mod_p(const IntPoly& f, const BigInt& disc, std::uint64_t p);

/// Cycle types at the first `budget` good primes greater than deg f.
/// Throws Degenerate when Disc(f) = 0.
std::vector<Witness> sample_cycle_types(const IntPoly& f, int budget);

enum class Irreducibility { CertifiedIrreducible, CertifiedReducible, Unknown };

struct IrreducibilityVerdict {
    Irreducibility status = Irreducibility::Unknown;
    /// "prime <p>" or "subset-sum" for irreducible, "factor" for reducible.
    std::string proof;
    /// Degree of the exhibited factor when reducible.
    int factor_degree = 0;
    IntPoly factor;
};

/// Exhibits a proper factor of f in Z[x] among products of numerical roots,
/// restricted to the given degrees; every candidate is checked by exact
/// division. Returns an empty optional when none is found.
std::optional<IntPoly> find_integer_factor(const IntPoly& f, const std::vector<int>& degrees);

/// Rule 1: a single-part cycle type. Rule 2: no proper degree is a subset sum
/// of every sampled cycle type. Otherwise a factor search; else Unknown.
/// Throws DomainError when Disc(f) = 0.
IrreducibilityVerdict certify_irreducible(const IntPoly& f, int budget);

enum class Verdict { CertifiedAn, CertifiedContainsOddPermutation, CertifiedReducible, Inconclusive };

std::string to_string(Verdict v);
std::string to_string(Irreducibility v);

struct GaloisCertificate {
    Verdict verdict = Verdict::Inconclusive;
    bool disc_is_square = false;
    IrreducibilityVerdict irreducibility;
    std::vector<Witness> witnesses;
    int primes_used = 0;
    /// Element whose power is a q-cycle with q prime > n/2: forces primitivity.
    std::optional<Witness> primitivity;
    /// Element whose power is a p-cycle with p prime <= n - 3.
    std::optional<Witness> jordan;
};

/// A prime part q > n/2 (then every other part is coprime to q).
bool is_primitivity_witness(const CycleType& t, int n);
/// Some prime p <= n - 3 is a part and divides no other part.
bool is_jordan_witness(const CycleType& t, int n);

/// Certifies Gal(f) = A_n from: square discriminant, certified irreducibility,
/// a primitivity witness and a Jordan witness. Sampling stops as soon as the
/// verdict is settled or `budget` good primes are consumed.
/// Throws Degenerate when Disc(f) = 0, DomainError when deg f < 5.
GaloisCertificate certify_an(const IntPoly& f, int budget);
GaloisCertificate certify_an(const IntPoly& f, const BigInt& disc, int budget);

}  // namespace anforge
