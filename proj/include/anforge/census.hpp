#pragma once

#include "anforge/constructions.hpp"
#include "anforge/galois.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace anforge {

struct BoxSpec {
    int n = 6;
    Parity parity = Parity::Even;
    BigRat Y = 1;
    bool exclude_degenerate = true;  ///< drop tau = 0
};

/// Integer box |alpha_i| <= floor(Y^i), |alpha| <= floor(Y), |tau| <= floor(Y^e_tau)
/// with e_tau = n/2 (even) or (n-1)/2 (odd), in lexicographic order on
/// (alpha_1, ..., alpha_m, alpha, tau).
class Box {
public:
    explicit Box(const BoxSpec& spec);

    [[nodiscard]] const BoxSpec& spec() const { return spec_; }
    /// Coordinate edge exponents e_i: |coordinate i| <= floor(Y^e_i).
    [[nodiscard]] const std::vector<int>& exponents() const { return exponents_; }
    [[nodiscard]] const std::vector<std::int64_t>& limits() const { return limits_; }
    /// Prod (2 limit_i + 1), before exclusions.
    [[nodiscard]] BigInt raw_count() const;
    /// Number of tuples enumerated.
    [[nodiscard]] BigInt count() const;
    /// count() as a machine integer; throws CapExceeded beyond 2^62.
    [[nodiscard]] std::uint64_t size() const;
    /// The tuple at a lexicographic position in [0, size()).
    [[nodiscard]] Specialization at(std::uint64_t index) const;

private:
    BoxSpec spec_;
    std::vector<int> exponents_;
    std::vector<std::int64_t> limits_;
    std::vector<std::uint64_t> radix_;
};

/// All tuples of the box, in order. For small boxes.
std::vector<Specialization> enumerate_box(const BoxSpec& spec);

struct DiscKernel {
    BigInt kernel;          ///< sign times product of primes to odd multiplicity
    bool complete = true;   ///< false if a composite cofactor was left unsplit
};

/// Trial division to 2^16, then the cofactor is classified as 1, a square or
/// a probable prime; anything else is kept whole and marked incomplete.
DiscKernel disc_kernel(const BigInt& disc);

struct FieldFingerprint {
    int degree = 0;
    DiscKernel kernel;
    /// Cycle types at the first k good primes above the degree.
    std::vector<Witness> splitting;

    /// Compact canonical encoding, used as a map key.
    [[nodiscard]] std::string key() const;
    friend bool operator==(const FieldFingerprint& a, const FieldFingerprint& b) { return a.key() == b.key(); }
};

/// Throws Degenerate when Disc(f) = 0.
FieldFingerprint fingerprint(const IntPoly& f, int k);
/// Reuses already computed cycle types, which must be a prefix of the run.
FieldFingerprint fingerprint(const IntPoly& f, const BigInt& disc, int k, std::span<const Witness> known);

struct CensusOptions {
    int budget = 200;
    int k = 25;
    std::uint64_t cap = 2'000'000;
    int threads = 0;  ///< 0 keeps the OpenMP default
};

struct CountReport {
    BoxSpec box;
    std::vector<std::int64_t> limits;
    int budget = 0;
    int k = 0;
    std::uint64_t specializations = 0;
    std::uint64_t degenerate = 0;  ///< Disc(f_gamma) = 0
    std::uint64_t certified_an = 0;
    std::uint64_t reducible = 0;
    std::uint64_t odd = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t distinct_fingerprints = 0;
    std::uint64_t incomplete_kernels = 0;
    BigInt max_abs_disc = 0;
    /// tuples per fingerprint -> number of fingerprints
    std::map<std::uint64_t, std::uint64_t> multiplicity_histogram;
    BigRat X;  ///< Y^(n(n-1))
    double height_constant = 0;
    long double log_disc_bound = 0;
    double runtime_seconds = 0;
};

/// Refuses boxes above options.cap with CapExceeded.
CountReport count_fields(const BoxSpec& box, const CensusOptions& options);
/// Single-threaded reference with the same contract.
CountReport count_fields_serial(const BoxSpec& box, const CensusOptions& options);

struct GrowthFit {
    double slope = 0;
    double intercept = 0;
    std::vector<std::pair<double, double>> points;  ///< (log X, log count)
    BigRat target;                                  ///< the conjectured exponent for comparison
};

/// Least-squares slope of log count against log X; zero counts are dropped.
/// Throws NoFit with fewer than two usable points.
GrowthFit fit_log_log(const std::vector<std::pair<BigRat, std::uint64_t>>& x_and_counts);
GrowthFit growth_fit(const std::vector<CountReport>& reports);

struct Interval {
    double low = 0;
    double high = 0;
};
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

/// m distinct values in [0, size), sorted, from the seeded generator.
std::vector<std::uint64_t> sample_indices(std::uint64_t size, std::uint64_t m, std::uint64_t seed);

struct DensityOptions {
    int budget = 200;
    std::uint64_t sample_cap = 20'000;
    std::uint64_t seed = 0;
    int threads = 0;
    bool force_sampling = false;
};

struct DensityPoint {
    BigRat T;
    std::vector<int> e_vector;
    BigInt box_size;
    bool exhaustive = false;
    std::uint64_t sampled = 0;
    std::uint64_t full_group = 0;
    BigRat estimate;
    Interval confidence_interval;
};

/// T_list must be strictly increasing and each T >= 1.
std::vector<DensityPoint> density_scan(int n, Parity parity, const std::vector<BigRat>& T_list,
                                       const DensityOptions& options);

struct MultiplicityReport {
    std::uint64_t tuples = 0;
    std::uint64_t polynomials = 0;
    std::uint64_t max_preimages = 0;
    /// every fiber of size 2 is {tau, -tau} with the other coordinates equal
    bool only_tau_pairs = true;
    std::map<std::uint64_t, std::uint64_t> histogram;
};

MultiplicityReport tuple_multiplicity(const BoxSpec& box);

}  // namespace anforge
