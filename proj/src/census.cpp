#include "anforge/census.hpp"

#include "anforge/errors.hpp"
#include "anforge/exponents.hpp"
#include "anforge/poly_ops.hpp"
#include "anforge/primes.hpp"
#include "anforge/resultant.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

namespace anforge {

namespace {

constexpr std::uint64_t kMaxBox = std::uint64_t{1} << 62;
constexpr std::uint64_t kChunk = 2048;

int tau_exponent(int n) { return n % 2 == 0 ? n / 2 : (n - 1) / 2; }

}  // namespace

Box::Box(const BoxSpec& spec) : spec_(spec)
{
    if (spec.n < 6) throw DomainError("box needs n >= 6, got n = " + std::to_string(spec.n));
    validate(Specialization{spec.n, spec.parity, std::vector<std::int64_t>(alpha_count(spec.n)), 0, 1});
    if (spec.Y < 1) throw DomainError("box needs Y >= 1, got " + to_compact(spec.Y));

    const int m = static_cast<int>(alpha_count(spec.n));
    for (int i = 1; i <= m; ++i) exponents_.push_back(i);
    exponents_.push_back(1);
    exponents_.push_back(tau_exponent(spec.n));

    for (int e : exponents_) {
        const BigInt b = floor_pow(spec.Y, static_cast<unsigned long>(e));
        if (b >= BigInt(static_cast<long>(kMaxBox / 4))) throw CapExceeded("box edge too large", b.get_str());
        limits_.push_back(b.get_si());
    }
    for (std::size_t i = 0; i < limits_.size(); ++i) {
        const bool skip_zero = spec.exclude_degenerate && i + 1 == limits_.size();
        radix_.push_back(static_cast<std::uint64_t>(2 * limits_[i] + (skip_zero ? 0 : 1)));
    }
}

BigInt Box::raw_count() const
{
    BigInt out = 1;
    for (auto b : limits_) out *= BigInt(static_cast<long>(2 * b + 1));
    return out;
}

BigInt Box::count() const
{
    BigInt out = 1;
    for (auto r : radix_) out *= BigInt(static_cast<unsigned long>(r));
    return out;
}

std::uint64_t Box::size() const
{
    const BigInt c = count();
    if (c > BigInt(static_cast<unsigned long>(kMaxBox))) throw CapExceeded("box too large to index", c.get_str());
    return c.get_ui();
}

Specialization Box::at(std::uint64_t index) const
{
    Specialization s;
    s.n = spec_.n;
    s.parity = spec_.parity;
    std::vector<std::int64_t> values(limits_.size());
    for (std::size_t i = limits_.size(); i-- > 0;) {
        const auto digit = static_cast<std::int64_t>(index % radix_[i]);
        index /= radix_[i];
        std::int64_t v = digit - limits_[i];
        if (spec_.exclude_degenerate && i + 1 == limits_.size() && v >= 0) ++v;
        values[i] = v;
    }
    s.alphas.assign(values.begin(), values.end() - 2);
    s.alpha = values[values.size() - 2];
    s.tau = values.back();
    return s;
}

std::vector<Specialization> enumerate_box(const BoxSpec& spec)
{
    const Box box(spec);
    const std::uint64_t n = box.size();
    std::vector<Specialization> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(box.at(i));
    return out;
}

DiscKernel disc_kernel(const BigInt& disc)
{
    if (disc == 0) throw Degenerate("disc_kernel of zero");
    DiscKernel out;
    out.kernel = disc < 0 ? -1 : 1;
    BigInt rest = abs(disc);
    if (is_perfect_square(rest)) return out;

    BigInt removed;
    for (std::uint32_t p : small_primes()) {
        if (p >= (1u << 16)) break;
        if (rest == 1) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        const BigInt bp = static_cast<unsigned long>(p);
        const auto mult = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), bp.get_mpz_t());
        if (mult % 2 == 1) out.kernel *= bp;
    }
    if (rest == 1 || is_perfect_square(rest)) return out;
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) != 0) {
        out.kernel *= rest;
        return out;
    }
    out.kernel *= rest;
    out.complete = false;
    return out;
}

std::string FieldFingerprint::key() const
{
    std::string out = std::to_string(degree);
    out += '|';
    out += kernel.kernel.get_str();
    out += kernel.complete ? "|" : "?|";
    for (const auto& w : splitting) {
        out += std::to_string(w.prime);
        out += ':';
        for (std::size_t i = 0; i < w.type.parts.size(); ++i) {
            if (i) out += '.';
            out += std::to_string(w.type.parts[i]);
        }
        out += ';';
    }
    return out;
}

FieldFingerprint fingerprint(const IntPoly& f, const BigInt& disc, int k, std::span<const Witness> known)
{
    if (disc == 0) throw Degenerate("fingerprint: discriminant is zero");
    if (k < 0) throw DomainError("fingerprint needs k >= 0");
    FieldFingerprint fp;
    fp.degree = f.degree();
    fp.kernel = disc_kernel(disc);
    const auto primes = small_primes();
    std::size_t used = 0;
    for (std::size_t i = first_prime_index_above(static_cast<std::uint64_t>(fp.degree));
         i < primes.size() && static_cast<int>(fp.splitting.size()) < k; ++i) {
        const unsigned long p = primes[i];
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p) || mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
        if (used < known.size()) {
            if (known[used].prime != p) throw InvariantViolation("fingerprint: supplied cycle types are out of sequence");
            fp.splitting.push_back(known[used++]);
        } else {
            fp.splitting.push_back(Witness{p, factor_degrees_mod_p(f, disc, p)});
        }
    }
    return fp;
}

FieldFingerprint fingerprint(const IntPoly& f, int k)
{
    if (f.degree() < 1) throw DomainError("fingerprint needs a nonconstant polynomial");
    return fingerprint(f, discriminant(f), k, {});
}

namespace {

struct Context {
    int budget = 200;
    int k = 25;
    bool want_fingerprint = true;
    std::vector<BigRat> weights;
    long double log_disc_bound = 0;
};

Context make_context(const BoxSpec& spec, int budget, int k, bool want_fingerprint)
{
    Context ctx;
    ctx.budget = budget;
    ctx.k = k;
    ctx.want_fingerprint = want_fingerprint;
    const HeightBound hb = height_bound(spec.n);
    ctx.weights = hb.scaled(spec.Y);
    ctx.log_disc_bound = hb.log_disc_bound(spec.Y);
    return ctx;
}

struct Outcome {
    bool degenerate = false;
    Verdict verdict = Verdict::Inconclusive;
    BigInt abs_disc;
    std::string key;
    bool incomplete_kernel = false;
};

Outcome evaluate(const Specialization& s, const Context& ctx)
{
    try {
        Outcome out;
        const ConstructionRecord rec = build(s);
        if (!coefficients_within(rec.f_tilde_gamma, ctx.weights))
            throw InvariantViolation("coefficient of f~_gamma exceeds the box height bound");
        const BigInt disc = discriminant(rec.f_gamma);
        if (disc == 0) {
            out.degenerate = true;
            return out;
        }
        out.abs_disc = abs(disc);
        if (log_abs(out.abs_disc) > ctx.log_disc_bound * (1 + 1e-12L))
            throw InvariantViolation("|Disc(f_gamma)| exceeds the box discriminant bound");
        const GaloisCertificate cert = certify_an(rec.f_gamma, disc, ctx.budget);
        out.verdict = cert.verdict;
        if (cert.verdict == Verdict::CertifiedAn && ctx.want_fingerprint) {
            const FieldFingerprint fp = fingerprint(rec.f_gamma, disc, ctx.k, cert.witnesses);
            out.key = fp.key();
            out.incomplete_kernel = !fp.kernel.complete;
        }
        return out;
    } catch (const InvariantViolation& e) {
        throw InvariantViolation(std::string(e.what()) + " at " + describe(s));
    } catch (const IntegralityError& e) {
        throw InvariantViolation(std::string(e.what()) + " at " + describe(s));
    }
}

struct Tally {
    std::uint64_t specializations = 0;
    std::uint64_t degenerate = 0;
    std::uint64_t certified_an = 0;
    std::uint64_t reducible = 0;
    std::uint64_t odd = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t incomplete_kernels = 0;
    BigInt max_abs_disc = 0;
    std::map<std::string, std::uint64_t> fields;

    void add(Outcome&& o)
    {
        ++specializations;
        if (o.degenerate) {
            ++degenerate;
            return;
        }
        if (o.abs_disc > max_abs_disc) max_abs_disc = o.abs_disc;
        switch (o.verdict) {
        case Verdict::CertifiedAn: ++certified_an; break;
        case Verdict::CertifiedReducible: ++reducible; break;
        case Verdict::CertifiedContainsOddPermutation: ++odd; break;
        case Verdict::Inconclusive: ++inconclusive; break;
        }
        if (o.incomplete_kernel) ++incomplete_kernels;
        if (!o.key.empty()) ++fields[std::move(o.key)];
    }

    void merge(Tally&& other)
    {
        specializations += other.specializations;
        degenerate += other.degenerate;
        certified_an += other.certified_an;
        reducible += other.reducible;
        odd += other.odd;
        inconclusive += other.inconclusive;
        incomplete_kernels += other.incomplete_kernels;
        if (other.max_abs_disc > max_abs_disc) max_abs_disc = other.max_abs_disc;
        if (fields.empty()) {
            fields = std::move(other.fields);
            return;
        }
        for (auto& [key, count] : other.fields) fields[key] += count;
    }
};

Box checked_box(const BoxSpec& spec, const CensusOptions& options)
{
    if (options.budget < 1) throw DomainError("budget must be >= 1");
    if (options.k < 1) throw DomainError("k must be >= 1");
    if (options.threads < 0) throw DomainError("threads must be >= 0");
    Box box(spec);
    const BigInt count = box.count();
    if (count > BigInt(static_cast<unsigned long>(options.cap)))
        throw CapExceeded("box has " + count.get_str() + " tuples, above the cap of " + std::to_string(options.cap),
                          count.get_str());
    return box;
}

CountReport finish(const Box& box, const CensusOptions& options, Tally&& tally, double seconds)
{
    CountReport r;
    r.box = box.spec();
    r.limits = box.limits();
    r.budget = options.budget;
    r.k = options.k;
    r.specializations = tally.specializations;
    r.degenerate = tally.degenerate;
    r.certified_an = tally.certified_an;
    r.reducible = tally.reducible;
    r.odd = tally.odd;
    r.inconclusive = tally.inconclusive;
    r.incomplete_kernels = tally.incomplete_kernels;
    r.max_abs_disc = tally.max_abs_disc;
    r.distinct_fingerprints = tally.fields.size();
    for (const auto& [key, count] : tally.fields) ++r.multiplicity_histogram[count];
    const int n = box.spec().n;
    r.X = pow_rat(box.spec().Y, static_cast<unsigned long>(n * (n - 1)));
    const HeightBound hb = height_bound(n);
    r.height_constant = hb.constant();
    r.log_disc_bound = hb.log_disc_bound(box.spec().Y);
    r.runtime_seconds = seconds;
    if (!(r.distinct_fingerprints <= r.certified_an && r.certified_an <= r.specializations))
        throw InvariantViolation("count report inequalities fail");
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int thread_count(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

/// Runs fn(index, tally) over [0, total) in fixed contiguous chunks and merges
/// the chunk tallies; the first failing chunk's exception is rethrown.
template <typename Fn>
Tally parallel_tally(std::uint64_t total, int threads, Fn&& fn)
{
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<Tally> partial(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    const auto chunk_count = static_cast<std::int64_t>(chunks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(threads))
    for (std::int64_t c = 0; c < chunk_count; ++c) {
        try {
            const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
            const std::uint64_t hi = std::min(total, lo + kChunk);
            for (std::uint64_t i = lo; i < hi; ++i) fn(i, partial[static_cast<std::size_t>(c)]);
        } catch (...) {
            errors[static_cast<std::size_t>(c)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Tally out;
    for (auto& t : partial) out.merge(std::move(t));
    return out;
}

}  // namespace

CountReport count_fields(const BoxSpec& spec, const CensusOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const Box box = checked_box(spec, options);
    const Context ctx = make_context(spec, options.budget, options.k, true);
    Tally tally = parallel_tally(box.size(), options.threads,
                                 [&](std::uint64_t i, Tally& t) { t.add(evaluate(box.at(i), ctx)); });
    return finish(box, options, std::move(tally), seconds_since(start));
}

CountReport count_fields_serial(const BoxSpec& spec, const CensusOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const Box box = checked_box(spec, options);
    const Context ctx = make_context(spec, options.budget, options.k, true);
    Tally tally;
    const std::uint64_t total = box.size();
    for (std::uint64_t i = 0; i < total; ++i) tally.add(evaluate(box.at(i), ctx));
    return finish(box, options, std::move(tally), seconds_since(start));
}

GrowthFit fit_log_log(const std::vector<std::pair<BigRat, std::uint64_t>>& x_and_counts)
{
    GrowthFit fit;
    for (const auto& [x, count] : x_and_counts) {
        if (count == 0) continue;
        if (x <= 0) throw DomainError("growth fit needs X > 0");
        fit.points.emplace_back(static_cast<double>(log_abs(x)), std::log(static_cast<double>(count)));
    }
    if (fit.points.size() < 2) throw NoFit("growth fit needs at least two nonzero counts");
    double mx = 0;
    double my = 0;
    for (const auto& [x, y] : fit.points) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(fit.points.size());
    my /= static_cast<double>(fit.points.size());
    double sxy = 0;
    double sxx = 0;
    for (const auto& [x, y] : fit.points) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0) throw NoFit("growth fit needs at least two distinct X values");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

GrowthFit growth_fit(const std::vector<CountReport>& reports)
{
    if (reports.size() < 2) throw NoFit("growth fit needs at least two reports");
    std::vector<std::pair<BigRat, std::uint64_t>> pts;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (r.box.n != reports.front().box.n || r.box.parity != reports.front().box.parity)
            throw DomainError("growth fit needs reports for one n and parity");
        if (i > 0 && !(r.box.Y > reports[i - 1].box.Y)) throw DomainError("growth fit needs increasing Y");
        pts.emplace_back(r.X, r.distinct_fingerprints);
    }
    GrowthFit fit = fit_log_log(pts);
    fit.target = theorem1_exponent(reports.front().box.n);
    return fit;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0) throw DomainError("wilson_interval needs at least one trial");
    if (successes > trials) throw DomainError("wilson_interval: successes exceed trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1 + z2 / n;
    const double centre = (p + z2 / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

namespace {

/// Uniform in [0, bound) by rejection; independent of the standard library's
/// distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace

std::vector<std::uint64_t> sample_indices(std::uint64_t size, std::uint64_t m, std::uint64_t seed)
{
    if (m > size) throw DomainError("cannot sample more indices than the population");
    std::vector<std::uint64_t> out;
    if (m == size) {
        out.resize(size);
        std::iota(out.begin(), out.end(), std::uint64_t{0});
        return out;
    }
    // Floyd's algorithm
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (std::uint64_t j = size - m; j < size; ++j) {
        const std::uint64_t t = uniform_below(rng, j + 1);
        chosen.insert(chosen.count(t) ? j : t);
    }
    out.assign(chosen.begin(), chosen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DensityPoint> density_scan(int n, Parity parity, const std::vector<BigRat>& T_list,
                                       const DensityOptions& options)
{
    if (T_list.empty()) throw DomainError("density scan needs at least one T");
    for (std::size_t i = 0; i < T_list.size(); ++i) {
        if (T_list[i] < 1) throw DomainError("density scan needs T >= 1");
        if (i > 0 && !(T_list[i] > T_list[i - 1])) throw DomainError("T list must be strictly increasing");
    }
    if (options.sample_cap < 1) throw DomainError("sample cap must be >= 1");
    if (options.budget < 1) throw DomainError("budget must be >= 1");

    std::vector<DensityPoint> out;
    for (std::size_t i = 0; i < T_list.size(); ++i) {
        const BoxSpec spec{n, parity, T_list[i], true};
        const Box box(spec);
        const Context ctx = make_context(spec, options.budget, 0, false);
        DensityPoint pt;
        pt.T = T_list[i];
        pt.e_vector = box.exponents();
        pt.box_size = box.count();
        pt.exhaustive = !options.force_sampling && pt.box_size <= BigInt(static_cast<unsigned long>(options.sample_cap));

        std::vector<std::uint64_t> indices;
        if (pt.exhaustive) {
            indices.resize(box.size());
            std::iota(indices.begin(), indices.end(), std::uint64_t{0});
        } else {
            const std::uint64_t total = box.size();
            std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                              static_cast<std::uint32_t>(i)};
            std::array<std::uint32_t, 2> words{};
            seq.generate(words.begin(), words.end());
            const std::uint64_t stream = (std::uint64_t{words[0]} << 32) | words[1];
            indices = sample_indices(total, std::min(total, options.sample_cap), stream);
        }
        const Tally tally = parallel_tally(indices.size(), options.threads, [&](std::uint64_t j, Tally& t) {
            t.add(evaluate(box.at(indices[static_cast<std::size_t>(j)]), ctx));
        });
        pt.sampled = tally.specializations;
        pt.full_group = tally.certified_an;
        pt.estimate = make_rat(BigInt(static_cast<unsigned long>(pt.full_group)),
                               BigInt(static_cast<unsigned long>(pt.sampled)));
        pt.confidence_interval = wilson_interval(pt.full_group, pt.sampled);
        out.push_back(std::move(pt));
    }
    return out;
}

MultiplicityReport tuple_multiplicity(const BoxSpec& spec)
{
    const Box box(spec);
    std::map<std::vector<BigInt>, std::vector<Specialization>> fibers;
    const std::uint64_t total = box.size();
    for (std::uint64_t i = 0; i < total; ++i) {
        Specialization s = box.at(i);
        const IntPoly f = build(s).f_gamma;
        fibers[std::vector<BigInt>(f.coeffs().begin(), f.coeffs().end())].push_back(std::move(s));
    }
    MultiplicityReport r;
    r.tuples = total;
    r.polynomials = fibers.size();
    for (const auto& [coeffs, tuples] : fibers) {
        r.max_preimages = std::max<std::uint64_t>(r.max_preimages, tuples.size());
        ++r.histogram[tuples.size()];
        if (tuples.size() == 1) continue;
        if (tuples.size() > 2) {
            r.only_tau_pairs = false;
            continue;
        }
        const Specialization& a = tuples[0];
        const Specialization& b = tuples[1];
        if (a.alphas != b.alphas || a.alpha != b.alpha || a.tau != -b.tau) r.only_tau_pairs = false;
    }
    return r;
}

}  // namespace anforge
