#include "anforge/census.hpp"
#include "anforge/constructions.hpp"
#include "anforge/errors.hpp"
#include "anforge/exponents.hpp"
#include "anforge/galois.hpp"
#include "anforge/report.hpp"
#include "anforge/resultant.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace anforge;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kValidation = 2, kCap = 3, kInternal = 4 };

struct Global {
    int threads = 0;
    std::uint64_t seed = 0;
    std::string format;
    std::string output;
};

struct FamilyArgs {
    int n = 0;
    bool even = false;
    bool odd = false;
    std::string alphas;
    long alpha = 0;
    long tau = 1;
};

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw DomainError("empty entry in list '" + text + "'");
        out.push_back(item);
    }
    return out;
}

long parse_long(const std::string& s)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw DomainError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw DomainError("not an integer: '" + s + "'");
    return v;
}

std::vector<BigRat> parse_rat_list(const std::string& text)
{
    std::vector<BigRat> out;
    for (const auto& s : split(text)) out.push_back(parse_rat(s));
    return out;
}

Parity resolve_parity(const FamilyArgs& a)
{
    if (a.even && a.odd) throw DomainError("--even and --odd are exclusive");
    if (a.even) return Parity::Even;
    if (a.odd) return Parity::Odd;
    return parity_of(a.n);
}

Specialization make_spec(const FamilyArgs& a)
{
    Specialization s;
    s.n = a.n;
    s.parity = resolve_parity(a);
    if (!a.alphas.empty())
        for (const auto& v : split(a.alphas)) s.alphas.push_back(parse_long(v));
    s.alpha = a.alpha;
    s.tau = a.tau;
    validate(s);
    return s;
}

void validate_family(int n, Parity parity)
{
    if (n < 6) throw DomainError("n must be >= 6, got n = " + std::to_string(n));
    validate(Specialization{n, parity, std::vector<std::int64_t>(alpha_count(n)), 0, 1});
}

void emit(const Global& g, const std::string& content)
{
    if (g.output.empty())
        std::cout << content << std::flush;
    else
        write_atomic(g.output, content);
}

std::string format_or(const Global& g, const std::string& fallback, std::initializer_list<const char*> allowed)
{
    const std::string f = g.format.empty() ? fallback : g.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw DomainError("format '" + f + "' is not available for this command");
}

ordered_json poly_json(const RatPoly& p)
{
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_compact(c));
    return {{"text", render(p)}, {"ascending", coeffs}};
}

ordered_json poly_json(const IntPoly& p)
{
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return {{"text", render(p)}, {"ascending", coeffs}};
}

ordered_json spec_json(const Specialization& s)
{
    return {{"n", s.n}, {"parity", to_string(s.parity)}, {"alphas", s.alphas}, {"alpha", s.alpha}, {"tau", s.tau}};
}

std::string record_text(const ConstructionRecord& r)
{
    std::ostringstream out;
    out << describe(r.spec) << "\n";
    out << "h = " << render(r.h) << "\n";
    out << "g = " << render(r.g) << "\n";
    out << "f~ = " << render(r.f_tilde) << "\n";
    out << "gamma = " << to_compact(r.gamma) << "\n";
    out << "f~_gamma = " << render(r.f_tilde_gamma) << "\n";
    out << "f_gamma = " << render(r.f_gamma) << "\n";
    return out.str();
}

ordered_json record_json(const ConstructionRecord& r)
{
    ordered_json j;
    j["spec"] = spec_json(r.spec);
    j["h"] = poly_json(r.h);
    j["g"] = poly_json(r.g);
    j["f_tilde"] = poly_json(r.f_tilde);
    j["gamma"] = to_compact(r.gamma);
    j["f_tilde_gamma"] = poly_json(r.f_tilde_gamma);
    j["f_gamma"] = poly_json(r.f_gamma);
    return j;
}

RatPoly odd_identity(int n)
{
    const RatPoly x_minus_one({BigRat(-1), BigRat(1)});
    return power(x_minus_one, static_cast<unsigned>(n)) - RatPoly({BigRat(0), BigRat(n)});
}

int cmd_construct(const Global& g, const FamilyArgs& fam, bool reference, const std::string& perturb)
{
    const std::string fmt = format_or(g, "text", {"text", "json"});
    ordered_json j;
    j["schema"] = "construct/1";
    std::ostringstream text;
    if (reference) {
        const Parity parity = resolve_parity(fam);
        validate_family(fam.n, parity);
        if (parity == Parity::Even) {
            const ReferenceEven ref = reference_even(fam.n);
            const ConstructionRecord rec = build(ref.specialize(fam.tau));
            text << "reference h = " << render(ref.h) << "\n";
            text << "f~(1..r) =";
            ordered_json values = ordered_json::array();
            for (const auto& v : ref.values) {
                text << ' ' << to_compact(v);
                values.push_back(to_compact(v));
            }
            text << "\n" << record_text(rec);
            j["reference"] = {{"values", values}};
            j["record"] = record_json(rec);
        } else {
            const ReferenceOdd ref = reference_odd(fam.n, parse_rat(perturb));
            text << "perturbation = " << to_compact(ref.perturbation) << "\n";
            text << "betas =";
            for (const auto& b : ref.betas) text << ' ' << to_compact(b);
            text << "\nalpha = " << to_compact(ref.alpha) << "\n";
            text << "g-bar = " << render(ref.g_bar) << "\n";
            text << "p~ = " << render(ref.p_tilde) << "\n";
            const bool identity = ref.p_tilde == odd_identity(fam.n);
            if (identity) text << "p~ = (x-1)^" << fam.n << " - " << fam.n << "x\n";
            text << "p~'(betas) =";
            ordered_json slopes = ordered_json::array();
            for (const auto& s : ref.slopes_at_betas) {
                text << ' ' << to_compact(s);
                slopes.push_back(to_compact(s));
            }
            text << "\np~'(alpha) = " << to_compact(ref.slope_at_alpha) << "\n";
            text << "slopes pairwise distinct: " << (ref.slopes_pairwise_distinct() ? "yes" : "no") << "\n";
            j["reference"] = {{"perturbation", to_compact(ref.perturbation)},
                              {"alpha", to_compact(ref.alpha)},
                              {"g_bar", poly_json(ref.g_bar)},
                              {"p_tilde", poly_json(ref.p_tilde)},
                              {"matches_identity", identity},
                              {"slopes_at_betas", slopes},
                              {"slope_at_alpha", to_compact(ref.slope_at_alpha)},
                              {"slopes_pairwise_distinct", ref.slopes_pairwise_distinct()}};
        }
    } else {
        const Specialization spec = make_spec(fam);
        const ConstructionRecord rec = build(spec);
        text << record_text(rec);
        j["record"] = record_json(rec);
    }
    emit(g, fmt == "json" ? j.dump(2) + "\n" : text.str());
    return kOk;
}

int cmd_certify(const Global& g, const FamilyArgs& fam, const std::string& coeffs, int budget)
{
    const std::string fmt = format_or(g, "text", {"text", "json"});
    if (budget < 1) throw DomainError("--budget must be >= 1");
    IntPoly f;
    std::optional<Specialization> spec;
    if (!coeffs.empty()) {
        std::vector<BigInt> c;
        for (const auto& s : split(coeffs)) {
            BigInt v;
            if (v.set_str(s, 10) != 0) throw DomainError("not an integer: '" + s + "'");
            c.push_back(v);
        }
        f = IntPoly(std::move(c));
    } else {
        if (fam.n == 0) throw DomainError("certify needs --coeffs or --n with specialization flags");
        spec = make_spec(fam);
        f = build(*spec).f_gamma;
    }
    if (f.degree() < 5) throw DomainError("certify needs degree >= 5");
    const BigInt disc = discriminant(f);
    if (disc == 0) throw Degenerate("discriminant is zero");
    const GaloisCertificate cert = certify_an(f, disc, budget);

    ordered_json j;
    j["schema"] = "certify/1";
    if (spec) j["spec"] = spec_json(*spec);
    j["polynomial"] = poly_json(f);
    j["budget"] = budget;
    j["verdict"] = to_string(cert.verdict);
    j["disc_is_square"] = cert.disc_is_square;
    j["irreducibility"] = {{"status", to_string(cert.irreducibility.status)},
                           {"proof", cert.irreducibility.proof},
                           {"factor_degree", cert.irreducibility.factor_degree}};
    if (cert.irreducibility.status == Irreducibility::CertifiedReducible)
        j["irreducibility"]["factor"] = poly_json(cert.irreducibility.factor);
    j["primes_used"] = cert.primes_used;
    auto witness_json = [](const Witness& w) { return ordered_json{{"prime", w.prime}, {"type", w.type.str()}}; };
    if (cert.primitivity) j["primitivity_witness"] = witness_json(*cert.primitivity);
    if (cert.jordan) j["jordan_witness"] = witness_json(*cert.jordan);
    ordered_json ws = ordered_json::array();
    for (const auto& w : cert.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;

    std::ostringstream text;
    text << "f = " << render(f) << "\n";
    text << "verdict: " << to_string(cert.verdict) << "\n";
    text << "disc is square: " << (cert.disc_is_square ? "yes" : "no") << "\n";
    text << "irreducibility: " << to_string(cert.irreducibility.status);
    if (!cert.irreducibility.proof.empty()) text << " (" << cert.irreducibility.proof << ")";
    text << "\n";
    if (cert.primitivity) text << "primitivity witness: p=" << cert.primitivity->prime << " " << cert.primitivity->type.str() << "\n";
    if (cert.jordan) text << "jordan witness: p=" << cert.jordan->prime << " " << cert.jordan->type.str() << "\n";
    text << "primes used: " << cert.primes_used << "\n";
    emit(g, fmt == "json" ? j.dump(2) + "\n" : text.str());
    return kOk;
}

int cmd_census(const Global& g, const FamilyArgs& fam, const std::string& ys, const CensusOptions& base, bool fit,
               bool timing)
{
    const std::string fmt = format_or(g, "json", {"json", "csv", "text"});
    const Parity parity = resolve_parity(fam);
    validate_family(fam.n, parity);
    const std::vector<BigRat> y_list = parse_rat_list(ys);
    for (std::size_t i = 1; i < y_list.size(); ++i)
        if (!(y_list[i] > y_list[i - 1])) throw DomainError("--Y values must be strictly increasing");
    if (fit && y_list.size() < 2) throw DomainError("--fit needs at least two Y values");
    CensusOptions options = base;
    options.threads = g.threads;
    if (options.budget < 1 || options.k < 1) throw DomainError("--budget and --k must be >= 1");
    // refuse before any work if a box is over the cap
    for (const auto& y : y_list) {
        const BigInt count = Box({fam.n, parity, y, true}).count();
        if (count > BigInt(static_cast<unsigned long>(options.cap)))
            throw CapExceeded("box at Y=" + to_compact(y) + " has " + count.get_str() + " tuples, above the cap of " +
                                  std::to_string(options.cap),
                              count.get_str());
    }
    CensusRun run;
    run.timing = timing;
    for (const auto& y : y_list) run.reports.push_back(count_fields({fam.n, parity, y, true}, options));
    if (fit) run.fit = growth_fit(run.reports);
    emit(g, fmt == "json" ? census_json(run) : fmt == "csv" ? census_csv(run) : census_text(run));
    return kOk;
}

int cmd_density(const Global& g, const FamilyArgs& fam, const std::string& ts, const DensityOptions& base)
{
    const std::string fmt = format_or(g, "json", {"json", "csv", "text"});
    const Parity parity = resolve_parity(fam);
    validate_family(fam.n, parity);
    DensityOptions options = base;
    options.seed = g.seed;
    options.threads = g.threads;
    DensityRun run;
    run.n = fam.n;
    run.parity = parity;
    run.budget = options.budget;
    run.sample_cap = options.sample_cap;
    run.seed = options.seed;
    run.points = density_scan(fam.n, parity, parse_rat_list(ts), options);
    emit(g, fmt == "json" ? density_json(run) : fmt == "csv" ? density_csv(run) : density_text(run));
    return kOk;
}

int cmd_exponents(const Global& g, const std::string& range, bool check, bool decimals)
{
    const std::string fmt = format_or(g, "text", {"text", "csv", "json"});
    const auto parts = split(range);
    if (parts.size() != 2) throw DomainError("--range expects lo,hi");
    const long lo = parse_long(parts[0]);
    const long hi = parse_long(parts[1]);
    if (lo < 6 || hi < lo || hi > 100000) throw DomainError("--range needs 6 <= lo <= hi");
    const auto rows = comparison_table(static_cast<int>(lo), static_cast<int>(hi));
    std::vector<IdentityCheck> checks;
    if (check) checks = identity_suite(static_cast<int>(lo), static_cast<int>(hi));
    const bool all_ok = std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok; });

    std::string content;
    if (fmt == "json") {
        ordered_json j;
        j["schema"] = "exponents/1";
        ordered_json jr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json x;
            x["n"] = r.n;
            x["d"] = r.d;
            x["theorem1"] = to_pq(r.theorem1);
            x["ptbw"] = to_pq(r.ptbw);
            x["schmidt_e"] = to_pq(r.schmidt_e);
            x["param_count_C"] = to_pq(r.param_count_C);
            x["reduction"] = to_pq(r.reduction);
            x["best_possible_lower"] = to_pq(r.best_possible_lower);
            x["best_possible_upper_hypothesis"] = to_pq(r.best_possible_upper_hypothesis);
            x["larger"] = r.larger;
            jr.push_back(x);
        }
        j["rows"] = jr;
        if (check) {
            ordered_json jc = ordered_json::array();
            for (const auto& c : checks)
                jc.push_back({{"name", c.name}, {"ok", c.ok}, {"cases", c.cases}, {"first_failure", c.first_failure}});
            j["checks"] = jc;
        }
        content = j.dump(2) + "\n";
    } else {
        content = fmt == "csv" ? exponents_csv(rows, decimals) : exponents_text(rows, decimals);
        std::ostringstream summary;
        for (const auto& c : checks)
            summary << (c.ok ? "ok   " : "FAIL ") << c.name << " (" << c.cases << " cases)"
                    << (c.ok ? "" : ": " + c.first_failure) << "\n";
        if (fmt == "csv")
            std::cerr << summary.str();
        else
            content += summary.str();
    }
    emit(g, content);
    return all_ok ? kOk : kInternal;
}

void add_family(CLI::App* cmd, FamilyArgs& fam, bool with_values)
{
    cmd->add_option("--n", fam.n, "degree");
    cmd->add_flag("--even", fam.even, "even family");
    cmd->add_flag("--odd", fam.odd, "odd family");
    if (with_values) {
        cmd->add_option("--alphas", fam.alphas, "comma-separated alpha_1..alpha_m");
        cmd->add_option("--alpha", fam.alpha, "value of a");
        cmd->add_option("--tau", fam.tau, "value of t");
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Alternating-group polynomial families: construction, certification, census"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--threads", g.threads, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", g.seed, "sampling seed")->envname("AN_FORGE_SEED");
    app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", g.output, "output file, written atomically");

    FamilyArgs fam;
    bool reference = false;
    std::string perturb = "1/100";
    auto* construct = app.add_subcommand("construct", "build one specialization or a reference polynomial");
    add_family(construct, fam, true);
    construct->add_flag("--reference", reference, "reference specialization");
    construct->add_option("--perturb", perturb, "odd reference perturbation");

    std::string coeffs;
    int budget = 200;
    auto* certify = app.add_subcommand("certify", "certify Gal(f) = A_n");
    add_family(certify, fam, true);
    certify->add_option("--coeffs", coeffs, "ascending integer coefficients");
    certify->add_option("--budget", budget, "good primes to sample");

    std::string ys;
    CensusOptions census_opts;
    bool fit = false;
    bool timing = false;
    auto* census = app.add_subcommand("census", "count distinct fields in parameter boxes");
    add_family(census, fam, false);
    census->add_option("--Y", ys, "comma-separated box parameters")->required();
    census->add_option("--budget", census_opts.budget, "good primes per certification");
    census->add_option("--k", census_opts.k, "splitting primes per fingerprint");
    census->add_option("--cap", census_opts.cap, "largest box accepted");
    census->add_flag("--fit", fit, "append the log-log growth slope");
    census->add_flag("--timing", timing, "record runtimes (output no longer byte-stable)");

    std::string ts;
    DensityOptions density_opts;
    auto* density = app.add_subcommand("density", "certified-A_n proportion in growing boxes");
    add_family(density, fam, false);
    density->add_option("--T", ts, "comma-separated increasing box parameters")->required();
    density->add_option("--budget", density_opts.budget, "good primes per certification");
    density->add_option("--sample-cap", density_opts.sample_cap, "largest exhaustive box and sample size");

    std::string range = "6,20";
    bool check = false;
    bool decimals = false;
    auto* exponents = app.add_subcommand("exponents", "exact exponent table");
    exponents->add_option("--range", range, "lo,hi");
    exponents->add_flag("--check", check, "run the identity suite");
    exponents->add_flag("--decimals", decimals, "add 6-place decimal columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    const auto failing_spec = [&]() -> std::string {
        if (!(construct->parsed() || certify->parsed()) || fam.n == 0) return "";
        try {
            return describe(make_spec(fam));
        } catch (...) {
            return "";
        }
    };

    try {
        if (construct->parsed()) return cmd_construct(g, fam, reference, perturb);
        if (certify->parsed()) return cmd_certify(g, fam, coeffs, budget);
        if (census->parsed()) return cmd_census(g, fam, ys, census_opts, fit, timing);
        if (density->parsed()) return cmd_density(g, fam, ts, density_opts);
        if (exponents->parsed()) return cmd_exponents(g, range, check, decimals);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\nestimate: " << e.estimate() << " tuples\n";
        return kCap;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        const std::string s = failing_spec();
        if (!s.empty()) std::cerr << "specialization: " << s << "\n";
        return kInternal;
    } catch (const IntegralityError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        const std::string s = failing_spec();
        if (!s.empty()) std::cerr << "specialization: " << s << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
    return kValidation;
}
