#include "anforge/report.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace anforge {

using nlohmann::ordered_json;

namespace {

std::string fixed(double v, int places)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(places) << v;
    return out.str();
}

ordered_json report_json(const CountReport& r, bool timing)
{
    ordered_json j;
    j["Y"] = to_compact(r.box.Y);
    j["X"] = to_compact(r.X);
    j["limits"] = r.limits;
    j["specializations"] = r.specializations;
    j["degenerate"] = r.degenerate;
    j["certified_an"] = r.certified_an;
    j["reducible"] = r.reducible;
    j["odd"] = r.odd;
    j["inconclusive"] = r.inconclusive;
    j["distinct_fingerprints"] = r.distinct_fingerprints;
    j["incomplete_kernels"] = r.incomplete_kernels;
    j["max_abs_disc"] = r.max_abs_disc.get_str();
    ordered_json hist = ordered_json::object();
    for (const auto& [mult, count] : r.multiplicity_histogram) hist[std::to_string(mult)] = count;
    j["multiplicity_histogram"] = hist;
    j["height_constant"] = fixed(r.height_constant, 6);
    j["log_disc_bound"] = fixed(static_cast<double>(r.log_disc_bound), 6);
    if (timing) j["runtime_seconds"] = fixed(r.runtime_seconds, 3);
    return j;
}

}  // namespace

std::string census_json(const CensusRun& run)
{
    ordered_json j;
    j["schema"] = "census/1";
    j["kind"] = "count";
    if (!run.reports.empty()) {
        const auto& first = run.reports.front();
        j["n"] = first.box.n;
        j["parity"] = to_string(first.box.parity);
        j["budget"] = first.budget;
        j["k"] = first.k;
        j["exclude_degenerate"] = first.box.exclude_degenerate;
    }
    ordered_json reports = ordered_json::array();
    for (const auto& r : run.reports) reports.push_back(report_json(r, run.timing));
    j["reports"] = reports;
    if (run.fit) {
        ordered_json fit;
        fit["slope"] = fixed(run.fit->slope, 6);
        fit["intercept"] = fixed(run.fit->intercept, 6);
        fit["target"] = to_pq(run.fit->target);
        fit["target_decimal"] = to_decimal(run.fit->target, 6);
        j["fit"] = fit;
    }
    return j.dump(2) + "\n";
}

std::string census_csv(const CensusRun& run)
{
    std::ostringstream out;
    out << "Y,X,specializations,certified_an,distinct_fingerprints,max_abs_disc\n";
    for (const auto& r : run.reports)
        out << to_compact(r.box.Y) << ',' << to_compact(r.X) << ',' << r.specializations << ',' << r.certified_an << ','
            << r.distinct_fingerprints << ',' << r.max_abs_disc.get_str() << '\n';
    if (run.fit)
        out << "# slope " << fixed(run.fit->slope, 6) << " target " << to_pq(run.fit->target) << '\n';
    return out.str();
}

std::string census_text(const CensusRun& run)
{
    std::ostringstream out;
    for (const auto& r : run.reports) {
        out << "n=" << r.box.n << " " << to_string(r.box.parity) << " Y=" << to_compact(r.box.Y)
            << " X=" << to_compact(r.X) << "\n";
        out << "  specializations " << r.specializations << ", degenerate " << r.degenerate << "\n";
        out << "  certified A_n " << r.certified_an << ", reducible " << r.reducible << ", odd " << r.odd
            << ", inconclusive " << r.inconclusive << "\n";
        out << "  distinct fingerprints " << r.distinct_fingerprints << "\n";
        out << "  multiplicities";
        for (const auto& [mult, count] : r.multiplicity_histogram) out << ' ' << mult << 'x' << count;
        out << "\n";
        out << "  max |disc| has " << r.max_abs_disc.get_str().size() << " digits\n";
        if (run.timing) out << "  runtime " << fixed(r.runtime_seconds, 3) << " s\n";
    }
    if (run.fit)
        out << "slope " << fixed(run.fit->slope, 6) << " (target " << to_pq(run.fit->target) << " = "
            << to_decimal(run.fit->target, 6) << ")\n";
    return out.str();
}

std::string density_json(const DensityRun& run)
{
    ordered_json j;
    j["schema"] = "census/1";
    j["kind"] = "density";
    j["n"] = run.n;
    j["parity"] = to_string(run.parity);
    j["budget"] = run.budget;
    j["sample_cap"] = run.sample_cap;
    j["seed"] = run.seed;
    ordered_json pts = ordered_json::array();
    for (const auto& p : run.points) {
        ordered_json q;
        q["T"] = to_compact(p.T);
        q["e_vector"] = p.e_vector;
        q["box_size"] = p.box_size.get_str();
        q["exhaustive"] = p.exhaustive;
        q["sampled"] = p.sampled;
        q["full_group"] = p.full_group;
        q["estimate"] = to_pq(p.estimate);
        q["estimate_decimal"] = to_decimal(p.estimate, 6);
        q["confidence_interval"] = {fixed(p.confidence_interval.low, 6), fixed(p.confidence_interval.high, 6)};
        pts.push_back(q);
    }
    j["points"] = pts;
    return j.dump(2) + "\n";
}

std::string density_csv(const DensityRun& run)
{
    std::ostringstream out;
    out << "T,box_size,exhaustive,sampled,full_group,estimate,estimate_decimal,ci_low,ci_high\n";
    for (const auto& p : run.points)
        out << to_compact(p.T) << ',' << p.box_size.get_str() << ',' << (p.exhaustive ? 1 : 0) << ',' << p.sampled
            << ',' << p.full_group << ',' << to_pq(p.estimate) << ',' << to_decimal(p.estimate, 6) << ','
            << fixed(p.confidence_interval.low, 6) << ',' << fixed(p.confidence_interval.high, 6) << '\n';
    return out.str();
}

std::string density_text(const DensityRun& run)
{
    std::ostringstream out;
    out << "n=" << run.n << " " << to_string(run.parity) << " budget " << run.budget << " seed " << run.seed << "\n";
    for (const auto& p : run.points)
        out << "T=" << to_compact(p.T) << "  " << p.full_group << "/" << p.sampled << " = " << to_decimal(p.estimate, 6)
            << "  95% [" << fixed(p.confidence_interval.low, 6) << ", " << fixed(p.confidence_interval.high, 6) << "]"
            << (p.exhaustive ? "  exhaustive" : "  sampled") << "\n";
    return out.str();
}

void write_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

}  // namespace anforge
