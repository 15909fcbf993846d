#pragma once

#include "anforge/census.hpp"

#include <optional>
#include <string>
#include <vector>

namespace anforge {

struct CensusRun {
    std::vector<CountReport> reports;
    std::optional<GrowthFit> fit;
    bool timing = false;  ///< include runtime_seconds; off keeps output byte-stable
};

struct DensityRun {
    int n = 6;
    Parity parity = Parity::Even;
    int budget = 200;
    std::uint64_t sample_cap = 0;
    std::uint64_t seed = 0;
    std::vector<DensityPoint> points;
};

std::string census_json(const CensusRun& run);
/// Columns: Y, X, specializations, certified_an, distinct_fingerprints, max_abs_disc.
std::string census_csv(const CensusRun& run);
std::string census_text(const CensusRun& run);

std::string density_json(const DensityRun& run);
std::string density_csv(const DensityRun& run);
std::string density_text(const DensityRun& run);

/// Writes through a temporary sibling file and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace anforge
