#pragma once

#include "lagcal/power_series.hpp"

#include <string>
#include <vector>

namespace lagcal {

/// One checked identity.  `warning` carries non-fatal observations (the
/// branch-dependent phase factors of the fractional lowering identities);
/// warnings do not affect `passed`.
struct IdentityResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string warning;
};

/// The full identity matrix: eigenvalue, lowering, operator-power,
/// generating-function, operational-definition, degeneration, eigenrelation,
/// term-shift, and fractional lowering blocks.
std::vector<IdentityResult> run_identities();

/// Named series used for the serialization golden files; deterministic.
std::vector<std::pair<std::string, PhasedPowerSeries>> golden_series();

} // namespace lagcal
