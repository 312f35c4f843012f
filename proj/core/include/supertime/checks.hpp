#pragma once

#include <cstdint>
#include <string>

#include "supertime/report.hpp"

namespace supertime {

/// Runs one verification section (algebra, osp, cpi, sec4, qpi, curvature,
/// or all) for the requested branch ("plus", "minus", "both"). Entries are
/// sorted by check_id; the whole report is deterministic in the seed.
VerificationReport run_checks(const std::string& section, const std::string& branch, uint64_t seed);

}  // namespace supertime
