#pragma once

#include <string>

#include <json.hpp>

#include "fsurg/surgery.hpp"
#include "fsurg/sweeps.hpp"

namespace fsurg {

// One-line summary, e.g. "omega(5/1) = 9; complexity = 9 (omega <= 12)".
std::string omega_line(const OmegaReport& r);

// Multi-line breakdown for --explain.
std::string report_explain_text(const OmegaReport& r);

nlohmann::json report_to_json(const OmegaReport& r, bool include_breakdown = false);

std::string report_csv_header();
std::string report_csv_row(const OmegaReport& r);

nlohmann::json audit_to_json(const EnumerationAudit& audit);
nlohmann::json sweep_to_json(const SweepReport& report);

}  // namespace fsurg
