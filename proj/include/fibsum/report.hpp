#pragma once

/// Report rendering for the CLI: human table, canonical JSON, and TSV.
/// JSON and TSV carry the same information and are byte-deterministic for a
/// given run configuration (wall time appears only in the human table).

#include <string>
#include <vector>

#include "fibsum/verifier.hpp"

namespace fibsum {

enum class ReportFormat { human, json, tsv };

std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat format);

/// Verification exit-code contract: 0 when every report is clean, 1 otherwise.
int report_exit_code(const std::vector<VerificationReport>& reports);

}  // namespace fibsum
