#pragma once

#include <string>

#include "quiverh1/analysis.hpp"

namespace qh1 {

enum class ReportMode { Analyze, Criteria, Bracket, Verify };

/// Stable, diff-friendly plain text.
std::string render_text(const AnalysisReport& r, ReportMode mode);

/// Versioned machine-readable JSON (schema_version at top level).
std::string render_json(const AnalysisReport& r);

} // namespace qh1
