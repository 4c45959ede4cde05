#pragma once

#include <string>

#include "stone/instance_io.hpp"

namespace stone {

/// Condition report for a loaded instance. Conditions whose premise fails
/// are null (C1 without JR, C2 without MI).
Json analyze_report(const Instance& inst);

/// Plain "key: value" rendering of analyze_report.
std::string report_text(const Json& report);

/// DOT digraph: one cluster per space, specialization covers inside
/// clusters, map arrows between them.
std::string spectrum_dot(const Instance& inst);

}  // namespace stone
