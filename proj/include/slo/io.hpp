#pragma once

#include <ostream>
#include <string>

#include "slo/harness.hpp"
#include "slo/league.hpp"
#include "slo/result.hpp"

namespace slo {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

/// CSV: header `season,best_wealthy,best_regular,best_weakest,global_best`,
/// one row per season. Baseline runs leave the tier columns empty.
void emit_trace_csv(const RunResult& result, std::ostream& out);
void emit_trace_csv(const RunResult& result, const std::string& path);

/// One JSON document with per-run rows and aggregates; the acceptance
/// report is included when given.
void emit_summary_json(const SummaryTable& summary, std::ostream& out,
                       const AcceptanceReport* acceptance = nullptr);
void emit_summary_json(const SummaryTable& summary, const std::string& path,
                       const AcceptanceReport* acceptance = nullptr);

/// CSV: `tier,team_index,dim_0,...,dim_{D-1},score` for every team,
/// wealthiest tier first.
void emit_snapshot(const League& league, std::ostream& out);
void emit_snapshot(const League& league, const std::string& path);

} // namespace slo
