#ifndef PUCS_REPORT_IO_HPP
#define PUCS_REPORT_IO_HPP

#include <string>

#include "pucs/solver.hpp"
#include "pucs/verifier.hpp"

namespace pucs {

/// Structured solve report (JSON with stable key order). Non-finite
/// values are emitted as strings ("inf", "-inf", "nan").
std::string solve_report_to_json(const SolveReport& report, const Problem& problem);

/// CSV trace, one row per projection step:
///   orbit,sweep,k,i,tau,x1..xn,step,dist_C1..dist_Cm
std::string trace_to_csv(const SolveReport& report, const Problem& problem);

std::string combo_reports_to_json(const std::vector<ComboReport>& reports);

std::string condition_report_to_json(const ConditionReport& report);

}  // namespace pucs

#endif  // PUCS_REPORT_IO_HPP
