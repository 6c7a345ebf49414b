#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "charode/problem.hpp"
#include "charode/reducers.hpp"
#include "charode/verify.hpp"

namespace charode::io {

/// Parse and validate a problem file. Unknown keys are rejected; missing
/// required keys name the field. Throws ValidationError.
ProblemSpec load_spec(const nlohmann::json& doc);
ProblemSpec load_spec_file(const std::string& path);

/// CSV layout: header `x,t,u,status`, one row per node, row-major in x then
/// t, floats as %.12e.
void write_csv(const SolutionGrid& grid, std::ostream& out);
std::string csv_string(const SolutionGrid& grid);

/// Deterministic run report (sorted keys, no wall-clock content).
nlohmann::json make_report(const ProblemSpec& spec, const SolutionGrid& grid,
                           const ReducedODE* reduction, const verify::ResidualReport* residual);

}  // namespace charode::io
