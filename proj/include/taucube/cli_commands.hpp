#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "taucube/types.hpp"

namespace taucube {

/// Runs the algebra identity suite and prints one row per identity:
/// name, residual, PASS/FAIL against tol. Returns 0 if every row passes, 1 otherwise.
int cmd_verify_algebra(double tol, std::ostream& out);

/// Tabulates C_m(alpha) for m = 0, 1, 2: closed form, `terms`-term series and their
/// difference, plus a completeness footer comparing sum_m C_m(alpha) with exp(alpha).
/// Returns 0.
int cmd_cfuncs(Complex alpha, int terms, std::ostream& out);

/// Loads a run config, evolves, writes the state CSV to the resolved output path and
/// a resolved-config echo to "<output>.meta.json". Returns 0 on success, 2 on config
/// problems (message on err names the field), 1 if the outputs cannot be written.
int cmd_evolve(const std::string& config_path, const std::string& output_override,
               std::ostream& err);

/// Splitting-error study for the configured run over the given step counts. Writes
/// "n,delta,max_error" CSV followed by a "# slope=..." comment with the fitted
/// log-log slope. Exit codes as for cmd_evolve.
int cmd_convergence(const std::string& config_path, const std::vector<std::size_t>& steps_list,
                    const std::string& output_override, std::ostream& err);

/// Least-squares slope of log(error) against log(delta). Points with error below
/// `floor` sit in roundoff noise and are excluded. Returns false (slope untouched)
/// if fewer than two usable points remain.
bool fit_log_slope(const std::vector<double>& delta, const std::vector<double>& error,
                   double floor, double& slope);

}  // namespace taucube
