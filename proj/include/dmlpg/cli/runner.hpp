#pragma once

#include "dmlpg/cli/config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dmlpg {

enum class Command { solve, study, compare };

Command parse_command(const std::string& name);
std::string to_string(Command command);

/// Artifacts written by a run, relative to the output directory.
struct RunOutcome {
    std::vector<std::string> files;
};

/// Executes one command and writes its artifacts to config.output_dir:
///  solve    finest listed level; profile_*.csv, solution.csv
///  study    convergence.csv over all levels, profiles of the finest level
///  compare  study with method and compare_method, convergence_<method>.csv
///           plus compare.csv (joined accuracy/cost table)
/// Every command writes summary.jsonl (one JSON record per line).
/// Module errors propagate as exceptions.
RunOutcome run(Command command, const RunConfig& config, std::ostream& log);

/// Process-level wrapper: returns 0 on success, 1 after printing a
/// diagnostic with node/point context to `err`.
int run_main(Command command, const RunConfig& config, std::ostream& log, std::ostream& err);

/// Diagnostic text for an exception, including node/point context when the
/// error carries it.
std::string describe_error(const std::exception& e);

}  // namespace dmlpg
