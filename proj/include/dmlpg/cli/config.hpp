#pragma once

#include "dmlpg/assembly/system.hpp"
#include "dmlpg/benchmarks/problems.hpp"

#include <string>
#include <vector>

namespace dmlpg {

/// A validated run description.
///
/// Text format: one `key = value` per line; `#` starts a comment; blank lines
/// are ignored; keys may appear once. Lists (levels) are comma separated.
struct RunConfig {
    ProblemConfig problem;
    AssemblyOptions assembly;
    Method compare_method = Method::mlpg1;  // second method of `compare`
    std::vector<int> levels{0, 1, 2};
    std::string output_dir = "out";
    bool timings = true;  // false writes zero wall times for byte-stable CSVs
    bool dump = false;    // solve also writes nodes.txt and system.coo
};

/// Parses and validates. Throws ConfigError with line/column for syntax
/// errors and with the key name for unknown or invalid keys.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical key = value listing of every field (round-trips through
/// parse_config).
std::string format_config(const RunConfig& config);

/// All accepted keys.
const std::vector<std::string>& config_keys();

SubdomainShape parse_shape(const std::string& name);
std::string to_string(SubdomainShape shape);

}  // namespace dmlpg
