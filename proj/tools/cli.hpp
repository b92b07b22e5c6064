#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "multrans/checked.hpp"

namespace multrans::cli {

// Parsed flag surface. One subcommand per invocation; unused fields keep
// their defaults.
struct RunConfig {
    std::string subcommand;
    nat base = 0;
    nat multiplier = 0;
    std::string value;
    nat b_max = 0;
    nat m_max = 0;
    std::string digits;
    std::string algo = "both";
    nat workers = 1;
    nat n = 0;
    nat n_max = 0;
    std::string out_path;
    std::string format;
};

// Runs a validated config, writing the result to out. Throws on failure.
void run(const RunConfig& config, std::ostream& out);

// Parses args (no program name), runs, and maps failures to exit codes:
// 0 success, 1 execution error, 2 usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace multrans::cli
