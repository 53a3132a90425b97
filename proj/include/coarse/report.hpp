/**
 * Deterministic execution of a parsed config: one result block per
 * command, rendered as a human table and as a flat key-value report.
 * Two runs of the same config produce byte-identical output.
 */

#ifndef COARSE_REPORT_HPP
#define COARSE_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "coarse/config.hpp"

namespace coarse {

struct CommandResult {
    std::string text;                                         // command line as configured
    VerdictStatus contribution = VerdictStatus::Holds;        // feeds the exit code
    std::vector<std::pair<std::string, std::string>> entries; // stable keys, emission order
};

struct Report {
    std::string format = "coarse-report 1";
    std::string space_desc;
    JobParams params;
    std::vector<CommandResult> results;

    /** 0 all Hold, 2 some Fails, 3 some Inconclusive (and no Fails). */
    int exit_code() const;
    std::string human() const;
    /** Flat `key = value` lines; command keys bare for a single command, cmd<i>. prefixed otherwise. */
    std::string flat() const;
};

Report run(const JobConfig& config);

}  // namespace coarse

#endif  // COARSE_REPORT_HPP
