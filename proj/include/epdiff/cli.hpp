#pragma once

#include <iosfwd>
#include <string>

namespace epdiff {

/// Loads the config file, runs the model, writes diagnostics.csv and
/// snapshot files into the output directory (EPDIFF_OUTPUT_DIR overrides the
/// configured one) and prints a final conservation summary. Returns 0 on
/// success, nonzero on config errors or aborted runs.
int cmd_run(const std::string& config_path, std::ostream& out, std::ostream& err);

/// Runs one verification suite (operators, greens, identities,
/// conservation); exit 0 iff every check passes.
int cmd_verify(const std::string& suite, std::ostream& out, std::ostream& err);

struct GreensTableOptions {
    double alpha = 1.0;
    double nu = 1.0;
    int dim = 1;
    double rmax = 5.0;
    std::size_t samples = 100;
};

/// Prints "r,G" CSV rows of the closed-form kernel to out.
int cmd_greens_table(const GreensTableOptions& opt, std::ostream& out, std::ostream& err);

} // namespace epdiff
