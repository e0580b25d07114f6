#ifndef HUMBERT_TOOLS_CLI_ENGINE_HPP_
#define HUMBERT_TOOLS_CLI_ENGINE_HPP_

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace humbert_cli {

/// Run the command-line tool on the given arguments (without argv[0]).
/// Output goes to `out`, diagnostics to `err`. Returns the process exit
/// code: 0 success, 2 domain error (diagnostic names the violated
/// precondition), 64 usage error, 1 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Parse "RE" or "RE,IM" into a complex number; throws std::invalid_argument
/// on malformed input.
std::complex<double> parse_complex(const std::string& text);

/// Format with 17 significant digits (round-trip exact for doubles).
std::string format_double(double v);

}  // namespace humbert_cli

#endif  // HUMBERT_TOOLS_CLI_ENGINE_HPP_
