#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hardy::cli {

/// Runs the command-line tool. Exit status: 0 on success, 1 on a numerical failure or a
/// failed verification (diagnostic JSON on `out`), 2 on a usage or input error.
///
/// `--config file.json` reads {"command": "constant", "options": {"schedule": [4, 8, 16], ...}};
/// options given on the command line take precedence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
