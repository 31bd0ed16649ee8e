#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsg::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kBlowUp = 2, kIo = 3 };

/// args[0] is the program name. Output goes to out, diagnostics to err.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_dispatch(int argc, char** argv);

}  // namespace fsg::cli
