#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icegt {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kCapExceeded = 2, kUsage = 3 };

// Runs one command; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icegt
