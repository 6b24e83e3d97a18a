#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blowup::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs `blowup` with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blowup::cli
