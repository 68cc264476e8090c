#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agility::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kValidationError = 2,
    kUsageError = 3,
};

/// Entry point of the `agility` tool; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agility::cli
