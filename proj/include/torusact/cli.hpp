#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torusact::cli {

/// Command-line entry point. Returns 0 on success, 2 on configuration
/// errors, 3 on precondition violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torusact::cli
