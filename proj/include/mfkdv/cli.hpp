#pragma once

#include <string>
#include <vector>

namespace mfkdv {

/// Exit codes: 0 success, 1 configuration or IO error, 2 numerical failure.
int run_cli(int argc, char** argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace mfkdv
