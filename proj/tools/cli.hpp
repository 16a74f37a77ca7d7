#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cullen::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_falsified = 2,
    exit_usage = 3,
    exit_io = 4,
};

/// Entry point shared by the binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cullen::cli
