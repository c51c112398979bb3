#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsarc {

/// Benchmark command line. `args` excludes the program name. Returns 0 when
/// no run ended with status error, 1 otherwise, and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace lsarc
