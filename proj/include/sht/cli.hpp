#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sht {

/// Runs one command line, without the program name. Returns the exit status:
/// 0 success, 1 validation or check failure, 2 I/O, schema or usage error,
/// 3 cutoff exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sht
