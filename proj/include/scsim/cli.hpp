#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scsim::cli {

/// Entry point shared by the binary and the tests. Returns the process exit
/// code; 0 only when every requested output was produced.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace scsim::cli
