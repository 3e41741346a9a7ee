#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modelkit {

/* One invocation against the given streams. Returns the process exit code:
 * 0 success/verified, 1 verification failure or rejected operation, 2 usage
 * or input errors. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modelkit
