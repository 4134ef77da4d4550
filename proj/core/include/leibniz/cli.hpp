#ifndef LEIBNIZ_CLI_HPP
#define LEIBNIZ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz {

/// Full command dispatch.  `args` excludes the program name.  Reports go to
/// `out`, diagnostics to `err`.  Returns the process exit code:
///   0 success, 1 input error, 2 enumeration guard exceeded,
///   3 an audit command found failed claims (the report is still emitted).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz

#endif
